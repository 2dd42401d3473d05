#include "cword/morphism.hpp"

#include "cword/errors.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cword {

Morphism::Morphism(AlphabetPtr source, AlphabetPtr target, std::vector<std::string> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (!source_ || !target_)
        throw std::invalid_argument("morphism requires source and target alphabets");
    if (images_.size() != source_->size())
        throw std::invalid_argument("morphism needs exactly one image per source letter");
    min_image_len_ = std::numeric_limits<std::size_t>::max();
    max_image_len_ = 0;
    for (const std::string& img : images_) {
        if (!target_->covers(img))
            throw std::invalid_argument("morphism image contains a letter outside the target alphabet");
        min_image_len_ = std::min(min_image_len_, img.size());
        max_image_len_ = std::max(max_image_len_, img.size());
    }
}

Morphism Morphism::identity(AlphabetPtr alphabet) {
    std::vector<std::string> images;
    images.reserve(alphabet->size());
    for (char x : alphabet->symbols())
        images.emplace_back(1, x);
    AlphabetPtr target = alphabet;
    return Morphism(std::move(alphabet), std::move(target), std::move(images));
}

const std::string& Morphism::image(char letter) const {
    int r = source_->rank(letter);
    if (r < 0)
        throw std::invalid_argument("letter is not in the morphism's source alphabet");
    return images_[static_cast<std::size_t>(r)];
}

std::vector<char> Morphism::prolongable_letters() const {
    std::vector<char> out;
    if (!is_endomorphism())
        return out;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        char x = source_->symbols()[i];
        if (images_[i].size() >= 2 && images_[i][0] == x)
            out.push_back(x);
    }
    return out;
}

std::string Morphism::apply(std::string_view w) const {
    std::size_t total = 0;
    for (char x : w) {
        int r = source_->rank(x);
        if (r < 0)
            throw std::invalid_argument("letter is not in the morphism's source alphabet");
        total += images_[static_cast<std::size_t>(r)].size();
    }
    std::string out;
    out.reserve(total);
    for (char x : w)
        out += images_[static_cast<std::size_t>(source_->rank(x))];
    return out;
}

Word Morphism::apply(const Word& w) const {
    if (*w.alphabet() != *source_)
        throw std::invalid_argument("word alphabet does not match the morphism's source");
    return Word(target_, apply(w.view()));
}

bool Morphism::operator==(const Morphism& other) const {
    return *source_ == *other.source_ && *target_ == *other.target_ && images_ == other.images_;
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
    if (*inner.target() != *outer.source())
        throw std::invalid_argument("composition requires inner target = outer source");
    std::vector<std::string> images;
    images.reserve(inner.images().size());
    for (const std::string& img : inner.images())
        images.push_back(outer.apply(img));
    return Morphism(inner.source(), outer.target(), std::move(images));
}

Morphism power(const Morphism& m, unsigned n) {
    if (!m.is_endomorphism())
        throw std::invalid_argument("powers are defined only for endomorphisms");
    Morphism acc = Morphism::identity(m.source());
    for (unsigned i = 0; i < n; ++i)
        acc = compose(m, acc);
    return acc;
}

FixedPointStream::FixedPointStream(Morphism m, char seed) : morphism_(std::move(m)), seed_(seed) {
    std::vector<char> ok = morphism_.prolongable_letters();
    if (std::find(ok.begin(), ok.end(), seed) == ok.end())
        throw std::invalid_argument("seed letter is not prolongable for this morphism");
    buffer_ = morphism_.image(seed); // starts with seed, so already a fixed-point prefix
    expanded_ = 1;
}

void FixedPointStream::ensure(std::size_t min_len) {
    while (buffer_.size() < min_len) {
        if (expanded_ == buffer_.size())
            throw std::runtime_error("fixed point is finite; cannot extend further");
        // Expanding in place is safe: the image of the prefix read so far is a
        // prefix of the (longer) buffer, so the write position stays ahead of
        // the read position.
        buffer_ += morphism_.image(buffer_[expanded_++]);
    }
}

std::string fixed_point_prefix(const Morphism& m, char seed, std::size_t min_len) {
    FixedPointStream stream(m, seed);
    if (min_len == 0)
        return std::string();
    stream.ensure(min_len);
    return stream.buffer().substr(0, min_len);
}

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

void append_new_letters(std::string& order, std::string_view letters) {
    for (char x : letters)
        if (order.find(x) == std::string::npos)
            order.push_back(x);
}

} // namespace

Morphism parse_morphism(std::string_view text) {
    std::string declared;       // from an `alphabet:` header, if any
    bool have_declared = false;
    std::string lhs_order;      // left-hand letters, first appearance
    std::string rhs_order;      // image letters, first appearance
    std::vector<std::pair<char, std::string>> rules;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = strip(line);
        if (line.empty())
            continue;

        constexpr std::string_view header = "alphabet:";
        if (line.substr(0, header.size()) == header) {
            if (have_declared)
                throw parse_error("duplicate alphabet header", line_no);
            std::string_view letters = strip(line.substr(header.size()));
            if (letters.empty())
                throw parse_error("alphabet header declares no letters", line_no);
            for (std::size_t i = 0; i < letters.size(); ++i)
                if (letters.find(letters[i], i + 1) != std::string_view::npos)
                    throw parse_error("alphabet header repeats a letter", line_no);
            declared.assign(letters);
            have_declared = true;
            continue;
        }

        std::size_t arrow = line.find("->");
        if (arrow == std::string_view::npos)
            throw parse_error("expected `letter -> image`", line_no);
        std::string_view lhs = strip(line.substr(0, arrow));
        std::string_view rhs = strip(line.substr(arrow + 2));
        if (lhs.size() != 1)
            throw parse_error("left-hand side must be a single letter", line_no);
        char letter = lhs[0];
        for (const auto& [seen, _] : rules)
            if (seen == letter)
                throw parse_error("duplicate rule for a letter", line_no);
        if (have_declared && declared.find(letter) == std::string::npos)
            throw parse_error("rule letter is not in the declared alphabet", line_no);
        append_new_letters(lhs_order, lhs);
        append_new_letters(rhs_order, rhs);
        rules.emplace_back(letter, std::string(rhs));
    }

    if (rules.empty())
        throw parse_error("morphism definition has no rules", line_no == 0 ? 1 : line_no);

    std::string source_letters = have_declared ? declared : lhs_order;
    AlphabetPtr source = make_alphabet(source_letters);

    std::vector<std::string> images(source->size());
    std::vector<bool> filled(source->size(), false);
    for (auto& [letter, image] : rules) {
        std::size_t r = static_cast<std::size_t>(source->rank(letter));
        images[r] = std::move(image);
        filled[r] = true;
    }
    for (std::size_t i = 0; i < filled.size(); ++i)
        if (!filled[i])
            throw parse_error(std::string("no rule for letter `") + source->symbols()[i] + "`",
                              line_no == 0 ? 1 : line_no);

    bool images_within_source = std::all_of(rhs_order.begin(), rhs_order.end(),
                                            [&](char x) { return source->contains(x); });
    AlphabetPtr target = images_within_source ? source : make_alphabet(rhs_order);
    return Morphism(std::move(source), std::move(target), std::move(images));
}

std::string format_morphism(const Morphism& m) {
    std::string out;
    for (std::size_t i = 0; i < m.images().size(); ++i) {
        out.push_back(m.source()->symbols()[i]);
        out += " -> ";
        out += m.images()[i];
        out.push_back('\n');
    }
    return out;
}

} // namespace cword
