#include "concord/word.hpp"

#include "concord/errors.hpp"

#include <charconv>
#include <cstdlib>

namespace concord {

namespace {

void check_rank(int rank) {
    if (rank < 2 || rank % 2 != 0)
        throw validation_error("word rank must be even and at least 2, got " +
                               std::to_string(rank));
}

void push_reduced(std::vector<Syllable>& out, int gen, std::int64_t exp) {
    if (exp == 0)
        return;
    if (!out.empty() && out.back().gen == gen) {
        out.back().exp += exp;
        if (out.back().exp == 0)
            out.pop_back();
        return;
    }
    out.push_back({gen, exp});
}

} // namespace

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word Word::generator(int rank, int gen, std::int64_t exp) {
    Syllable s{gen, exp};
    return from_syllables(rank, std::span<const Syllable>(&s, 1));
}

Word Word::from_syllables(int rank, std::span<const Syllable> letters) {
    Word w(rank);
    for (const Syllable& s : letters) {
        if (s.gen < 1 || s.gen > rank)
            throw validation_error("generator index " + std::to_string(s.gen) +
                                   " outside 1.." + std::to_string(rank));
        push_reduced(w.syllables_, s.gen, s.exp);
    }
    return w;
}

Word Word::parse(int rank, std::string_view text) {
    std::vector<Syllable> letters;
    size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] != 'x')
            throw validation_error("expected generator like x1 at \"" +
                                   std::string(text.substr(i)) + "\"");
        ++i;
        int gen = 0;
        auto [p1, e1] = std::from_chars(text.data() + i, text.data() + text.size(), gen);
        if (e1 != std::errc() || p1 == text.data() + i)
            throw validation_error("missing generator index after 'x' in word text");
        i = static_cast<size_t>(p1 - text.data());
        std::int64_t exp = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            auto [p2, e2] =
                std::from_chars(text.data() + i, text.data() + text.size(), exp);
            if (e2 != std::errc() || p2 == text.data() + i)
                throw validation_error("missing exponent after '^' in word text");
            i = static_cast<size_t>(p2 - text.data());
        }
        if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
            throw validation_error("unexpected character '" + std::string(1, text[i]) +
                                   "' in word text");
        letters.push_back({gen, exp});
    }
    return from_syllables(rank, letters);
}

std::int64_t Word::length() const {
    std::int64_t n = 0;
    for (const Syllable& s : syllables_)
        n += std::llabs(s.exp);
    return n;
}

Word Word::operator*(const Word& rhs) const {
    if (rank_ != rhs.rank_)
        throw validation_error("cannot multiply words of different ranks");
    Word out(rank_);
    out.syllables_ = syllables_;
    for (const Syllable& s : rhs.syllables_)
        push_reduced(out.syllables_, s.gen, s.exp);
    return out;
}

Word Word::inverse() const {
    Word out(rank_);
    out.syllables_.reserve(syllables_.size());
    for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
        out.syllables_.push_back({it->gen, -it->exp});
    return out;
}

Word Word::pow(std::int64_t k) const {
    Word base = k < 0 ? inverse() : *this;
    std::int64_t n = k < 0 ? -k : k;
    Word acc(rank_);
    for (std::int64_t i = 0; i < n; ++i)
        acc = acc * base;
    return acc;
}

std::vector<std::int64_t> Word::abelianization() const {
    std::vector<std::int64_t> v(static_cast<size_t>(rank_), 0);
    for (const Syllable& s : syllables_)
        v[static_cast<size_t>(s.gen - 1)] += s.exp;
    return v;
}

std::int64_t Word::exponent_sum(int gen) const {
    std::int64_t n = 0;
    for (const Syllable& s : syllables_)
        if (s.gen == gen)
            n += s.exp;
    return n;
}

std::string Word::str() const {
    std::string out;
    for (const Syllable& s : syllables_) {
        if (!out.empty())
            out += ' ';
        out += 'x';
        out += std::to_string(s.gen);
        if (s.exp != 1) {
            out += '^';
            out += std::to_string(s.exp);
        }
    }
    return out;
}

Word commutator(const Word& a, const Word& b) {
    return a * b * a.inverse() * b.inverse();
}

Word conjugate(const Word& w, const Word& x) { return x.inverse() * w * x; }

} // namespace concord
