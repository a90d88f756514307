#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace concord {

// One maximal run x_gen^exp in a reduced word.  gen is 1-based.
struct Syllable {
    int gen;
    std::int64_t exp;

    friend bool operator==(const Syllable&, const Syllable&) = default;
    friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

// Reduced word in the free group F of even rank >= 2 with basis x_1..x_rank.
// Always stored freely reduced: no zero exponents, no equal adjacent
// generators.  Equality and ordering are on the reduced form.
class Word {
public:
    explicit Word(int rank);

    static Word generator(int rank, int gen, std::int64_t exp = 1);
    static Word from_syllables(int rank, std::span<const Syllable> letters);

    // Text form: generators separated by whitespace, e.g. "x1 x2^-1 x1^3".
    // Empty (or all-whitespace) text is the identity.
    static Word parse(int rank, std::string_view text);

    int rank() const { return rank_; }
    const std::vector<Syllable>& syllables() const { return syllables_; }
    bool is_identity() const { return syllables_.empty(); }

    // Number of letters of the reduced form.
    std::int64_t length() const;

    Word operator*(const Word& rhs) const;
    Word inverse() const;
    Word pow(std::int64_t k) const;

    // Exponent-sum vector (image in Z^rank).
    std::vector<std::int64_t> abelianization() const;
    std::int64_t exponent_sum(int gen) const;

    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    int rank_;
    std::vector<Syllable> syllables_;
};

// [a, b] = a b a^-1 b^-1.
Word commutator(const Word& a, const Word& b);

// w^x = x^-1 w x.
Word conjugate(const Word& w, const Word& x);

} // namespace concord
