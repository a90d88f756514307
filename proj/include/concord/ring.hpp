#pragma once

#include "concord/errors.hpp"
#include "concord/word.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace concord {

enum class BaseKind { free_group, free_abelian, solvable_quotient };

// Describes which group a ring element lives over: Z[F], Z[Z^m], or
// Z[F/F^(k)] where F^(k) is the k-th derived subgroup.
struct RingBase {
    BaseKind kind;
    int rank;  // free/solvable: word rank (even, >= 2); abelian: m >= 0
    int level; // solvable only: k >= 0

    static RingBase free_group(int rank);
    static RingBase free_abelian(int m);
    static RingBase solvable_quotient(int rank, int level);

    bool is_group_base() const { return kind != BaseKind::free_abelian; }
    std::string str() const;

    friend bool operator==(const RingBase&, const RingBase&) = default;
};

// Group-element representative inside a ring term.  For group bases this is
// a reduced word; for abelian bases a sorted list of (generator, exponent)
// pairs with nonzero exponents.  Total order gives the canonical term order.
struct Monomial {
    std::vector<Syllable> syl;

    static Monomial identity() { return {}; }
    static Monomial from_word(const Word& w) { return {w.syllables()}; }
    static Monomial from_exponents(const std::vector<std::int64_t>& e);

    bool is_identity() const { return syl.empty(); }
    Word to_word(int rank) const;
    std::vector<std::int64_t> to_exponents(int m) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Element of Z[G].  Terms are kept canonical: no zero coefficients;
// representatives reduced (group bases) or exponent-sorted (abelian);
// solvable-quotient representatives merged whenever the word-problem oracle
// proves two of them equal in F/F^(k).
class GroupRingElement {
public:
    static GroupRingElement zero(const RingBase& base);
    static GroupRingElement one(const RingBase& base);
    static GroupRingElement constant(const RingBase& base, const mpz_class& c);
    static GroupRingElement from_word(const RingBase& base, const Word& w,
                                      const mpz_class& c = 1);
    static GroupRingElement from_exponents(const RingBase& base,
                                           const std::vector<std::int64_t>& e,
                                           const mpz_class& c = 1);

    const RingBase& base() const { return base_; }
    const std::map<Monomial, mpz_class>& terms() const { return terms_; }

    GroupRingElement operator+(const GroupRingElement& rhs) const;
    GroupRingElement operator-(const GroupRingElement& rhs) const;
    GroupRingElement operator-() const;
    GroupRingElement operator*(const GroupRingElement& rhs) const;
    GroupRingElement scale(const mpz_class& c) const;

    // Right multiplication by a group element (the Fox convention side).
    GroupRingElement mul_word(const Word& g) const;

    bool is_zero() const { return terms_.empty(); }
    mpz_class augmentation() const;
    GroupRingElement involution() const;

    bool operator==(const GroupRingElement& rhs) const;

    std::string str() const;

private:
    explicit GroupRingElement(RingBase base) : base_(base) {}
    void add_term(const Monomial& m, const mpz_class& c);
    void normalize();

    RingBase base_;
    std::map<Monomial, mpz_class> terms_;

    friend GroupRingElement apply_hom(const class GroupHom&, const GroupRingElement&);
    friend GroupRingElement push_to_derived_level(const GroupRingElement&, int);
};

// Group homomorphism given by generator images; induces a ring map.
class GroupHom {
public:
    // x_i -> t_i, F(rank) -> Z^rank.
    static GroupHom abelianization(int rank);
    // identity endomorphism of F(rank).
    static GroupHom identity(int rank);
    // everything -> identity element of the target group.
    static GroupHom trivial(int rank, const RingBase& target);
    // canonical projection F(rank) -> F/F^(level).
    static GroupHom to_quotient(int rank, int level);
    // free source, group target (free or solvable), explicit word images.
    static GroupHom from_word_images(int rank, const RingBase& target,
                                     std::vector<Word> images);
    // free source, abelian target, explicit exponent-vector images.
    static GroupHom from_exponent_images(int rank, int m,
                                         std::vector<std::vector<std::int64_t>> images);

    const RingBase& source() const { return source_; }
    const RingBase& target() const { return target_; }

    Monomial apply_to_monomial(const Monomial& m) const;
    Word apply_to_word(const Word& w) const;

private:
    GroupHom(RingBase source, RingBase target, std::vector<Monomial> images);

    RingBase source_;
    RingBase target_;
    std::vector<Monomial> images_;
};

GroupRingElement apply_hom(const GroupHom& h, const GroupRingElement& e);

// Pushes an element of Z[G] down to Z[G/G^(k)].  For abelian bases this is
// the identity for k >= 1 and the augmentation to Z (= Z[Z^0]) for k = 0.
GroupRingElement push_to_derived_level(const GroupRingElement& e, int k);

mpz_class augmentation(const GroupRingElement& e);
GroupRingElement involution(const GroupRingElement& e);
bool is_zero(const GroupRingElement& e);

// Word problem for F/F^(level); defined with the Fox machinery.  The budget
// guards the recursive membership criterion.
bool quotient_words_equal(const Word& a, const Word& b, int level, Budget& budget);

} // namespace concord
