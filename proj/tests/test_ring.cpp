#include "concord/errors.hpp"
#include "concord/ring.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace concord;

namespace {

GroupRingElement random_element(std::mt19937_64& rng, const RingBase& base, int terms) {
    GroupRingElement e = GroupRingElement::zero(base);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int t = 0; t < terms; ++t) {
        Word w = support::random_word(rng, base.rank, 6);
        e = e + GroupRingElement::from_word(base, w, coef(rng));
    }
    return e;
}

} // namespace

TEST_CASE("element construction and text form") {
    RingBase zf = RingBase::free_group(4);
    CHECK(GroupRingElement::zero(zf).str() == "0");
    CHECK(GroupRingElement::one(zf).str() == "+1*1");
    CHECK(GroupRingElement::from_word(zf, Word::parse(4, "x1"), -2).str() == "-2*x1");
    CHECK(GroupRingElement::from_word(zf, Word::parse(4, "x1"), 0).is_zero());
    GroupRingElement e = GroupRingElement::from_word(zf, Word::parse(4, "x2")) -
                         GroupRingElement::one(zf);
    CHECK(e.str() == "-1*1 +1*x2");
    CHECK(e.augmentation() == 0);

    RingBase za = RingBase::free_abelian(3);
    CHECK(GroupRingElement::from_exponents(za, {1, 0, -2}).str() == "+1*t1 t3^-2");
    CHECK_THROWS_AS(GroupRingElement::from_exponents(za, {1, 0}), validation_error);
    CHECK_THROWS_AS(GroupRingElement::from_word(za, Word::parse(4, "x4")), validation_error);
}

TEST_CASE("ring laws hold on random elements") {
    auto rng = support::make_rng(21);
    for (const RingBase& base : {RingBase::free_group(4), RingBase::free_abelian(4),
                                 RingBase::solvable_quotient(4, 2)}) {
        for (int it = 0; it < 40; ++it) {
            GroupRingElement a = random_element(rng, base, 3);
            GroupRingElement b = random_element(rng, base, 3);
            GroupRingElement c = random_element(rng, base, 2);
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * GroupRingElement::one(base) == a);
            CHECK(GroupRingElement::one(base) * a == a);
            CHECK((a - a).is_zero());
            CHECK(a.scale(-2) == -(a + a));
            CHECK(a.augmentation() * b.augmentation() == (a * b).augmentation());
        }
    }
}

TEST_CASE("abelian base multiplication commutes") {
    auto rng = support::make_rng(22);
    RingBase za = RingBase::free_abelian(3);
    for (int it = 0; it < 40; ++it) {
        GroupRingElement a = GroupRingElement::zero(za);
        GroupRingElement b = GroupRingElement::zero(za);
        std::uniform_int_distribution<int> coef(-3, 3);
        std::uniform_int_distribution<std::int64_t> ex(-2, 2);
        for (int t = 0; t < 3; ++t) {
            a = a + GroupRingElement::from_exponents(za, {ex(rng), ex(rng), ex(rng)}, coef(rng));
            b = b + GroupRingElement::from_exponents(za, {ex(rng), ex(rng), ex(rng)}, coef(rng));
        }
        CHECK(a * b == b * a);
    }
}

TEST_CASE("involution is an anti-automorphism of order two") {
    auto rng = support::make_rng(23);
    RingBase zf = RingBase::free_group(4);
    for (int it = 0; it < 60; ++it) {
        GroupRingElement a = random_element(rng, zf, 3);
        GroupRingElement b = random_element(rng, zf, 3);
        CHECK(a.involution().involution() == a);
        CHECK((a + b).involution() == a.involution() + b.involution());
        CHECK((a * b).involution() == b.involution() * a.involution());
    }
    CHECK(GroupRingElement::from_word(zf, Word::parse(4, "x1 x2")).involution() ==
          GroupRingElement::from_word(zf, Word::parse(4, "x2^-1 x1^-1")));
}

TEST_CASE("word images collapse in solvable quotients") {
    RingBase q1 = RingBase::solvable_quotient(4, 1);
    Word c = commutator(Word::parse(4, "x1"), Word::parse(4, "x2"));
    CHECK(GroupRingElement::from_word(q1, c) == GroupRingElement::one(q1));
    Budget budget;
    CHECK(quotient_words_equal(Word::parse(4, "x1 x2"), Word::parse(4, "x2 x1"), 1, budget));
    CHECK_FALSE(quotient_words_equal(Word::parse(4, "x1"), Word::parse(4, "x2"), 1, budget));

    RingBase q2 = RingBase::solvable_quotient(4, 2);
    CHECK(GroupRingElement::from_word(q2, c) != GroupRingElement::one(q2));
    Word c2 = commutator(c, commutator(Word::parse(4, "x3"), Word::parse(4, "x4")));
    CHECK(GroupRingElement::from_word(q2, c2) == GroupRingElement::one(q2));
    CHECK_FALSE(
        quotient_words_equal(Word::parse(4, "x1 x2"), Word::parse(4, "x2 x1"), 2, budget));
}

TEST_CASE("homomorphisms act as ring maps") {
    auto rng = support::make_rng(24);
    GroupHom ab = GroupHom::abelianization(4);
    GroupHom tr = GroupHom::trivial(4, RingBase::free_abelian(2));
    GroupHom id = GroupHom::identity(4);
    RingBase zf = RingBase::free_group(4);
    for (int it = 0; it < 50; ++it) {
        GroupRingElement a = random_element(rng, zf, 3);
        GroupRingElement b = random_element(rng, zf, 3);
        for (const GroupHom* h : {&ab, &tr, &id}) {
            CHECK(apply_hom(*h, a * b) == apply_hom(*h, a) * apply_hom(*h, b));
            CHECK(apply_hom(*h, a + b) == apply_hom(*h, a) + apply_hom(*h, b));
        }
        CHECK(apply_hom(id, a) == a);
        CHECK(apply_hom(tr, a) ==
              GroupRingElement::constant(tr.target(), a.augmentation()));
    }
    Word w = Word::parse(4, "x1 x2^-1 x1^3");
    CHECK(apply_hom(ab, GroupRingElement::from_word(zf, w)) ==
          GroupRingElement::from_exponents(RingBase::free_abelian(4), {4, -1, 0, 0}));
}

TEST_CASE("exponent image homomorphisms") {
    GroupHom h = GroupHom::from_exponent_images(4, 2, {{1, 0}, {0, 1}, {1, 1}, {0, 0}});
    RingBase zf = RingBase::free_group(4);
    CHECK(apply_hom(h, GroupRingElement::from_word(zf, Word::parse(4, "x1 x3"))) ==
          GroupRingElement::from_exponents(RingBase::free_abelian(2), {2, 1}));
    CHECK(apply_hom(h, GroupRingElement::from_word(zf, Word::parse(4, "x4"))) ==
          GroupRingElement::one(RingBase::free_abelian(2)));
    CHECK_THROWS_AS(GroupHom::from_exponent_images(4, 2, {{1, 0}, {0, 1}}), validation_error);
    CHECK_THROWS_AS(GroupHom::from_exponent_images(4, 2, {{1}, {0, 1}, {1, 1}, {0, 0}}),
                    validation_error);
}

TEST_CASE("quotient projection homomorphism") {
    GroupHom pi2 = GroupHom::to_quotient(4, 2);
    RingBase zf = RingBase::free_group(4);
    Word c = commutator(Word::parse(4, "x1"), Word::parse(4, "x2"));
    Word c2 = commutator(c, commutator(Word::parse(4, "x3"), Word::parse(4, "x4")));
    CHECK(apply_hom(pi2, GroupRingElement::from_word(zf, c2)) ==
          GroupRingElement::one(RingBase::solvable_quotient(4, 2)));
    CHECK(apply_hom(pi2, GroupRingElement::from_word(zf, c)) !=
          GroupRingElement::one(RingBase::solvable_quotient(4, 2)));
}

TEST_CASE("pushing elements down the derived tower") {
    RingBase zf = RingBase::free_group(4);
    Word c = commutator(Word::parse(4, "x1"), Word::parse(4, "x2"));
    GroupRingElement e = GroupRingElement::from_word(zf, c) - GroupRingElement::one(zf);
    CHECK(push_to_derived_level(e, 1).is_zero());
    CHECK_FALSE(push_to_derived_level(e, 2).is_zero());
}
