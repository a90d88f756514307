#include "concord/errors.hpp"
#include "concord/fox.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace concord;

namespace {

GroupRingElement elem(const std::string& text, const mpz_class& c = 1) {
    return GroupRingElement::from_word(RingBase::free_group(4), Word::parse(4, text), c);
}

} // namespace

TEST_CASE("letter rules") {
    Word x1 = Word::parse(4, "x1");
    CHECK(fox(x1, 1) == elem(""));
    CHECK(fox(x1, 2).is_zero());
    CHECK(fox(Word::parse(4, "x1^-1"), 1) == -elem("x1"));
    CHECK(fox_classical(x1, 1) == elem(""));
    CHECK(fox_classical(Word::parse(4, "x1^-1"), 1) == -elem("x1^-1"));
    CHECK(fox_classical(Word::parse(4, "x1 x2"), 2) == elem("x1"));
    CHECK(fox(Word(4), 3).is_zero());
    CHECK_THROWS_AS(fox(x1, 0), validation_error);
    CHECK_THROWS_AS(fox(x1, 5), validation_error);
}

TEST_CASE("product rules") {
    auto rng = support::make_rng(11);
    for (int it = 0; it < 150; ++it) {
        Word g = support::random_word(rng, 4, 14);
        Word h = support::random_word(rng, 4, 14);
        for (int i = 1; i <= 4; ++i) {
            CHECK(fox(g * h, i) == fox(g, i) + fox(h, i).mul_word(g.inverse()));
            CHECK(fox_classical(g * h, i) ==
                  fox_classical(g, i) + GroupRingElement::from_word(RingBase::free_group(4), g) *
                                            fox_classical(h, i));
        }
    }
}

TEST_CASE("classical fundamental identity") {
    auto rng = support::make_rng(12);
    RingBase zf = RingBase::free_group(4);
    for (int it = 0; it < 100; ++it) {
        Word w = support::random_word(rng, 4, 16);
        GroupRingElement sum = GroupRingElement::zero(zf);
        for (int i = 1; i <= 4; ++i) {
            GroupRingElement gi = GroupRingElement::from_word(zf, Word::generator(4, i)) -
                                  GroupRingElement::one(zf);
            sum = sum + fox_classical(w, i) * gi;
        }
        CHECK(sum == GroupRingElement::from_word(zf, w) - GroupRingElement::one(zf));
    }
}

TEST_CASE("the two conventions are exchanged by the involution") {
    auto rng = support::make_rng(13);
    for (int it = 0; it < 150; ++it) {
        Word w = support::random_word(rng, 4, 16);
        for (int i = 1; i <= 4; ++i)
            CHECK(fox(w, i) == fox_classical(w, i).involution());
    }
}

TEST_CASE("commutator closed form") {
    // g = x4, h = x_i, differentiating by i: x4^-1 - [x_i, x4], zero elsewhere.
    for (int i = 1; i <= 3; ++i) {
        Word g = Word::parse(4, "x4");
        Word h = Word::generator(4, i);
        GroupRingElement d = commutator_fox_closed_form(g, h, i);
        CHECK(d == elem("x4^-1") - GroupRingElement::from_word(RingBase::free_group(4),
                                                               commutator(h, g)));
        for (int j = 1; j <= 3; ++j)
            if (j != i)
                CHECK(commutator_fox_closed_form(g, h, j).is_zero());
    }
    auto rng = support::make_rng(14);
    for (int it = 0; it < 120; ++it) {
        Word g = support::random_word(rng, 4, 12);
        Word h = support::random_word(rng, 4, 12);
        CHECK(commutator_fox_closed_form(g, g, 1).is_zero());
        for (int i = 1; i <= 4; ++i)
            CHECK(commutator_fox_closed_form(g, h, i) == fox(commutator(g, h), i));
    }
}

TEST_CASE("conjugation factor") {
    Word w = Word::parse(4, "x1");
    Word x = Word::parse(4, "x4");
    CHECK(fox(commutator(w, conjugate(w, x)), 1) == fox(w, 1) * p_factor(w, x));
    CHECK(p_factor(Word(4), x).is_zero());
    auto rng = support::make_rng(15);
    for (int it = 0; it < 100; ++it) {
        Word g = support::random_word(rng, 4, 10);
        int xg = static_cast<int>(rng() % 4) + 1;
        Word conj = Word::generator(4, xg);
        GroupRingElement p = p_factor(g, conj);
        CHECK(p.augmentation() == 0);
        Word c = commutator(g, conjugate(g, conj));
        for (int j = 1; j <= 4; ++j)
            if (j != xg)
                CHECK(fox(c, j) == fox(g, j) * p);
    }
}

TEST_CASE("pairing factor") {
    auto rng = support::make_rng(16);
    RingBase zf = RingBase::free_group(4);
    for (int it = 0; it < 100; ++it) {
        Word wi = support::random_word(rng, 4, 10);
        Word w1 = support::random_word(rng, 4, 10);
        GroupRingElement q = q_factor(wi, w1);
        CHECK(q.augmentation() == 0);
        GroupRingElement cofactor =
            GroupRingElement::from_word(zf, wi.inverse()) -
            GroupRingElement::from_word(zf, commutator(w1, wi));
        Word c = commutator(wi, w1);
        for (int j = 1; j <= 4; ++j)
            CHECK(fox(c, j) == fox(wi, j) * q + fox(w1, j) * cofactor);
    }
    Word w = Word::parse(4, "x1 x2");
    CHECK(q_factor(w, w) ==
          GroupRingElement::one(zf) - GroupRingElement::from_word(zf, w.inverse()));
}

TEST_CASE("derived series membership") {
    Word c12 = commutator(Word::parse(4, "x1"), Word::parse(4, "x2"));
    Word c34 = commutator(Word::parse(4, "x3"), Word::parse(4, "x4"));
    CHECK(derived_membership(Word(4), 3));
    CHECK(derived_membership(c12, 0));
    CHECK(derived_membership(c12, 1));
    CHECK_FALSE(derived_membership(c12, 2));
    CHECK_FALSE(derived_membership(Word::parse(4, "x1"), 1));
    CHECK(derived_membership(commutator(c12, c34), 2));
    CHECK_FALSE(derived_membership(commutator(c12, Word::parse(4, "x3")), 2));
    CHECK(derived_membership(commutator(c12, c34), 1));
}

TEST_CASE("membership budget is enforced") {
    Word deep = commutator(commutator(Word::parse(4, "x1"), Word::parse(4, "x2")),
                           commutator(Word::parse(4, "x3"), Word::parse(4, "x4")));
    Budget tiny{3};
    CHECK_THROWS_AS(derived_membership(deep, 2, &tiny), budget_error);
}
