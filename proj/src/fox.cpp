#include "concord/fox.hpp"

#include <map>
#include <utility>

namespace concord {

namespace {

void check_index(const Word& w, int i) {
    if (i < 1 || i > w.rank())
        throw validation_error("derivative index " + std::to_string(i) +
                               " outside 1.." + std::to_string(w.rank()));
}

// Letters of a reduced word as (gen, ±1) pairs.
std::vector<Syllable> letters_of(const Word& w) {
    std::vector<Syllable> out;
    for (const Syllable& s : w.syllables()) {
        std::int64_t n = s.exp > 0 ? s.exp : -s.exp;
        std::int64_t sign = s.exp > 0 ? 1 : -1;
        for (std::int64_t t = 0; t < n; ++t)
            out.push_back({s.gen, sign});
    }
    return out;
}

bool maps_to_zero_in_quotient(const GroupRingElement& e, int level, Budget& budget);

bool derived_membership_impl(const Word& w, int k, Budget& budget) {
    if (k <= 0)
        return true;
    budget.charge(w.length() + 1, "derived series membership");
    for (int i = 1; i <= w.rank(); ++i)
        if (w.exponent_sum(i) != 0)
            return false;
    if (k == 1)
        return true;

    using Key = std::pair<std::vector<Syllable>, int>;
    thread_local std::map<Key, bool> cache;
    Key key{w.syllables(), k};
    if (auto it = cache.find(key); it != cache.end()) {
        budget.charge(1, "derived series membership");
        return it->second;
    }

    bool ok = true;
    for (int i = 1; i <= w.rank() && ok; ++i)
        ok = maps_to_zero_in_quotient(fox(w, i), k - 1, budget);
    cache.emplace(std::move(key), ok);
    return ok;
}

// Whether the image of e (over Z[F]) vanishes in Z[F/F^(level)]: group the
// terms by equality in the quotient and check that every class sums to zero.
bool maps_to_zero_in_quotient(const GroupRingElement& e, int level, Budget& budget) {
    int rank = e.base().rank;
    if (level <= 0)
        return e.augmentation() == 0;
    if (level == 1) {
        std::map<std::vector<std::int64_t>, mpz_class> buckets;
        for (const auto& [m, c] : e.terms()) {
            budget.charge(1, "quotient term merge");
            buckets[m.to_word(rank).abelianization()] += c;
        }
        for (const auto& [v, c] : buckets)
            if (c != 0)
                return false;
        return true;
    }
    std::vector<std::pair<Word, mpz_class>> classes;
    for (const auto& [m, c] : e.terms()) {
        Word u = m.to_word(rank);
        bool merged = false;
        for (auto& [rep, coef] : classes) {
            budget.charge(1, "quotient term merge");
            if (derived_membership_impl(u * rep.inverse(), level, budget)) {
                coef += c;
                merged = true;
                break;
            }
        }
        if (!merged)
            classes.emplace_back(u, c);
    }
    for (const auto& [rep, coef] : classes)
        if (coef != 0)
            return false;
    return true;
}

} // namespace

GroupRingElement fox(const Word& w, int i) {
    check_index(w, i);
    RingBase base = RingBase::free_group(w.rank());
    GroupRingElement out = GroupRingElement::zero(base);
    Word prefix(w.rank());
    for (const Syllable& l : letters_of(w)) {
        // fox(prefix · letter) = fox(prefix) + fox(letter)·prefix^{-1}
        if (l.gen == i) {
            Word g = Word::generator(w.rank(), l.gen, l.exp);
            if (l.exp > 0) {
                out = out + GroupRingElement::from_word(base, prefix.inverse());
            } else {
                out = out - GroupRingElement::from_word(base, (prefix * g).inverse());
            }
        }
        prefix = prefix * Word::generator(w.rank(), l.gen, l.exp);
    }
    return out;
}

GroupRingElement fox_classical(const Word& w, int i) {
    check_index(w, i);
    RingBase base = RingBase::free_group(w.rank());
    GroupRingElement out = GroupRingElement::zero(base);
    Word prefix(w.rank());
    for (const Syllable& l : letters_of(w)) {
        // d(prefix · letter) = d(prefix) + prefix·d(letter)
        if (l.gen == i) {
            Word g = Word::generator(w.rank(), l.gen, l.exp);
            if (l.exp > 0) {
                out = out + GroupRingElement::from_word(base, prefix);
            } else {
                out = out - GroupRingElement::from_word(base, prefix * g);
            }
        }
        prefix = prefix * Word::generator(w.rank(), l.gen, l.exp);
    }
    return out;
}

GroupRingElement commutator_fox_closed_form(const Word& g, const Word& h, int i) {
    if (g.rank() != h.rank())
        throw validation_error("commutator closed form: rank mismatch");
    GroupRingElement dg = fox(g, i);
    GroupRingElement dh = fox(h, i);
    Word ghg = g * h.inverse() * g.inverse();
    Word hghg = h * ghg;
    return dg + dh.mul_word(g.inverse()) - dg.mul_word(ghg) - dh.mul_word(hghg);
}

GroupRingElement p_factor(const Word& w, const Word& x) {
    if (w.rank() != x.rank())
        throw validation_error("p_factor: rank mismatch");
    RingBase base = RingBase::free_group(w.rank());
    Word wx = conjugate(w, x);
    Word c = commutator(wx, w);
    GroupRingElement p = GroupRingElement::one(base);
    p = p + GroupRingElement::from_word(base, x * w.inverse());
    p = p - GroupRingElement::from_word(base, wx.inverse() * c);
    p = p - GroupRingElement::from_word(base, x * c);
    return p;
}

GroupRingElement q_factor(const Word& w_i, const Word& w_1) {
    if (w_i.rank() != w_1.rank())
        throw validation_error("q_factor: rank mismatch");
    RingBase base = RingBase::free_group(w_i.rank());
    GroupRingElement q = GroupRingElement::one(base);
    q = q - GroupRingElement::from_word(base, w_1.inverse() * commutator(w_1, w_i));
    return q;
}

bool derived_membership(const Word& w, int k, Budget* budget) {
    if (k < 0)
        throw validation_error("derived series level must be nonnegative");
    if (budget)
        return derived_membership_impl(w, k, *budget);
    Budget local;
    return derived_membership_impl(w, k, local);
}

bool quotient_words_equal(const Word& a, const Word& b, int level, Budget& budget) {
    if (a.rank() != b.rank())
        throw validation_error("quotient equality: rank mismatch");
    return derived_membership_impl(a * b.inverse(), level, budget);
}

} // namespace concord
