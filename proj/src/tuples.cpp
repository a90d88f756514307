#include "concord/tuples.hpp"

#include "concord/errors.hpp"

#include <bit>
#include <numeric>
#include <string>

namespace concord {

TupleFamilyCursor::TupleFamilyCursor(int g, int n) : g_(g), n_(n) {
    if (g < 1)
        throw validation_error("genus must be at least 1");
    if (n < 0)
        throw validation_error("level must be nonnegative");
    if (n >= 1)
        digits_.assign(1 + static_cast<size_t>(n - 1) * (2 * g - 1), 0);
}

std::optional<Tuple> TupleFamilyCursor::next() {
    if (done_)
        return std::nullopt;
    Tuple t = materialize();
    if (digits_.empty()) {
        done_ = true;
        return t;
    }
    size_t pos = digits_.size() - 1;
    for (;;) {
        const int radix = pos == 0 ? 2 * g_ : 4 * g_ - 3;
        if (++digits_[pos] < radix)
            break;
        digits_[pos] = 0;
        if (pos == 0) {
            done_ = true;
            break;
        }
        --pos;
    }
    return t;
}

Tuple TupleFamilyCursor::materialize() const {
    const int rank = 2 * g_;
    Tuple t;
    t.genus = g_;
    t.level = n_;
    if (n_ == 0) {
        for (int i = 1; i <= rank; ++i)
            t.words.push_back(Word::generator(rank, i));
        return t;
    }
    const int i0 = digits_[0] + 1;
    t.pedigree.base_index = i0;
    for (int j = 1; j <= rank; ++j)
        if (j != i0)
            t.words.push_back(commutator(Word::generator(rank, i0), Word::generator(rank, j)));
    for (int lvl = 0; lvl < n_ - 1; ++lvl) {
        std::vector<Word> next;
        std::vector<ChoiceStep> steps;
        for (int slot = 1; slot <= rank - 1; ++slot) {
            const Word& w = t.words[static_cast<size_t>(slot - 1)];
            const int d = digits_[1 + static_cast<size_t>(lvl) * (rank - 1) +
                                  static_cast<size_t>(slot - 1)];
            if (d < rank - 1) {
                int j = d + 1;
                if (j >= slot)
                    ++j;
                next.push_back(commutator(w, conjugate(w, Word::generator(rank, j))));
                steps.push_back(ChoiceStep{true, j});
            } else {
                int k = d - (rank - 1) + 1;
                if (k >= slot)
                    ++k;
                next.push_back(commutator(w, t.words[static_cast<size_t>(k - 1)]));
                steps.push_back(ChoiceStep{false, k});
            }
        }
        t.words = std::move(next);
        t.pedigree.steps.push_back(std::move(steps));
    }
    return t;
}

TupleFamilyCursor generate_P(int g, int n) { return TupleFamilyCursor(g, n); }

mpz_class family_size(int g, int n) {
    if (g < 1)
        throw validation_error("genus must be at least 1");
    if (n < 0)
        throw validation_error("level must be nonnegative");
    if (n == 0)
        return 1;
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(4 * g - 3),
                  static_cast<unsigned long>(2 * g - 1) * static_cast<unsigned long>(n - 1));
    return 2 * g * pw;
}

GoodMatrix good_matrix(const Tuple& t, const GroupHom& r, int k) {
    if (t.level != k)
        throw validation_error("tuple level does not match the requested level k");
    if (r.source().kind != BaseKind::free_group || r.source().rank != 2 * t.genus)
        throw validation_error("homomorphism source must be the free group of rank 2g");
    if (k >= 1) {
        const RingBase& tgt = r.target();
        const bool factors =
            tgt.kind == BaseKind::free_abelian ||
            (tgt.kind == BaseKind::solvable_quotient && tgt.level <= k);
        if (!factors)
            throw validation_error(
                "target does not factor through the level-" + std::to_string(k) +
                " derived quotient; use an abelian target or a solvable one of level <= k");
    }
    const int rows = k == 0 ? 2 * t.genus : 2 * t.genus - 1;
    GoodMatrix m{r.target(), {}};
    m.entries.assign(static_cast<size_t>(rows), {});
    for (int row = 1; row <= rows; ++row)
        for (const Word& w : t.words)
            m.entries[static_cast<size_t>(row - 1)].push_back(apply_hom(r, fox(w, row)));
    return m;
}

GroupRingElement ring_det(const std::vector<std::vector<GroupRingElement>>& m,
                          const RingBase& base) {
    const unsigned n = static_cast<unsigned>(m.size());
    if (n == 0)
        return GroupRingElement::one(base);
    if (n > 24)
        throw validation_error("determinant size out of range");
    std::vector<std::optional<GroupRingElement>> memo(1u << n);
    auto rec = [&](auto&& self, unsigned mask) -> const GroupRingElement& {
        if (memo[mask])
            return *memo[mask];
        if (mask == 0) {
            memo[0] = GroupRingElement::one(base);
            return *memo[0];
        }
        const unsigned row = n - static_cast<unsigned>(std::popcount(mask));
        GroupRingElement acc = GroupRingElement::zero(base);
        int sign = 1;
        for (unsigned c = 0; c < n; ++c) {
            if (!(mask >> c & 1u))
                continue;
            GroupRingElement term = m[row][c] * self(self, mask & ~(1u << c));
            acc = sign > 0 ? acc + term : acc - term;
            sign = -sign;
        }
        memo[mask] = std::move(acc);
        return *memo[mask];
    };
    return rec(rec, (1u << n) - 1);
}

bool is_good(const Tuple& t, const GroupHom& r, int k) {
    GoodMatrix m = good_matrix(t, r, k);
    if (m.base.kind != BaseKind::free_abelian)
        throw validation_error(
            "right linear independence is decided only over free-abelian targets");
    if (m.rows() != m.cols())
        throw validation_error("good matrix is not square");
    return !ring_det(m.entries, m.base).is_zero();
}

namespace {

bool h1_nontrivial(const GroupHom& r, int i) {
    const int rank = r.source().rank;
    Monomial img = r.apply_to_monomial(Monomial::from_word(Word::generator(rank, i)));
    if (r.target().kind == BaseKind::free_abelian)
        return !img.is_identity();
    Word w = img.to_word(r.target().rank);
    for (int a = 1; a <= r.target().rank; ++a)
        if (w.exponent_sum(a) != 0)
            return true;
    return false;
}

bool image_trivial(const GroupHom& r, const Word& w, Budget& budget) {
    Monomial img = r.apply_to_monomial(Monomial::from_word(w));
    switch (r.target().kind) {
    case BaseKind::free_abelian:
    case BaseKind::free_group:
        return img.is_identity();
    case BaseKind::solvable_quotient:
        return derived_membership(img.to_word(r.target().rank), r.target().level, &budget);
    }
    return false;
}

} // namespace

SpecialResult find_special_tuple(const GroupHom& r, int n, Budget* budget) {
    Budget local;
    Budget& bud = budget ? *budget : local;
    if (r.source().kind != BaseKind::free_group)
        throw validation_error("homomorphism source must be a free group");
    if (n < 0)
        throw validation_error("level must be nonnegative");
    const int rank = r.source().rank;
    const int g = rank / 2;

    int pivot = 0;
    for (int i = rank; i >= 1; --i) {
        if (h1_nontrivial(r, i)) {
            pivot = i;
            break;
        }
    }
    if (pivot == 0)
        throw validation_error(
            "homomorphism is trivial on H_1; no generator can anchor a special tuple");

    SpecialCertificate cert;
    cert.pivot = pivot;
    cert.permutation.resize(static_cast<size_t>(rank));
    std::iota(cert.permutation.begin(), cert.permutation.end(), 1);
    std::swap(cert.permutation[static_cast<size_t>(pivot - 1)],
              cert.permutation[static_cast<size_t>(rank - 1)]);

    Tuple t;
    t.genus = g;
    t.level = n;
    if (n == 0) {
        for (int i = 1; i <= rank; ++i)
            t.words.push_back(Word::generator(rank, i));
        return SpecialResult{std::move(t), std::move(cert)};
    }

    t.pedigree.base_index = pivot;
    for (int j = 1; j <= rank; ++j)
        if (j != pivot)
            t.words.push_back(
                commutator(Word::generator(rank, pivot), Word::generator(rank, j)));

    for (int lvl = 2; lvl <= n; ++lvl) {
        std::vector<Word> next;
        std::vector<ChoiceStep> steps;
        for (size_t s = 0; s < t.words.size(); ++s) {
            const Word& w = t.words[s];
            const int slot = static_cast<int>(s) + 1;
            if (!image_trivial(r, w, bud)) {
                Word xs = Word::generator(rank, pivot);
                GroupRingElement img = apply_hom(r, p_factor(w, xs));
                if (img.is_zero())
                    throw validation_error("conjugation-step right factor vanishes at level " +
                                           std::to_string(lvl) +
                                           "; target cannot certify a special tuple");
                cert.choices.push_back(SpecialChoice{lvl, slot, true, pivot, img});
                steps.push_back(ChoiceStep{true, pivot});
                next.push_back(commutator(w, conjugate(w, xs)));
            } else {
                if (slot == 1)
                    throw validation_error(
                        "slot 1 has trivial image at level " + std::to_string(lvl) +
                        "; the construction cannot pair it with itself");
                GroupRingElement img = apply_hom(r, q_factor(w, t.words[0]));
                if (img.is_zero())
                    throw validation_error(
                        "pairing-step right factor vanishes at level " + std::to_string(lvl) +
                        "; the target collapses it (abelian targets stop at level 1)");
                cert.choices.push_back(SpecialChoice{lvl, slot, false, 1, img});
                steps.push_back(ChoiceStep{false, 1});
                next.push_back(commutator(w, t.words[0]));
            }
        }
        t.pedigree.steps.push_back(std::move(steps));
        t.words = std::move(next);
    }
    return SpecialResult{std::move(t), std::move(cert)};
}

} // namespace concord
