#pragma once

#include "concord/fox.hpp"
#include "concord/ring.hpp"
#include "concord/word.hpp"

#include <optional>
#include <vector>

namespace concord {

// One construction step for a slot when passing from level k to k+1:
// either [w_i, w_i^{x_j}] (conjugated, index = j ∈ 1..2g, j ≠ slot) or
// [w_i, w_k] (plain, index = k ∈ 1..2g−1, k ≠ slot).
struct ChoiceStep {
    bool conjugated = false;
    int index = 0;

    friend bool operator==(const ChoiceStep&, const ChoiceStep&) = default;
};

struct Pedigree {
    int base_index = 0; // level ≥ 1: the common first argument of the level-1 tuple
    std::vector<std::vector<ChoiceStep>> steps; // one choice vector per level ≥ 2

    friend bool operator==(const Pedigree&, const Pedigree&) = default;
};

struct Tuple {
    int genus = 0;
    int level = 0;
    std::vector<Word> words; // 2g at level 0, otherwise 2g−1
    Pedigree pedigree;
};

// Lazy lexicographic enumeration of the recursive family P_n: the single
// generator tuple at level 0; the 2g tuples ([x_i, x_j])_{j≠i} at level 1;
// from then on every slot independently picks one of the 4g−3 steps above.
class TupleFamilyCursor {
public:
    TupleFamilyCursor(int g, int n);
    std::optional<Tuple> next();

    int genus() const { return g_; }
    int level() const { return n_; }

private:
    Tuple materialize() const;
    int g_, n_;
    bool done_ = false;
    std::vector<int> digits_;
};

TupleFamilyCursor generate_P(int g, int n);
mpz_class family_size(int g, int n);

// Matrix of Fox derivatives pushed through r: entry (row j, column i) is the
// image of fox(w_i, j); rows run over ∂_1..∂_{2g} at level 0 and ∂_1..∂_{2g−1}
// above it, so the matrix is always square.
struct GoodMatrix {
    RingBase base;
    std::vector<std::vector<GroupRingElement>> entries; // [row][col]

    int rows() const { return static_cast<int>(entries.size()); }
    int cols() const { return rows() == 0 ? 0 : static_cast<int>(entries[0].size()); }
};

GoodMatrix good_matrix(const Tuple& t, const GroupHom& r, int k);

// Right linear independence of the columns, decided exactly by a determinant
// over the commutative Laurent ring; only abelian targets are decidable here.
bool is_good(const Tuple& t, const GroupHom& r, int k);

// Laplace determinant over a commutative group-ring base (used by is_good).
GroupRingElement ring_det(const std::vector<std::vector<GroupRingElement>>& m,
                          const RingBase& base);

// Construction record for one slot of one level of the special-tuple search.
struct SpecialChoice {
    int level = 0; // the level being built (k+1)
    int slot = 0;
    bool conjugation = false;   // true: [w_i, w_i^{x_pivot}]; false: [w_i, w_1]
    int other = 0;              // pivot generator (conjugation) or 1
    GroupRingElement factor;    // nonzero image of the right factor p_i / q_i
};

struct SpecialCertificate {
    std::vector<int> permutation; // position p holds the generator acting as x_{p}
    int pivot = 0;                // generator with nontrivial image, acting as x_{2g}
    std::vector<SpecialChoice> choices;
};

struct SpecialResult {
    Tuple tuple;
    SpecialCertificate certificate;
};

// Replays the constructive search: pick a generator with nontrivial image,
// take its level-1 tuple, then extend slot-wise, choosing the conjugation
// step when the slot's image is nontrivial and the [w_i, w_1] step otherwise,
// certifying a nonzero right factor at every step.
SpecialResult find_special_tuple(const GroupHom& r, int n, Budget* budget = nullptr);

} // namespace concord
