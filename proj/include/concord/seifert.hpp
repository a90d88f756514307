#pragma once

#include "concord/polynomial.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace concord {

// Integer Seifert matrix V of a genus-g surface: 2g×2g with det(V − Vᵀ) = 1.
class SeifertMatrix {
public:
    explicit SeifertMatrix(IntMat entries);

    static SeifertMatrix unknot();        // 0×0
    static SeifertMatrix trefoil();       // right-handed: [[-1,1],[0,-1]]
    static SeifertMatrix left_trefoil();  // mirror: [[1,0],[-1,1]]

    int genus() const { return static_cast<int>(v_.size()) / 2; }
    int size() const { return static_cast<int>(v_.size()); }
    const IntMat& entries() const { return v_; }
    const mpz_class& at(int i, int j) const {
        return v_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }

    friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

private:
    IntMat v_;
};

// det(tV − Vᵀ) normalized to lowest degree 0 and positive leading coefficient.
class AlexanderPolynomial {
public:
    explicit AlexanderPolynomial(const ZPoly& raw);

    int degree() const { return p_.degree(); }
    const ZPoly& poly() const { return p_; }
    mpz_class at(const mpz_class& x) const { return p_.eval(x); }
    bool equals_up_to_units(const ZPoly& other) const;
    std::string str() const { return p_.str("t"); }

    friend bool operator==(const AlexanderPolynomial&, const AlexanderPolynomial&) = default;

private:
    ZPoly p_;
};

AlexanderPolynomial alexander(const SeifertMatrix& v);

// Degree condition for planning at solvability level n: deg Δ > 2, except
// that n = 1 also admits deg Δ = 2.
bool degree_gate(const SeifertMatrix& v, int n);

// Arf invariant: 0 iff Δ(−1) ≡ ±1 (mod 8).
int arf(const SeifertMatrix& v);

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b);
SeifertMatrix mirror_reverse(const SeifertMatrix& v); // −Vᵀ

// tV − Vᵀ: square presentation matrix with entries of t-degree ≤ 1.
std::vector<std::vector<ZPoly>> localized_presentation(const SeifertMatrix& v);

// Connected components of the support graph (edges where V_ij ≠ 0 or
// V_ji ≠ 0); determinants and signatures split along these blocks.
std::vector<std::vector<int>> support_components(const SeifertMatrix& v);
IntMat principal_submatrix(const IntMat& m, const std::vector<int>& idx);

} // namespace concord
