#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace concord {

// Dense integer polynomial; coefficient i belongs to t^i.  Zero is the empty
// coefficient list (degree -1).
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<mpz_class> coeffs);
    static ZPoly constant(const mpz_class& c);
    static ZPoly monomial(const mpz_class& c, int deg);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    mpz_class coeff(int i) const;
    const mpz_class& leading() const;
    const std::vector<mpz_class>& coeffs() const { return c_; }

    ZPoly operator+(const ZPoly& rhs) const;
    ZPoly operator-(const ZPoly& rhs) const;
    ZPoly operator-() const;
    ZPoly operator*(const ZPoly& rhs) const;
    ZPoly scale(const mpz_class& k) const;

    mpz_class eval(const mpz_class& x) const;
    mpq_class eval(const mpq_class& x) const;

    ZPoly derivative() const;
    mpz_class content() const;      // gcd of coefficients (0 for zero poly)
    ZPoly primitive_part() const;
    ZPoly reversed() const;         // t^deg · p(1/t)
    bool is_palindromic() const;

    std::string str(const std::string& var = "t") const;

    friend bool operator==(const ZPoly&, const ZPoly&) = default;

private:
    void trim();
    std::vector<mpz_class> c_;
};

// Exact division in Z[t]; returns false when den does not divide num.
bool try_exact_div(const ZPoly& num, const ZPoly& den, ZPoly& quo);
ZPoly exact_div(const ZPoly& num, const ZPoly& den);

ZPoly zpoly_gcd(ZPoly a, ZPoly b);       // primitive, positive leading coeff
ZPoly squarefree_part(const ZPoly& p);   // primitive part of p / gcd(p, p')

ZPoly cyclotomic(int m);                 // memoized
std::vector<int> phi_sieve(int n);       // Euler phi for 0..n

// For palindromic p of even degree 2h: the unique q with p(t) = t^h·q(t + 1/t).
ZPoly palindromic_core(const ZPoly& p);

using IntMat = std::vector<std::vector<mpz_class>>;

mpz_class det_int(IntMat m);                                 // Bareiss
ZPoly det_poly(std::vector<std::vector<ZPoly>> m);           // Bareiss over Z[t]
ZPoly charpoly(const IntMat& m);                             // det(xI − M)

// #positive − #negative roots (with multiplicity) of a polynomial all of
// whose roots are real: Descartes' rule is exact in that case.
int signature_of_real_rooted(const ZPoly& chi);

// Sturm sequence of a squarefree integer polynomial, over Q (stored as
// integer polynomials scaled by positive rationals).
struct SturmChain {
    std::vector<ZPoly> polys;
    int variations(const mpq_class& x) const;
    // number of roots in the half-open interval (a, b]
    int count(const mpq_class& a, const mpq_class& b) const;
};
SturmChain sturm_chain(const ZPoly& squarefree);

// Isolated real root of a squarefree polynomial: either an exact rational or
// an open interval (lo, hi) containing exactly one root, with p(lo)p(hi) < 0.
struct RealRoot {
    bool exact;
    mpq_class value;
    mpq_class lo, hi;
};

// All roots in the open interval (a, b); requires p(a) ≠ 0 ≠ p(b).
std::vector<RealRoot> isolate_roots(const ZPoly& squarefree, const mpq_class& a,
                                    const mpq_class& b);
void refine_root(const ZPoly& squarefree, RealRoot& r);

// Certified enclosures: result interval [lo, hi] has width ≤ 2^-bits.
void pi_enclosure(long bits, mpq_class& lo, mpq_class& hi);
void cos_pi_enclosure(const mpq_class& r, long bits, mpq_class& lo, mpq_class& hi);

// 2·cos(2π·k/m) when it is rational (m ≤ 6 cases), otherwise nullopt.
std::optional<mpq_class> rational_two_cos_turn(long k, long m);

} // namespace concord
