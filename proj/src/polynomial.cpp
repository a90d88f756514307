#include "concord/polynomial.hpp"

#include "concord/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace concord {

void ZPoly::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

ZPoly::ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::constant(const mpz_class& c) {
    return ZPoly(std::vector<mpz_class>{c});
}

ZPoly ZPoly::monomial(const mpz_class& c, int deg) {
    std::vector<mpz_class> v(static_cast<size_t>(deg) + 1, 0);
    v.back() = c;
    return ZPoly(std::move(v));
}

mpz_class ZPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return 0;
    return c_[static_cast<size_t>(i)];
}

const mpz_class& ZPoly::leading() const {
    static const mpz_class zero = 0;
    return c_.empty() ? zero : c_.back();
}

ZPoly ZPoly::operator+(const ZPoly& rhs) const {
    std::vector<mpz_class> v(std::max(c_.size(), rhs.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i)
        v[i] += c_[i];
    for (size_t i = 0; i < rhs.c_.size(); ++i)
        v[i] += rhs.c_[i];
    return ZPoly(std::move(v));
}

ZPoly ZPoly::operator-(const ZPoly& rhs) const { return *this + (-rhs); }

ZPoly ZPoly::operator-() const {
    std::vector<mpz_class> v = c_;
    for (auto& x : v)
        x = -x;
    return ZPoly(std::move(v));
}

ZPoly ZPoly::operator*(const ZPoly& rhs) const {
    if (c_.empty() || rhs.c_.empty())
        return {};
    std::vector<mpz_class> v(c_.size() + rhs.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < rhs.c_.size(); ++j)
            v[i + j] += c_[i] * rhs.c_[j];
    return ZPoly(std::move(v));
}

ZPoly ZPoly::scale(const mpz_class& k) const {
    std::vector<mpz_class> v = c_;
    for (auto& x : v)
        x *= k;
    return ZPoly(std::move(v));
}

mpz_class ZPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

mpq_class ZPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

ZPoly ZPoly::derivative() const {
    if (c_.size() <= 1)
        return {};
    std::vector<mpz_class> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        v[i - 1] = c_[i] * static_cast<long>(i);
    return ZPoly(std::move(v));
}

mpz_class ZPoly::content() const {
    mpz_class g = 0;
    for (const auto& x : c_)
        g = gcd(g, x);
    return g;
}

ZPoly ZPoly::primitive_part() const {
    if (c_.empty())
        return {};
    mpz_class g = content();
    if (leading() < 0)
        g = -g;
    std::vector<mpz_class> v = c_;
    for (auto& x : v)
        x /= g;
    return ZPoly(std::move(v));
}

ZPoly ZPoly::reversed() const {
    std::vector<mpz_class> v(c_.rbegin(), c_.rend());
    return ZPoly(std::move(v));
}

bool ZPoly::is_palindromic() const { return *this == reversed(); }

std::string ZPoly::str(const std::string& var) const {
    if (c_.empty())
        return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        mpz_class a = coeff(i);
        if (a == 0)
            continue;
        if (!out.empty())
            out += (a < 0) ? " - " : " + ";
        else if (a < 0)
            out += "-";
        mpz_class m = abs(a);
        bool show_coef = (m != 1) || i == 0;
        if (show_coef)
            out += m.get_str();
        if (i > 0) {
            if (show_coef)
                out += "*";
            out += var;
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

bool try_exact_div(const ZPoly& num, const ZPoly& den, ZPoly& quo) {
    if (den.is_zero())
        throw validation_error("polynomial division by zero");
    if (num.is_zero()) {
        quo = {};
        return true;
    }
    if (num.degree() < den.degree())
        return false;
    std::vector<mpq_class> rem(num.coeffs().begin(), num.coeffs().end());
    int dn = num.degree(), dd = den.degree();
    std::vector<mpq_class> q(static_cast<size_t>(dn - dd) + 1, 0);
    mpq_class lead(den.leading());
    for (int i = dn; i >= dd; --i) {
        mpq_class f = rem[static_cast<size_t>(i)] / lead;
        q[static_cast<size_t>(i - dd)] = f;
        if (f == 0)
            continue;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<size_t>(i - dd + j)] -= f * mpq_class(den.coeff(j));
    }
    for (int i = 0; i < dd; ++i)
        if (rem[static_cast<size_t>(i)] != 0)
            return false;
    std::vector<mpz_class> qz(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        if (q[i].get_den() != 1)
            return false;
        qz[i] = q[i].get_num();
    }
    quo = ZPoly(std::move(qz));
    return true;
}

ZPoly exact_div(const ZPoly& num, const ZPoly& den) {
    ZPoly q;
    if (!try_exact_div(num, den, q))
        throw validation_error("polynomial division was not exact");
    return q;
}

namespace {

// Pseudo-remainder: lc(b)^(deg a − deg b + 1) · a ≡ prem (mod b).
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
    int dd = b.degree();
    while (!a.is_zero() && a.degree() >= dd) {
        int shift = a.degree() - dd;
        ZPoly t = ZPoly::monomial(a.leading(), shift) * b;
        a = a.scale(b.leading()) - t;
    }
    return a;
}

// Divides by the (positive) content, preserving the sign of the polynomial.
ZPoly positive_primitive(const ZPoly& p) {
    if (p.is_zero())
        return {};
    mpz_class g = p.content();
    std::vector<mpz_class> v = p.coeffs();
    for (auto& x : v)
        x /= g;
    return ZPoly(std::move(v));
}

} // namespace

ZPoly zpoly_gcd(ZPoly a, ZPoly b) {
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.degree() < b.degree())
        std::swap(a, b);
    while (!b.is_zero()) {
        ZPoly r = pseudo_rem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

ZPoly squarefree_part(const ZPoly& p) {
    ZPoly pp = p.primitive_part();
    if (pp.degree() <= 1)
        return pp;
    ZPoly g = zpoly_gcd(pp, pp.derivative());
    return exact_div(pp, g).primitive_part();
}

ZPoly cyclotomic(int m) {
    if (m < 1)
        throw validation_error("cyclotomic index must be positive");
    static thread_local std::map<int, ZPoly> cache;
    if (auto it = cache.find(m); it != cache.end())
        return it->second;
    std::vector<mpz_class> xm(static_cast<size_t>(m) + 1, 0);
    xm[0] = -1;
    xm[static_cast<size_t>(m)] = 1;
    ZPoly p(std::move(xm));
    for (int d = 1; d < m; ++d)
        if (m % d == 0)
            p = exact_div(p, cyclotomic(d));
    cache.emplace(m, p);
    return p;
}

std::vector<int> phi_sieve(int n) {
    std::vector<int> phi(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        phi[static_cast<size_t>(i)] = i;
    for (int p = 2; p <= n; ++p)
        if (phi[static_cast<size_t>(p)] == p)
            for (int k = p; k <= n; k += p)
                phi[static_cast<size_t>(k)] -= phi[static_cast<size_t>(k)] / p;
    return phi;
}

ZPoly palindromic_core(const ZPoly& p) {
    if (!p.is_palindromic() || p.degree() % 2 != 0)
        throw validation_error("palindromic core needs an even-degree palindrome");
    int h = p.degree() / 2;
    // t^k + t^{-k} = pk(t + 1/t):  p0 = 2, p1 = x, p_{k+1} = x·pk − p_{k−1}
    ZPoly q = ZPoly::constant(p.coeff(h));
    ZPoly pk_prev = ZPoly::constant(2);
    ZPoly pk = ZPoly::monomial(1, 1);
    ZPoly x = pk;
    for (int k = 1; k <= h; ++k) {
        q = q + pk.scale(p.coeff(h + k));
        ZPoly next = x * pk - pk_prev;
        pk_prev = pk;
        pk = next;
    }
    return q;
}

mpz_class det_int(IntMat m) {
    size_t n = m.size();
    if (n == 0)
        return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t r = k + 1;
            while (r < n && m[r][k] == 0)
                ++r;
            if (r == n)
                return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

ZPoly det_poly(std::vector<std::vector<ZPoly>> m) {
    size_t n = m.size();
    if (n == 0)
        return ZPoly::constant(1);
    ZPoly prev = ZPoly::constant(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t r = k + 1;
            while (r < n && m[r][k].is_zero())
                ++r;
            if (r == n)
                return {};
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

ZPoly charpoly(const IntMat& m) {
    size_t n = m.size();
    std::vector<mpz_class> c(n + 1, 0);
    c[n] = 1;
    if (n == 0)
        return ZPoly(std::move(c));
    IntMat b(n, std::vector<mpz_class>(n, 0));
    IntMat a = m;
    for (size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            // a = m · b
            IntMat next(n, std::vector<mpz_class>(n, 0));
            for (size_t i = 0; i < n; ++i)
                for (size_t l = 0; l < n; ++l)
                    if (m[i][l] != 0)
                        for (size_t j = 0; j < n; ++j)
                            next[i][j] += m[i][l] * b[l][j];
            a = std::move(next);
        }
        mpz_class tr = 0;
        for (size_t i = 0; i < n; ++i)
            tr += a[i][i];
        mpz_class ck;
        mpz_class kk = static_cast<long>(k);
        mpz_divexact(ck.get_mpz_t(), tr.get_mpz_t(), kk.get_mpz_t());
        c[n - k] = -ck;
        b = a;
        for (size_t i = 0; i < n; ++i)
            b[i][i] -= ck;
    }
    return ZPoly(std::move(c));
}

int signature_of_real_rooted(const ZPoly& chi) {
    if (chi.is_zero())
        throw validation_error("signature of the zero polynomial is undefined");
    // strip zero roots
    size_t start = 0;
    while (chi.coeff(static_cast<int>(start)) == 0)
        ++start;
    std::vector<mpz_class> c;
    for (int i = static_cast<int>(start); i <= chi.degree(); ++i)
        c.push_back(chi.coeff(i));
    auto variations = [](const std::vector<mpz_class>& v) {
        int var = 0, last = 0;
        for (const auto& x : v) {
            int s = sgn(x);
            if (s == 0)
                continue;
            if (last != 0 && s != last)
                ++var;
            last = s;
        }
        return var;
    };
    int pos = variations(c);
    std::vector<mpz_class> neg = c;
    for (size_t i = 0; i < neg.size(); ++i)
        if (i % 2 == 1)
            neg[i] = -neg[i];
    return pos - variations(neg);
}

int SturmChain::variations(const mpq_class& x) const {
    int var = 0, last = 0;
    for (const ZPoly& p : polys) {
        int s = sgn(p.eval(x));
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++var;
        last = s;
    }
    return var;
}

int SturmChain::count(const mpq_class& a, const mpq_class& b) const {
    return variations(a) - variations(b);
}

SturmChain sturm_chain(const ZPoly& squarefree) {
    SturmChain chain;
    ZPoly a = positive_primitive(squarefree);
    ZPoly b = positive_primitive(a.derivative());
    chain.polys.push_back(a);
    if (b.is_zero())
        return chain;
    chain.polys.push_back(b);
    while (true) {
        const ZPoly& prev = chain.polys[chain.polys.size() - 2];
        const ZPoly& cur = chain.polys.back();
        ZPoly r = pseudo_rem(prev, cur);
        if (r.is_zero())
            break;
        // pseudo_rem equals lc(cur)^e times the true remainder; Sturm wants
        // −remainder up to a positive factor, so undo a negative lc^e.
        int e = prev.degree() - cur.degree() + 1;
        bool negative_factor = cur.leading() < 0 && e % 2 == 1;
        ZPoly s = negative_factor ? r : -r;
        chain.polys.push_back(positive_primitive(s));
    }
    return chain;
}

namespace {

void isolate_rec(const SturmChain& chain, const ZPoly& p, const mpq_class& lo,
                 const mpq_class& hi, std::vector<RealRoot>& out) {
    int n = chain.count(lo, hi);
    if (n == 0)
        return;
    if (n == 1) {
        RealRoot r;
        r.exact = false;
        r.lo = lo;
        r.hi = hi;
        out.push_back(r);
        return;
    }
    mpq_class mid = (lo + hi) / 2;
    if (p.eval(mid) == 0) {
        RealRoot r;
        r.exact = true;
        r.value = mid;
        r.lo = mid;
        r.hi = mid;
        out.push_back(r);
        mpq_class d = (hi - lo) / 4;
        while (chain.count(mid - d, mid) != 1 || p.eval(mid - d) == 0)
            d /= 2;
        isolate_rec(chain, p, lo, mid - d, out);
        mpq_class e = (hi - lo) / 4;
        while (chain.count(mid, mid + e) != 0 || p.eval(mid + e) == 0)
            e /= 2;
        isolate_rec(chain, p, mid + e, hi, out);
        return;
    }
    isolate_rec(chain, p, lo, mid, out);
    isolate_rec(chain, p, mid, hi, out);
}

} // namespace

std::vector<RealRoot> isolate_roots(const ZPoly& squarefree, const mpq_class& a,
                                    const mpq_class& b) {
    std::vector<RealRoot> out;
    if (squarefree.degree() <= 0)
        return out;
    if (squarefree.eval(a) == 0 || squarefree.eval(b) == 0)
        throw validation_error("root isolation requires nonroot endpoints");
    SturmChain chain = sturm_chain(squarefree);
    isolate_rec(chain, squarefree, a, b, out);
    std::sort(out.begin(), out.end(), [](const RealRoot& x, const RealRoot& y) {
        return x.lo + x.hi < y.lo + y.hi;
    });
    return out;
}

void refine_root(const ZPoly& squarefree, RealRoot& r) {
    if (r.exact)
        return;
    mpq_class mid = (r.lo + r.hi) / 2;
    mpq_class vm = squarefree.eval(mid);
    if (vm == 0) {
        r.exact = true;
        r.value = mid;
        r.lo = mid;
        r.hi = mid;
        return;
    }
    mpq_class vl = squarefree.eval(r.lo);
    if (sgn(vl) * sgn(vm) < 0)
        r.hi = mid;
    else
        r.lo = mid;
}

namespace {

// arctan(1/x) enclosure from the alternating Leibniz series.
void arctan_inv_enclosure(long x, long bits, mpq_class& lo, mpq_class& hi) {
    mpq_class sum = 0;
    mpq_class term;
    mpz_class xp = x; // x^(2k+1)
    mpz_class x2 = mpz_class(x) * x;
    mpq_class bound = mpq_class(1) / (mpz_class(1) << static_cast<unsigned long>(bits));
    long k = 0;
    while (true) {
        term = mpq_class(1) / (mpq_class(2 * k + 1) * mpq_class(xp));
        if (k % 2 == 0)
            sum += term;
        else
            sum -= term;
        mpq_class next = mpq_class(1) / (mpq_class(2 * k + 3) * mpq_class(xp * x2));
        if (next <= bound) {
            if (k % 2 == 0) { // last added, true value in [sum - next, sum]
                lo = sum - next;
                hi = sum;
            } else {
                lo = sum;
                hi = sum + next;
            }
            return;
        }
        xp *= x2;
        ++k;
    }
}

} // namespace

void pi_enclosure(long bits, mpq_class& lo, mpq_class& hi) {
    static thread_local std::map<long, std::pair<mpq_class, mpq_class>> cache;
    if (auto it = cache.find(bits); it != cache.end()) {
        lo = it->second.first;
        hi = it->second.second;
        return;
    }
    mpq_class a_lo, a_hi, b_lo, b_hi;
    arctan_inv_enclosure(5, bits + 8, a_lo, a_hi);
    arctan_inv_enclosure(239, bits + 8, b_lo, b_hi);
    lo = 16 * a_lo - 4 * b_hi;
    hi = 16 * a_hi - 4 * b_lo;
    cache.emplace(bits, std::make_pair(lo, hi));
}

void cos_pi_enclosure(const mpq_class& r, long bits, mpq_class& lo, mpq_class& hi) {
    // reduce r modulo 2 into [0, 2)
    mpq_class rr = r;
    mpq_class half = rr / 2;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), half.get_num().get_mpz_t(), half.get_den().get_mpz_t());
    rr -= 2 * mpq_class(fl);
    int outer_sign = 1;
    if (rr > 1)
        rr = 2 - rr;
    if (rr > mpq_class(1, 2)) {
        rr = 1 - rr;
        outer_sign = -1;
    }
    // now rr in [0, 1/2]; cos(pi*rr) with z = pi*rr in [0, pi/2]
    mpq_class pi_lo, pi_hi;
    pi_enclosure(bits + 8, pi_lo, pi_hi);
    mpq_class z_lo = pi_lo * rr;
    mpq_class z_hi = pi_hi * rr;
    mpq_class bound = mpq_class(1) / (mpz_class(1) << static_cast<unsigned long>(bits + 4));
    auto cos_at = [&](const mpq_class& z, mpq_class& clo, mpq_class& chi) {
        mpq_class sum = 1;
        mpq_class z2 = z * z;
        if (z2 == 0) {
            clo = chi = 1;
            return;
        }
        mpq_class term = 1;
        long k = 0;
        while (true) {
            ++k;
            term = term * z2 / mpq_class(2 * k - 1) / mpq_class(2 * k);
            if (k % 2 == 1)
                sum -= term;
            else
                sum += term;
            mpq_class next = term * z2 / mpq_class(2 * k + 1) / mpq_class(2 * k + 2);
            if (k >= 2 && next <= bound && next < term) {
                clo = sum - next;
                chi = sum + next;
                return;
            }
        }
    };
    // cos decreasing on [0, pi/2]
    mpq_class lo1, hi1, lo2, hi2;
    cos_at(z_hi, lo1, hi1); // lower end of cos
    cos_at(z_lo, lo2, hi2); // upper end of cos
    lo = lo1;
    hi = hi2;
    if (outer_sign < 0) {
        mpq_class nlo = -hi;
        mpq_class nhi = -lo;
        lo = nlo;
        hi = nhi;
    }
}

std::optional<mpq_class> rational_two_cos_turn(long k, long m) {
    // 2cos(2πk/m): rational exactly when the angle is a multiple of π/3 or π/2
    long g = std::gcd(std::abs(k), std::abs(m));
    if (g > 0) {
        k /= g;
        m /= g;
    }
    if (m < 0) {
        m = -m;
        k = -k;
    }
    k = ((k % m) + m) % m;
    switch (m) {
    case 1:
        return mpq_class(2);
    case 2:
        return mpq_class(-2);
    case 3:
        return mpq_class(-1);
    case 4:
        return mpq_class(0);
    case 6:
        return mpq_class(1);
    default:
        return std::nullopt;
    }
}

} // namespace concord
