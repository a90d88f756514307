#include "concord/signature.hpp"

#include "concord/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace concord {

namespace {

mpq_class frac(long n, long d) {
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

// Signature of the Hermitian form (1−ω)V + (1−ω̄)Vᵀ restricted to one
// support component, via the symmetric realification [[A, −B], [B, A]]
// scaled to integer entries.  Sets `singular` when det vanishes there.
int component_signature(const SeifertMatrix& v, const std::vector<int>& idx,
                        const mpq_class& re, const mpq_class& im, bool& singular) {
    const size_t k = idx.size();
    const mpq_class c = 1 - re;
    mpz_class lam;
    mpz_lcm(lam.get_mpz_t(), c.get_den().get_mpz_t(), im.get_den().get_mpz_t());
    IntMat m(2 * k, std::vector<mpz_class>(2 * k));
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) {
            const mpz_class& vij = v.at(idx[i], idx[j]);
            const mpz_class& vji = v.at(idx[j], idx[i]);
            mpq_class a = c * (vij + vji) * lam;
            mpq_class b = im * (vji - vij) * lam;
            m[i][j] = a.get_num();
            m[k + i][k + j] = a.get_num();
            m[i][k + j] = -b.get_num();
            m[k + i][j] = b.get_num();
        }
    }
    ZPoly chi = charpoly(m);
    if (chi.coeff(0) == 0) {
        singular = true;
        return 0;
    }
    int s = signature_of_real_rooted(chi);
    return s / 2;
}

int sigma_at(const SeifertMatrix& v, const mpq_class& re, const mpq_class& im,
             bool& singular) {
    singular = false;
    int total = 0;
    for (const auto& comp : support_components(v)) {
        total += component_signature(v, comp, re, im, singular);
        if (singular)
            return 0;
    }
    return total;
}

// A unit-circle root of Δ in the upper semicircle, tracked through the
// substitution x = 2cos(2πu), u ∈ (0, 1/2) the fraction of a full turn.
struct Jump {
    bool cyclo = false;
    long k = 0, m = 0; // cyclo: u = k/m exactly
    RealRoot root;     // residual: isolated root of the core in x

    bool x_exact = false;
    bool x_open = false; // enclosure endpoints are excluded
    mpq_class xlo, xhi;
    long bits = 48;

    bool u_exact = false;
    mpq_class ulo, uhi;
};

struct Circle {
    int genus = 0;
    std::vector<Jump> jumps; // ascending u
    std::vector<int> sig;    // jumps.size() + 1 upper-semicircle arc values
    ZPoly core;              // squarefree non-cyclotomic part in x
};

void refine_x(const Circle& c, Jump& j) {
    if (j.x_exact)
        return;
    if (j.cyclo) {
        j.bits *= 2;
        mpq_class lo, hi;
        cos_pi_enclosure(frac(2 * j.k, j.m), j.bits, lo, hi);
        j.xlo = 2 * lo;
        j.xhi = 2 * hi;
    } else {
        refine_root(c.core, j.root);
        if (j.root.exact) {
            j.x_exact = true;
            j.x_open = false;
            j.xlo = j.xhi = j.root.value;
        } else {
            j.xlo = j.root.lo;
            j.xhi = j.root.hi;
        }
    }
}

// Certifies value(a) < value(b) from the current enclosures.
bool strictly_below(const Jump& a, const Jump& b) {
    if (a.xhi < b.xlo)
        return true;
    if (a.xhi == b.xlo)
        return a.x_open || b.x_open;
    return false;
}

void init_jump_x(Jump& j) {
    if (j.cyclo) {
        if (auto x = rational_two_cos_turn(j.k, j.m)) {
            j.x_exact = true;
            j.xlo = j.xhi = *x;
        } else {
            mpq_class lo, hi;
            cos_pi_enclosure(frac(2 * j.k, j.m), j.bits, lo, hi);
            j.xlo = 2 * lo;
            j.xhi = 2 * hi;
        }
    } else if (j.root.exact) {
        j.x_exact = true;
        j.xlo = j.xhi = j.root.value;
    } else {
        j.x_open = true;
        j.xlo = j.root.lo;
        j.xhi = j.root.hi;
    }
}

// Rational point on the open x-interval (glo, ghi) reached through the
// tangent half-angle parametrization x(s) = 2(1−s²)/(1+s²), s > 0.
mpq_class find_s(const mpq_class& glo, const mpq_class& ghi) {
    auto xs = [](const mpq_class& s) {
        mpq_class s2 = s * s;
        return mpq_class(2 * (1 - s2) / (1 + s2));
    };
    mpq_class slo = 0, shi = 1;
    while (xs(shi) >= ghi)
        shi *= 2;
    for (int it = 0; it < 100000; ++it) {
        mpq_class mid = (slo + shi) / 2;
        mpq_class xm = xs(mid);
        if (xm >= ghi)
            slo = mid;
        else if (xm <= glo)
            shi = mid;
        else
            return mid;
    }
    throw std::logic_error("arc sample search failed to converge");
}

int sample_signature(const SeifertMatrix& v, const mpq_class& re, const mpq_class& im) {
    bool singular = false;
    int s = sigma_at(v, re, im, singular);
    if (singular)
        throw std::logic_error("arc sample landed on a root of the Alexander polynomial");
    return s;
}

Circle build_circle(const SeifertMatrix& v) {
    Circle c;
    c.genus = v.genus();
    ZPoly d = alexander(v).poly();

    std::vector<long> ms;
    if (d.degree() > 0) {
        const int deg0 = d.degree();
        std::vector<int> phi = phi_sieve(2 * deg0 * deg0 + 6);
        mpz_class d2 = d.eval(mpz_class(2));
        mpz_class d3 = d.eval(mpz_class(3));
        for (long m = 3; m < static_cast<long>(phi.size()); ++m) {
            if (d.degree() == 0)
                break;
            if (phi[static_cast<size_t>(m)] > d.degree())
                continue;
            ZPoly phim = cyclotomic(static_cast<int>(m));
            mpz_class p2 = phim.eval(mpz_class(2));
            mpz_class p3 = phim.eval(mpz_class(3));
            if (d2 != 0 && !mpz_divisible_p(d2.get_mpz_t(), p2.get_mpz_t()))
                continue;
            if (d3 != 0 && !mpz_divisible_p(d3.get_mpz_t(), p3.get_mpz_t()))
                continue;
            bool divided = false;
            ZPoly quo;
            while (try_exact_div(d, phim, quo)) {
                d = quo;
                divided = true;
            }
            if (divided) {
                ms.push_back(m);
                d2 = d.eval(mpz_class(2));
                d3 = d.eval(mpz_class(3));
            }
        }
    }

    for (long m : ms) {
        for (long k = 1; 2 * k < m; ++k) {
            if (std::gcd(k, m) != 1)
                continue;
            Jump j;
            j.cyclo = true;
            j.k = k;
            j.m = m;
            init_jump_x(j);
            j.u_exact = true;
            j.ulo = j.uhi = frac(k, m);
            c.jumps.push_back(std::move(j));
        }
    }

    if (d.degree() > 0) {
        c.core = squarefree_part(palindromic_core(d));
        for (const RealRoot& r : isolate_roots(c.core, mpq_class(-2), mpq_class(2))) {
            Jump j;
            j.root = r;
            init_jump_x(j);
            c.jumps.push_back(std::move(j));
        }
    }

    // Separate every pair of x-enclosures, then order by descending x,
    // which is ascending u.
    for (bool again = true; again;) {
        again = false;
        for (size_t i = 0; i < c.jumps.size(); ++i) {
            for (size_t j = i + 1; j < c.jumps.size(); ++j) {
                if (!strictly_below(c.jumps[i], c.jumps[j]) &&
                    !strictly_below(c.jumps[j], c.jumps[i])) {
                    refine_x(c, c.jumps[i]);
                    refine_x(c, c.jumps[j]);
                    again = true;
                }
            }
        }
    }
    std::sort(c.jumps.begin(), c.jumps.end(),
              [](const Jump& a, const Jump& b) { return strictly_below(b, a); });

    // One certified sample per upper-semicircle arc; the last arc owns −1.
    const size_t nj = c.jumps.size();
    for (size_t a = 0; a <= nj; ++a) {
        if (a == nj) {
            c.sig.push_back(sample_signature(v, mpq_class(-1), mpq_class(0)));
            break;
        }
        for (;;) {
            mpq_class glo = c.jumps[a].xhi;
            mpq_class ghi = a == 0 ? mpq_class(2) : c.jumps[a - 1].xlo;
            if (glo < ghi) {
                mpq_class s = find_s(glo, ghi);
                mpq_class den = 1 + s * s;
                mpq_class re = (1 - s * s) / den;
                mpq_class im = 2 * s / den;
                c.sig.push_back(sample_signature(v, re, im));
                break;
            }
            refine_x(c, c.jumps[a]);
            if (a > 0)
                refine_x(c, c.jumps[a - 1]);
        }
    }
    return c;
}

// Shrinks every inexact u-enclosure to at most `width` (in turns) by
// bisection, deciding each midpoint against the x-enclosure through a
// certified cosine.
void certify_turns(Circle& c, const mpq_class& width) {
    for (Jump& j : c.jumps) {
        if (j.u_exact)
            continue;
        mpq_class lo = 0, hi = frac(1, 2);
        long cbits = 64;
        while (hi - lo > width) {
            mpq_class mid = (lo + hi) / 2;
            for (;;) {
                mpq_class clo, chi;
                cos_pi_enclosure(2 * mid, cbits, clo, chi);
                clo *= 2;
                chi *= 2;
                // x(u) = 2cos(2πu) is strictly decreasing in u
                if (clo > j.xhi || (clo == j.xhi && j.x_open)) {
                    lo = mid;
                    break;
                }
                if (chi < j.xlo || (chi == j.xlo && j.x_open)) {
                    hi = mid;
                    break;
                }
                cbits *= 2;
                refine_x(c, j);
            }
        }
        j.ulo = lo;
        j.uhi = hi;
    }
}

ProfileAngle jump_angle(const Jump& j, bool mirrored) {
    if (j.u_exact) {
        mpq_class a = 2 * j.ulo;
        return ProfileAngle::at(mirrored ? mpq_class(2 - a) : a);
    }
    if (mirrored)
        return ProfileAngle::between(2 - 2 * j.uhi, 2 - 2 * j.ulo);
    return ProfileAngle::between(2 * j.ulo, 2 * j.uhi);
}

} // namespace

int levine_tristram(const SeifertMatrix& v, const mpq_class& re, const mpq_class& im) {
    if (re * re + im * im != 1)
        throw validation_error("evaluation point must lie on the unit circle");
    if (re == 1)
        return 0;
    bool singular = false;
    int s = sigma_at(v, re, im, singular);
    if (singular)
        throw validation_error(
            "evaluation point is a root of the Alexander polynomial (a signature "
            "jump); use the signature profile for the adjacent arc values");
    return s;
}

int levine_tristram_angle(const SeifertMatrix& v, const mpq_class& r) {
    // fold by conjugation symmetry into a turn fraction u ∈ [0, 1/2]
    mpq_class r2 = r / 2;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), r2.get_num().get_mpz_t(), r2.get_den().get_mpz_t());
    mpq_class folded = r - 2 * mpq_class(fl);
    if (folded == 0)
        return 0;
    if (folded > 1)
        folded = 2 - folded;
    mpq_class u = folded / 2;

    Circle c = build_circle(v);
    size_t idx = 0;
    for (Jump& j : c.jumps) {
        if (j.u_exact) {
            if (u == j.ulo)
                throw validation_error(
                    "angle is a root of the Alexander polynomial (a signature jump); "
                    "use the signature profile for the adjacent arc values");
            if (u > j.ulo)
                ++idx;
            continue;
        }
        long cbits = 64;
        for (;;) {
            mpq_class clo, chi;
            cos_pi_enclosure(2 * u, cbits, clo, chi);
            clo *= 2;
            chi *= 2;
            if (chi < j.xlo || (chi == j.xlo && j.x_open)) {
                ++idx; // x(u) below the root ⇒ u beyond the jump
                break;
            }
            if (clo > j.xhi || (clo == j.xhi && j.x_open))
                break;
            cbits *= 2;
            refine_x(c, j);
        }
    }
    return c.sig[idx];
}

SignatureProfile signature_profile(const SeifertMatrix& v) {
    Circle c = build_circle(v);
    certify_turns(c, mpq_class(1, 1 << 24));
    const size_t nj = c.jumps.size();

    SignatureProfile p;
    p.genus = c.genus;
    for (const Jump& j : c.jumps)
        p.all_exact = p.all_exact && j.u_exact;

    std::vector<ProfileAngle> cuts;
    std::vector<int> values;
    cuts.push_back(ProfileAngle::at(mpq_class(0)));
    for (size_t i = 0; i < nj; ++i) {
        cuts.push_back(jump_angle(c.jumps[i], false));
        values.push_back(c.sig[i]);
    }
    values.push_back(c.sig[nj]);
    for (size_t i = nj; i-- > 0;) {
        cuts.push_back(jump_angle(c.jumps[i], true));
        values.push_back(c.sig[i]);
    }
    cuts.push_back(ProfileAngle::at(mpq_class(2)));

    for (size_t i = 1; i + 1 < cuts.size(); ++i) {
        bool unity = i <= nj ? c.jumps[i - 1].cyclo : c.jumps[2 * nj - i].cyclo;
        p.jumps.push_back(ProfileJump{cuts[i], unity});
    }

    ProfileArc cur{cuts[0], cuts[1], values[0]};
    for (size_t i = 1; i < values.size(); ++i) {
        if (values[i] == cur.signature) {
            cur.end = cuts[i + 1];
        } else {
            p.arcs.push_back(cur);
            cur = ProfileArc{cuts[i], cuts[i + 1], values[i]};
        }
    }
    p.arcs.push_back(cur);
    return p;
}

RhoValue rho_z(const SeifertMatrix& v, const mpq_class& tolerance) {
    if (tolerance <= 0)
        throw validation_error("tolerance must be positive");
    Circle c = build_circle(v);

    long inexact = 0;
    for (const Jump& j : c.jumps)
        if (!j.u_exact)
            ++inexact;
    mpq_class width = tolerance / (8 * std::max(c.genus, 1) * std::max(inexact, 1L) + 1);

    for (int round = 0;; ++round) {
        certify_turns(c, width);
        mpq_class lo = 0, hi = 0;
        mpq_class prev_lo = 0, prev_hi = 0;
        for (size_t a = 0; a < c.sig.size(); ++a) {
            mpq_class next_lo, next_hi;
            if (a == c.jumps.size()) {
                next_lo = next_hi = frac(1, 2);
            } else {
                next_lo = c.jumps[a].ulo;
                next_hi = c.jumps[a].uhi;
            }
            const int s = c.sig[a];
            mpq_class len_lo = next_lo - prev_hi;
            mpq_class len_hi = next_hi - prev_lo;
            if (s >= 0) {
                lo += 2 * s * len_lo;
                hi += 2 * s * len_hi;
            } else {
                lo += 2 * s * len_hi;
                hi += 2 * s * len_lo;
            }
            prev_lo = next_lo;
            prev_hi = next_hi;
        }
        if (hi - lo <= tolerance)
            return RhoValue{inexact == 0, mpq_class((lo + hi) / 2), lo, hi};
        if (round >= 8)
            throw std::logic_error("rho enclosure failed to reach tolerance");
        width /= 16;
    }
}

} // namespace concord
