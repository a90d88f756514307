// End-to-end acceptance gate: each numbered check prints exactly one
// pass/fail line with its elapsed time and the whole binary exits nonzero
// if any check fails or overruns its time budget.

#include "concord/family.hpp"
#include "concord/fox.hpp"
#include "concord/json_io.hpp"
#include "concord/signature.hpp"
#include "concord/tuples.hpp"

#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

using namespace concord;

namespace {

int g_failures = 0;

void criterion(int n, double budget_seconds, const std::function<std::string()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
        detail = body();
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && secs > budget_seconds) {
        ok = false;
        detail += " [exceeded " + std::to_string(budget_seconds) + " s budget]";
    }
    if (!ok)
        ++g_failures;
    std::printf("criterion %d: %s - %s (%.2f s)\n", n, ok ? "PASS" : "FAIL", detail.c_str(),
                secs);
    std::fflush(stdout);
}

struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond)
        throw check_failure(what);
}

SeifertMatrix t25() {
    return SeifertMatrix({{mpz_class(-1), mpz_class(1), mpz_class(0), mpz_class(0)},
                          {mpz_class(0), mpz_class(-1), mpz_class(1), mpz_class(0)},
                          {mpz_class(0), mpz_class(0), mpz_class(-1), mpz_class(1)},
                          {mpz_class(0), mpz_class(0), mpz_class(0), mpz_class(-1)}});
}

std::string exact_rho_pair() {
    RhoValue left = rho_z(SeifertMatrix::left_trefoil(), mpq_class(1, 1000000000));
    require(left.exact, "left-handed rho is not exact");
    require(left.value == mpq_class(4, 3), "left-handed rho != 4/3");
    RhoValue right = rho_z(mirror_reverse(SeifertMatrix::left_trefoil()), mpq_class(1, 1000000000));
    require(right.exact, "right-handed rho is not exact");
    require(right.value == mpq_class(-4, 3), "right-handed rho != -4/3");
    return "rho(left trefoil) = 4/3 and rho(mirror) = -4/3, both exact";
}

std::string fox_oracles() {
    auto rng = support::make_rng(0xF0515EED);
    const int pairs = 1000;
    RingBase zf = RingBase::free_group(4);
    for (int it = 0; it < pairs; ++it) {
        Word g = support::random_word(rng, 4, 20);
        Word h = support::random_word(rng, 4, 20);
        int i = static_cast<int>(rng() % 4) + 1;
        require(commutator_fox_closed_form(g, h, i) == fox(commutator(g, h), i),
                "commutator closed form disagrees");
        int xg = static_cast<int>(rng() % 4) + 1;
        Word x = Word::generator(4, xg);
        GroupRingElement p = p_factor(g, x);
        Word conj_comm = commutator(g, conjugate(g, x));
        for (int j = 1; j <= 4; ++j)
            if (j != xg)
                require(fox(conj_comm, j) == fox(g, j) * p, "conjugation factorization fails");
        GroupRingElement q = q_factor(g, h);
        GroupRingElement cof = GroupRingElement::from_word(zf, g.inverse()) -
                               GroupRingElement::from_word(zf, commutator(h, g));
        Word pair_comm = commutator(g, h);
        for (int j = 1; j <= 4; ++j)
            require(fox(pair_comm, j) == fox(g, j) * q + fox(h, j) * cof,
                    "pairing identity fails");
        for (int j = 1; j <= 4; ++j)
            require(fox(g, j) == fox_classical(g, j).involution(),
                    "involution relation fails");
    }
    return std::to_string(pairs) + " random word pairs, all four oracle identities exact";
}

std::string base_case_goodness() {
    TupleFamilyCursor cur = generate_P(2, 1);
    cur.next();
    cur.next();
    cur.next();
    Tuple t = *cur.next(); // {[x4,x1],[x4,x2],[x4,x3]}
    for (int i = 1; i <= 3; ++i)
        require(t.words[static_cast<size_t>(i - 1)] ==
                    commutator(Word::generator(4, 4), Word::generator(4, i)),
                "unexpected base tuple");
    GroupHom ab = GroupHom::abelianization(4);
    GoodMatrix m = good_matrix(t, ab, 1);
    RingBase z4 = RingBase::free_abelian(4);
    GroupRingElement diag =
        GroupRingElement::from_exponents(z4, {0, 0, 0, -1}) - GroupRingElement::one(z4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const GroupRingElement& e =
                m.entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
            require(i == j ? e == diag : e.is_zero(), "matrix is not the expected diagonal");
        }
    require(is_good(t, ab, 1), "diagonal matrix not recognized as good");
    GroupHom kill4 = GroupHom::from_exponent_images(
        4, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}});
    require(!is_good(t, kill4, 1), "goodness survives a killed generator");
    return "diagonal with entries t4^-1 - 1, good; killed generator flips the verdict";
}

std::string tuple_combinatorics() {
    require(family_size(2, 0) == 1 && family_size(2, 1) == 4 && family_size(2, 2) == 500,
            "family sizes off");
    std::map<int, std::vector<Tuple>> levels;
    for (int n = 0; n <= 2; ++n) {
        TupleFamilyCursor cur = generate_P(2, n);
        while (auto t = cur.next())
            levels[n].push_back(std::move(*t));
    }
    require(levels[0].size() == 1 && levels[1].size() == 4 && levels[2].size() == 500,
            "enumerated counts off");
    std::map<int, int> children;
    std::set<std::vector<Word>> distinct;
    for (const Tuple& t : levels[2]) {
        children[t.pedigree.base_index]++;
        distinct.insert(t.words);
    }
    require(distinct.size() == 500, "level-2 members are not distinct");
    for (int b = 1; b <= 4; ++b)
        require(children[b] == 125, "children per parent != (4g-3)^(2g-1)");
    for (const Tuple& t : levels[0])
        for (const Word& w : t.words)
            require(derived_membership(w, 0), "level-0 membership fails");
    for (const Tuple& t : levels[1])
        for (const Word& w : t.words)
            require(derived_membership(w, 1), "level-1 membership fails");
    auto rng = support::make_rng(0x7AB1E5);
    for (int pick = 0; pick < 100; ++pick) {
        const Tuple& t = levels[2][rng() % levels[2].size()];
        for (const Word& w : t.words)
            require(derived_membership(w, 2), "level-2 membership fails");
    }
    return "counts 1/4/500, 125 children per parent, memberships exact "
           "(exhaustive through level 1, 100 samples at level 2)";
}

std::string alexander_arf_suite() {
    require(alexander(SeifertMatrix::trefoil()).str() == "t^2 - t + 1", "trefoil polynomial off");
    require(arf(SeifertMatrix::trefoil()) == 1, "trefoil Arf != 1");
    SeifertMatrix granny = connected_sum(SeifertMatrix::trefoil(), SeifertMatrix::trefoil());
    require(arf(granny) == 0, "granny Arf != 0");
    auto rng = support::make_rng(0xA1EF);
    for (int it = 0; it < 500; ++it) {
        SeifertMatrix v = support::random_seifert(rng, 1 + static_cast<int>(rng() % 4));
        AlexanderPolynomial d = alexander(v);
        require(d.poly().is_palindromic(), "polynomial not symmetric");
        require(abs(d.at(1)) == 1, "polynomial at 1 is not a unit");
        IntMat raw = v.entries();
        size_t n = raw.size();
        std::vector<std::vector<ZPoly>> tv(n, std::vector<ZPoly>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                tv[i][j] = ZPoly({-raw[j][i], raw[i][j]});
        require(d.equals_up_to_units(det_poly(tv)), "det(tV - V^T) disagrees");
    }
    return "trefoil t^2 - t + 1 / Arf 1, granny Arf 0; symmetry, unit value and "
           "determinant cross-check on 500 random matrices";
}

std::string family_planner() {
    FamilyPlan plan = plan_family(t25(), 2, 3, 10, 2);
    require(plan.schedule.size() == 2, "wrong schedule length");
    require(plan.schedule[0].copies == 16 && plan.schedule[1].copies == 112,
            "copy counts are not 16/112");
    for (const ScheduleStep& s : plan.schedule) {
        require(s.copies % 2 == 0, "copy count is odd");
        require(mpq_class(s.copies) * plan.infection_rho > s.threshold, "threshold not cleared");
        require(mpq_class(s.copies - 2) * plan.infection_rho <= s.threshold,
                "copy count is not minimal");
    }
    require(verify_plan(plan).pass, "verification fails on an honest plan");
    for (size_t victim = 0; victim < 2; ++victim) {
        FamilyPlan bad = plan;
        bad.schedule[victim].copies -= 2;
        require(!verify_plan(bad).pass, "shaving two copies goes unnoticed");
    }
    GapResult gap = gap_lower_bound(plan, 2, 1, {1, 0, 0}, {1, 1, 1});
    require(gap.value == mpq_class(256, 3), "gap bound != 256/3");
    require(gap.threshold == 20 && gap.exceeds, "gap does not exceed 2c");
    return "n1=16, n2=112 greedy-minimal even, verified; -2 tampering caught; "
           "gap 256/3 > 20";
}

std::string profile_cross_check() {
    struct Case {
        const char* name;
        SeifertMatrix m;
        mpq_class rho;
    };
    std::vector<Case> cases = {
        {"right trefoil", SeifertMatrix::trefoil(), mpq_class(-4, 3)},
        {"torus(2,5)", t25(), mpq_class(-12, 5)},
        {"trefoil # mirror", connected_sum(SeifertMatrix::trefoil(), SeifertMatrix::left_trefoil()),
         mpq_class(0)},
    };
    const long n_points = 10000;
    for (const Case& c : cases) {
        RhoValue r = rho_z(c.m, mpq_class(1, 1000000000));
        require(r.exact && r.value == c.rho,
                std::string("exact rho wrong for ") + c.name);
        // midpoint Riemann sum over exact on-circle rational points
        mpq_class sum = 0;
        for (long k = 0; k < n_points; ++k) {
            double theta = (2.0 * M_PI * (static_cast<double>(k) + 0.5)) /
                           static_cast<double>(n_points);
            double s = std::tan(theta / 2.0);
            mpq_class sq(static_cast<long>(s * 4096.0), 4096);
            sq.canonicalize();
            auto [re, im] = support::circle_point(sq);
            sum += levine_tristram(c.m, re, im);
        }
        mpq_class estimate = sum / n_points;
        mpq_class err = estimate - c.rho;
        if (err < 0)
            err = -err;
        std::ostringstream why;
        why << "Riemann estimate off by " << err.get_d() << " for " << c.name;
        require(err <= mpq_class(1, 1000), why.str());
    }
    auto rng = support::make_rng(0x516AA7);
    std::uniform_int_distribution<long> num(-40, 40);
    for (int it = 0; it < 200; ++it) {
        SeifertMatrix a = support::random_seifert(rng, 1 + static_cast<int>(rng() % 2));
        SeifertMatrix b = support::random_seifert(rng, 1 + static_cast<int>(rng() % 2));
        mpq_class s(num(rng), 16);
        s.canonicalize();
        auto [re, im] = support::circle_point(s);
        int sa = levine_tristram(a, re, im);
        int sb = levine_tristram(b, re, im);
        require(levine_tristram(connected_sum(a, b), re, im) == sa + sb,
                "signature not additive under connected sum");
        require(levine_tristram(mirror_reverse(a), re, im) == -sa,
                "signature not antisymmetric under mirroring");
    }
    return "3 exact rho values within 1/1000 of 10^4-point Riemann estimates; "
           "additivity and mirror antisymmetry on 200 random matrices";
}

} // namespace

int main() {
    criterion(1, 1.0, exact_rho_pair);
    criterion(2, 30.0, fox_oracles);
    criterion(3, 1.0, base_case_goodness);
    criterion(4, 60.0, tuple_combinatorics);
    criterion(5, 30.0, alexander_arf_suite);
    criterion(6, 5.0, family_planner);
    criterion(7, 60.0, profile_cross_check);
    if (g_failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
