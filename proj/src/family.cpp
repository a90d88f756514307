#include "concord/family.hpp"

#include "concord/errors.hpp"

namespace concord {

namespace {

constexpr long kMaterializeCap = 2048; // copies; block sums beyond this use additivity

mpq_class frac(long n, long d) {
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

// Smallest even integer with copies · per_copy > bound (per_copy > 0).
mpz_class minimal_even_copies(const mpq_class& bound, const mpq_class& per_copy) {
    mpq_class q = bound / per_copy;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    mpz_class c = fl + 1;
    if (c < 2)
        c = 2;
    if (c % 2 != 0)
        ++c;
    return c;
}

void check_gate(const SeifertMatrix& base, int n) {
    if (!degree_gate(base, n)) {
        const int d = alexander(base).degree();
        if (n >= 2 && d == 2)
            throw validation_error(
                "degree gate failed: Alexander degree 2 is admissible only at level 1");
        throw validation_error("degree gate failed: Alexander degree " + std::to_string(d) +
                               " requires degree > 2" +
                               (n == 1 ? " (or = 2 at level 1)" : ""));
    }
}

SeifertMatrix repeated_sum(const SeifertMatrix& block, const mpz_class& copies) {
    const long c = copies.get_si();
    const long b = block.size();
    IntMat out(static_cast<size_t>(c * b), std::vector<mpz_class>(static_cast<size_t>(c * b)));
    for (long r = 0; r < c; ++r)
        for (long i = 0; i < b; ++i)
            for (long j = 0; j < b; ++j)
                out[static_cast<size_t>(r * b + i)][static_cast<size_t>(r * b + j)] =
                    block.at(static_cast<int>(i), static_cast<int>(j));
    return SeifertMatrix(std::move(out));
}

FamilyPlan build_plan(const SeifertMatrix& base, int n, int m, const mpq_class& cm,
                      int count, const SeifertMatrix& infection, const mpq_class& rho_c) {
    check_gate(base, n);
    if (cm <= 0)
        throw validation_error("the bound c must be positive");
    if (m < 1)
        throw validation_error("the number of axes must be at least 1");
    if (count < 1)
        throw validation_error("the schedule must have at least one step");

    FamilyPlan plan;
    plan.base = base;
    plan.level = n;
    plan.axes = m;
    plan.cm = cm;
    plan.infection = infection;
    plan.infection_rho = rho_c;
    plan.annotation = "infection knots are even connected sums of the stored matrix; any "
                      "knot with the same rho and vanishing Arf may stand in";

    mpq_class threshold = 2 * cm;
    for (int i = 1; i <= count; ++i) {
        ScheduleStep step;
        step.index = i;
        step.copies = minimal_even_copies(threshold, rho_c);
        step.rho = mpq_class(step.copies) * rho_c;
        step.threshold = threshold;
        threshold = 2 * cm + 2 * m * step.rho;
        plan.schedule.push_back(std::move(step));
    }
    return plan;
}

} // namespace

FamilyPlan plan_family(const SeifertMatrix& base, int n, int m, const mpq_class& cm,
                       int count) {
    return build_plan(base, n, m, cm, count, SeifertMatrix::left_trefoil(), frac(4, 3));
}

FamilyPlan plan_family(const SeifertMatrix& base, int n, int m, const mpq_class& cm,
                       int count, const SeifertMatrix& infection,
                       const mpq_class& claimed_rho) {
    if (arf(infection) != 0)
        throw validation_error("infection matrix must have vanishing Arf invariant");
    if (claimed_rho <= 0)
        throw validation_error("per-copy rho must be positive to build an increasing schedule");
    RhoValue rv = rho_z(infection, frac(1, 1000000000));
    if (rv.exact ? rv.value != claimed_rho : (claimed_rho < rv.lo || claimed_rho > rv.hi))
        throw validation_error("claimed per-copy rho disagrees with the computed value");
    return build_plan(base, n, m, cm, count, infection, claimed_rho);
}

VerifyReport verify_plan(const FamilyPlan& plan) {
    VerifyReport report;
    report.gate_ok = plan.level >= 1 && plan.cm > 0 && plan.axes >= 1 &&
                     degree_gate(plan.base, plan.level);

    RhoValue per_copy = rho_z(plan.infection, frac(1, 1000000000));
    report.infection_ok = per_copy.exact
                              ? per_copy.value == plan.infection_rho
                              : (plan.infection_rho >= per_copy.lo &&
                                 plan.infection_rho <= per_copy.hi);
    const int arf_per_copy = arf(plan.infection);

    mpq_class threshold = 2 * plan.cm;
    bool all_steps = true;
    for (size_t s = 0; s < plan.schedule.size(); ++s) {
        const ScheduleStep& step = plan.schedule[s];
        StepReport sr;
        sr.index = step.index;
        sr.threshold = threshold;
        if (step.copies <= kMaterializeCap) {
            SeifertMatrix total = repeated_sum(plan.infection, step.copies);
            RhoValue rv = rho_z(total, frac(1, 1000000000));
            sr.rho = rv.value;
            sr.method = "block-sum";
            sr.arf_ok = arf(total) == 0;
            sr.inequality_ok = rv.exact ? rv.value > threshold : rv.lo > threshold;
        } else {
            sr.rho = mpq_class(step.copies) * plan.infection_rho;
            sr.method = "additivity";
            mpz_class parity = (step.copies * arf_per_copy) % 2;
            sr.arf_ok = parity == 0;
            sr.inequality_ok = sr.rho > threshold;
        }
        sr.recorded_ok = step.rho == sr.rho && step.threshold == threshold;
        all_steps = all_steps && sr.arf_ok && sr.inequality_ok && sr.recorded_ok;
        threshold = 2 * plan.cm + 2 * plan.axes * sr.rho;
        report.steps.push_back(std::move(sr));
    }
    report.pass = report.gate_ok && report.infection_ok && all_steps;
    return report;
}

GapResult gap_lower_bound(const FamilyPlan& plan, int i, int j,
                          const EpsilonVector& eps_i, const EpsilonVector& eps_j) {
    const int count = static_cast<int>(plan.schedule.size());
    if (i < 1 || i > count || j < 0 || j >= i)
        throw validation_error("step indices must satisfy 0 <= j < i <= schedule length");
    auto weight = [&](const EpsilonVector& eps, const char* name) {
        if (static_cast<int>(eps.size()) != plan.axes)
            throw validation_error(std::string(name) + " must have one entry per axis");
        long w = 0;
        for (int e : eps) {
            if (e != 0 && e != 1)
                throw validation_error(std::string(name) + " entries must be 0 or 1");
            w += e;
        }
        return w;
    };
    const long wi = weight(eps_i, "eps-i");
    if (wi == 0)
        throw validation_error("eps-i must contain at least one 1");

    GapResult gap;
    gap.value = wi * plan.schedule[static_cast<size_t>(i - 1)].rho;
    if (j >= 1)
        gap.value -= weight(eps_j, "eps-j") * plan.schedule[static_cast<size_t>(j - 1)].rho;
    gap.threshold = 2 * plan.cm;
    gap.exceeds = gap.value > gap.threshold;
    return gap;
}

int axes_lower_bound(const SeifertMatrix& base) {
    return std::max(2 * base.genus() - 1, 1);
}

} // namespace concord
