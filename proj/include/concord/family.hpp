#pragma once

#include "concord/seifert.hpp"
#include "concord/signature.hpp"

#include <string>
#include <vector>

namespace concord {

struct ScheduleStep {
    int index = 0;       // 1-based step number
    mpz_class copies;    // even number of infection-knot copies
    mpq_class rho;       // copies × per-copy ρ
    mpq_class threshold; // strict lower bound: 2c for step 1, 2c + 2m·ρ_{i−1} after
};

// A certified schedule of infection knots: step i uses `copies` connected-sum
// copies of the infection matrix, and its ρ must strictly exceed the
// threshold built from the bound c and the previous step.
struct FamilyPlan {
    SeifertMatrix base = SeifertMatrix::unknot();
    int level = 1; // n
    int axes = 1;  // m
    mpq_class cm;
    SeifertMatrix infection = SeifertMatrix::left_trefoil();
    mpq_class infection_rho = mpq_class(4, 3);
    std::string annotation;
    std::vector<ScheduleStep> schedule;
};

struct StepReport {
    int index = 0;
    bool arf_ok = false;
    bool inequality_ok = false;
    bool recorded_ok = false;
    mpq_class rho;
    mpq_class threshold;
    std::string method; // "block-sum" (ρ recomputed on the materialized matrix) or "additivity"
};

struct VerifyReport {
    bool pass = false;
    bool gate_ok = false;
    bool infection_ok = false;
    std::vector<StepReport> steps;
};

struct GapResult {
    mpq_class value;
    mpq_class threshold; // 2c
    bool exceeds = false;
};

using EpsilonVector = std::vector<int>;

// Greedy-minimal schedule over even connected sums of the left trefoil.
FamilyPlan plan_family(const SeifertMatrix& base, int n, int m, const mpq_class& cm,
                       int count);

// Same, with an arbitrary infection matrix: its Arf invariant must vanish and
// the claimed per-copy ρ is checked against the rho module.
FamilyPlan plan_family(const SeifertMatrix& base, int n, int m, const mpq_class& cm,
                       int count, const SeifertMatrix& infection,
                       const mpq_class& claimed_rho);

// Recomputes the degree gate, per-copy ρ, every step ρ (materializing the
// block sum when small enough, otherwise by additivity), every Arf value and
// every strict inequality; failures become report entries, never exceptions.
VerifyReport verify_plan(const FamilyPlan& plan);

// Σ ε_k·ρ_i − Σ ε′_k·ρ_j and whether it strictly exceeds 2c; j = 0 means no
// subtracted step.
GapResult gap_lower_bound(const FamilyPlan& plan, int i, int j,
                          const EpsilonVector& eps_i, const EpsilonVector& eps_j);

// Lower bound on the number of infection axes one special tuple supports.
int axes_lower_bound(const SeifertMatrix& base);

} // namespace concord
