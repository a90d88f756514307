#pragma once

#include "concord/seifert.hpp"

#include <gmpxx.h>

#include <vector>

namespace concord {

// Angle on the unit circle as a rational multiple of π in [0, 2]; either an
// exact rational or a certified enclosure [lo, hi] with value at the midpoint.
struct ProfileAngle {
    bool exact = true;
    mpq_class value;
    mpq_class lo, hi;

    static ProfileAngle at(const mpq_class& v) { return {true, v, v, v}; }
    static ProfileAngle between(const mpq_class& lo, const mpq_class& hi) {
        return {false, mpq_class((lo + hi) / 2), lo, hi};
    }
};

struct ProfileJump {
    ProfileAngle angle;
    bool root_of_unity = false;
};

struct ProfileArc {
    ProfileAngle start, end;
    int signature = 0;
};

// Piecewise-constant σ_ω over the circle.  Jumps list every unit-circle root
// of Δ (conjugate-symmetric, ascending); arcs cover [0,2]·π with neighbours
// of equal signature merged, so an arc may span a root where σ does not jump.
struct SignatureProfile {
    int genus = 0;
    bool all_exact = true;
    std::vector<ProfileJump> jumps;
    std::vector<ProfileArc> arcs;
};

struct RhoValue {
    bool exact = true;
    mpq_class value;
    mpq_class lo, hi;
};

// Signature of (1−ω)V + (1−ω̄)Vᵀ at the Gaussian-rational point ω = re + im·i.
// ω = 1 gives 0; other roots of Δ on the circle are rejected.
int levine_tristram(const SeifertMatrix& v, const mpq_class& re, const mpq_class& im);

// Same at ω = e^{iπr} for an exact rational r (angle as a multiple of π).
int levine_tristram_angle(const SeifertMatrix& v, const mpq_class& r);

SignatureProfile signature_profile(const SeifertMatrix& v);

// Normalized integral of σ_ω over the circle: exact when every jump is at a
// root of unity, otherwise an enclosure of width ≤ tolerance.
RhoValue rho_z(const SeifertMatrix& v, const mpq_class& tolerance);

} // namespace concord
