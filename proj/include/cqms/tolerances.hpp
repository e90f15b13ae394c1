#pragma once

namespace cqms {

// All numeric tolerances in one place. The acceptance suite pins these
// values; do not tune them per call site.
struct Tolerances {
    // hermitian symmetry check, absolute
    double hermitian_abs = 1e-12;
    // power iteration stop: relative change of the norm estimate
    double power_rel_change = 1e-12;
    int power_max_iter = 10000;
    // Jacobi eigensolver: off-diagonal mass relative to Frobenius norm
    double jacobi_rel_off = 1e-14;
    int jacobi_max_sweeps = 64;
    // LP: feasibility residual of the returned witness
    double lp_feasibility = 1e-9;
    // LP: pivot threshold
    double lp_pivot = 1e-9;
    // state weights must sum to 1 within this
    double state_normalization = 1e-12;
};

inline const Tolerances& tol() {
    static const Tolerances t;
    return t;
}

} // namespace cqms
