#pragma once

namespace p1stab {

/// Tolerance used for all phase comparisons (wall membership wins ties).
/// Default 1e-9; the CLI overrides it from the P1STAB_EPS environment
/// variable for tolerance studies.
double phase_epsilon();

void set_phase_epsilon(double eps);

}  // namespace p1stab
