#pragma once

#include <complex>

#include "p1stab/group_actions.hpp"
#include "p1stab/stability.hpp"

namespace p1stab {

/// Coordinate log m(O) + i pi phi(O) of a normalized condition; the
/// normalized slice X maps isomorphically onto the upper half-plane.
struct ChartPoint {
    std::complex<double> w;
};

enum class KRegion { interior, boundary, outside };

std::string to_string(KRegion r);

struct Normalization {
    StabilityCondition condition;  // lies in X: base 0, beta = 1, log_m_beta = 0
    GroupElement applied;          // act(applied, input) is equivalent to condition
};

/// Moves a condition into the normalized slice X (O and O(-1)[1]
/// semistable, phi(O(-1)[1]) = 1, m(O(-1)[1]) = 1, phi(O) > 0).
/// Geometric conditions are rebased to twist 0 (no group motion needed);
/// wall and quiver conditions are tensored to base 0.  The rotation and
/// rescaling making beta = 1, log m_beta = 0 is recorded in `applied`.
Normalization normalize_to_X(const StabilityCondition& sc);

/// w = log_m_alpha + i pi alpha for a normalized condition.
ChartPoint chart_X(const StabilityCondition& sc_X);

/// Rebuilds the normalized condition sitting at a chart point.
StabilityCondition condition_at_chart(const ChartPoint& p);

/// Strip test on a normalized condition: with Z(O) = x + iy, requires
/// x <= 1 and (x - 1/2)^2 + y^2 >= 1/4.  Equivalently Z(O) lies between
/// the two lines perpendicular to Z(O_x) through 0 and Z(O_x).
bool in_strip(const StabilityCondition& sc_X);

/// Fundamental domain membership for w = x + iy: y > 0 and, for
/// y <= pi, cos y <= exp(-|x|); points with y > pi are interior.
/// Boundary classified within phase_epsilon().
KRegion in_K(std::complex<double> w);

/// Boundary identification (x, y) <-> (-x, y); canonical side is x >= 0.
/// Throws unless in_K(w) == boundary.
std::complex<double> identify_boundary(std::complex<double> w);

struct ReductionResult {
    ChartPoint point;              // canonical point of the closed domain
    KRegion region;                // interior or boundary
    GroupElement used;             // act(used, reduced) recovers the input
    StabilityCondition reduced;    // the normalized representative
};

ReductionResult reduce_to_K(const StabilityCondition& sc);

/// Explicit conformal pieces of the uniformization chain.  Each throws
/// std::domain_error at its pole.
std::complex<double> map_disk(std::complex<double> z);    // (z - i) / (z + i)
std::complex<double> map_a(std::complex<double> z);       // -2i (zi + 1) / (zi - 1)
std::complex<double> map_b(std::complex<double> z);       // outer root of w + 1/w = z
std::complex<double> map_inv(std::complex<double> z);     // 1 / z
std::complex<double> map_half(std::complex<double> z);    // -i (z + 1) / (z - 1)
std::complex<double> map_square(std::complex<double> z);  // z^2

}  // namespace p1stab
