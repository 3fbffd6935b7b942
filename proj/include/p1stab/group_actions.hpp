#pragma once

#include <complex>
#include <cstdint>

#include "p1stab/stability.hpp"

namespace p1stab {

/// An element of the group acting on the stability manifold: the additive
/// complex parameter z = x + iy rescales all masses by e^x and rotates
/// all phases by y/pi (so i*pi realizes the shift functor), and `tensor`
/// twists by O(tensor).  The two parts commute; composition adds both.
struct GroupElement {
    std::complex<double> z{0.0, 0.0};
    std::int64_t tensor = 0;
};

GroupElement compose(const GroupElement& g1, const GroupElement& g2);
GroupElement inverse(const GroupElement& g);

StabilityCondition act(const GroupElement& g, const StabilityCondition& sc);

/// Expresses the same stability condition in the chart anchored at the
/// pair O(i_new), O(i_new - 1)[1].  Defined wherever that pair is
/// semistable with a non-degenerate phase gap: any i_new in the geometric
/// regime, only i_new == base on the wall and in the quiver regime.
StabilityCondition rebase(const StabilityCondition& sc, std::int64_t i_new);

/// True iff the two parameter tuples describe the same stability
/// condition: equal regimes and, after rebasing geometric conditions to a
/// common chart, all four parameters agree within phase_epsilon().
bool equivalent(const StabilityCondition& sc1, const StabilityCondition& sc2);

}  // namespace p1stab
