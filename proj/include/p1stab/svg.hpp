#pragma once

#include <string>
#include <vector>

#include "p1stab/cells.hpp"
#include "p1stab/moduli.hpp"
#include "p1stab/stability.hpp"

namespace p1stab {

/// Central-charge ray diagram of an HN filtration: one ray per piece at
/// angle pi * phase with length |Z|.
std::string svg_rays(const HNFiltration& filtration);

/// The fundamental domain with its boundary curves, the wall line, and a
/// set of reduced chart points overlaid.
std::string svg_domain(const std::vector<ChartPoint>& points);

/// Phase-pair trajectory of a parameter scan with separator samples
/// (wall, line, torsion-ray) marked.
std::string svg_scan(const std::vector<PathSample>& samples,
                     const std::vector<std::pair<double, double>>& phase_pairs);

}  // namespace p1stab
