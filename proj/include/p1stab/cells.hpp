#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "p1stab/stability.hpp"

namespace p1stab {

/// Labels of the cell decomposition of the stability manifold by the
/// heart P((0, 1]).  S(j) carries a shift of the standard heart; the
/// four-cells SMinus/SPlus(p, i, j) carry the pair heart
/// <O(i-1)[p+j], O(i)[j]> on the side where the first resp. second
/// generator has the larger phase; Wall(i, j) is their common face at
/// p = 1 and Line(i, j) its locus where both phases equal one.
struct CellS {
    std::int64_t j = 0;
    friend bool operator==(const CellS&, const CellS&) = default;
};

struct CellSMinus {
    std::int64_t p = 1;
    std::int64_t i = 0;
    std::int64_t j = 0;
    friend bool operator==(const CellSMinus&, const CellSMinus&) = default;
};

struct CellSPlus {
    std::int64_t p = 1;
    std::int64_t i = 0;
    std::int64_t j = 0;
    friend bool operator==(const CellSPlus&, const CellSPlus&) = default;
};

struct CellWall {
    std::int64_t i = 0;
    std::int64_t j = 0;
    friend bool operator==(const CellWall&, const CellWall&) = default;
};

struct CellLine {
    std::int64_t i = 0;
    std::int64_t j = 0;
    friend bool operator==(const CellLine&, const CellLine&) = default;
};

using CellLabel = std::variant<CellS, CellSMinus, CellSPlus, CellWall, CellLine>;

std::string to_string(const CellLabel& label);
bool is_four_cell(const CellLabel& label);

CellLabel cell_of(const StabilityCondition& sc);

/// Declared neighbors of a four-cell; the i-index moves only at p = 1,
/// the p/j-indices only through the opposite sign.  Throws for S, Wall
/// and Line labels.
std::vector<CellLabel> neighbors(const CellLabel& label);

struct PathSample {
    double t = 0.0;
    CellLabel cell;
};

/// Classifies `steps` evenly spaced samples of the straight parameter
/// path between two conditions (rebasing `to` onto `from`'s chart when
/// the bases differ), then inserts refined samples at detected wall and
/// torsion-ray crossings so codimension-one separators show up in the
/// output.  Throws if the interpolation leaves the chart, reporting the
/// offending parameter.
std::vector<PathSample> scan_path(const StabilityCondition& from, const StabilityCondition& to,
                                  int steps);

}  // namespace p1stab
