#pragma once

#include <set>
#include <vector>

namespace parkpoly {

using Coord = long;
using LatticePoint = std::vector<Coord>;
using PointSet = std::set<LatticePoint>;

/// All distinct permutations of the entries of v.
PointSet all_permutations(LatticePoint v);

LatticePoint sorted_ascending(LatticePoint v);
LatticePoint sorted_descending(LatticePoint v);

}  // namespace parkpoly
