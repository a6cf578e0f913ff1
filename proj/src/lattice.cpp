#include "parkpoly/lattice.hpp"

#include <algorithm>

namespace parkpoly {

PointSet all_permutations(LatticePoint v) {
    PointSet out;
    std::sort(v.begin(), v.end());
    do {
        out.insert(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

LatticePoint sorted_ascending(LatticePoint v) {
    std::sort(v.begin(), v.end());
    return v;
}

LatticePoint sorted_descending(LatticePoint v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

}  // namespace parkpoly
