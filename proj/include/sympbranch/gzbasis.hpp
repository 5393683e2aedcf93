#pragma once

#include "sympbranch/weights.hpp"

#include <map>
#include <vector>

namespace sympbranch {

// One line of the canonical decomposition of a multiplicity space: the
// intermediate weight gamma and its diagonal torus weight
// (2*gamma_i - x_i - y_i)_i.
struct BasisElement {
    SkewShape shape;
    DominantWeight gamma;
    std::vector<int> weight;
};

// All gamma with mu < gamma < lambda^+, lexicographically decreasing.
// Throws if p is not in the branching semigroup.
std::vector<DominantWeight> enumerate_intermediate(const SkewShape& p);

// One element per intermediate weight, in the same order.
std::vector<BasisElement> basis_of(const SkewShape& p);

// Full branching table of lambda: every mu with mu << lambda mapped to
// dim W^{lambda/mu}.
std::map<DominantWeight, long long> branch_decompose(const DominantWeight& lambda);

}  // namespace sympbranch
