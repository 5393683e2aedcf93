#pragma once

#include "sympbranch/laurent.hpp"
#include "sympbranch/weights.hpp"

#include <map>
#include <vector>

namespace sympbranch {

// Character of the (k+1)-dimensional irreducible SL2-module:
// q^{-k} + q^{-k+2} + ... + q^k.
LaurentPoly sl2_char(int k);

// Finite multiset of irreducible SL2-modules, stored as highest weight
// -> multiplicity.
class SL2Decomposition {
public:
    SL2Decomposition() = default;

    static SL2Decomposition trivial();  // one copy of the 1-dimensional module

    void add(int k, long long multiplicity = 1);
    long long multiplicity(int k) const;
    const std::map<int, long long>& multiplicities() const { return parts_; }

    long long dimension() const;
    LaurentPoly character() const;

    friend bool operator==(const SL2Decomposition&, const SL2Decomposition&) = default;

private:
    std::map<int, long long> parts_;
};

// F^a (x) F^b = F^{|a-b|} (+) F^{|a-b|+2} (+) ... (+) F^{a+b}.
SL2Decomposition clebsch_gordan(int a, int b);

// Irreducible module of L = SL2 x ... x SL2, the tensor product of the
// F^{r_i}; dimension is prod (r_i + 1).
class LModule {
public:
    LModule() = default;
    explicit LModule(std::vector<int> factors);

    const std::vector<int>& factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }
    long long dimension() const;

    friend bool operator==(const LModule&, const LModule&) = default;

private:
    std::vector<int> factors_;
};

// The L-module attached to a branching shape: factors r(p).
// Throws if p is not in the branching semigroup.
LModule l_module(const SkewShape& p);

// Decomposition of the restriction to the diagonal SL2, by iterated
// Clebsch-Gordan.
SL2Decomposition restrict_to_diagonal(const LModule& m);

// Highest weight of the Cartan component of F^a (x) F^b.
int cartan_component(int a, int b);

// dim W^{lambda/mu}: 0 outside the branching semigroup, else
// prod (r_i + 1).
long long dim_mult_space(const SkewShape& p);

}  // namespace sympbranch
