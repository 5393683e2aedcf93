#pragma once

#include "sympbranch/rearrange.hpp"
#include "sympbranch/weights.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace sympbranch {

// Filtration level of a shape: lambda_1.
int p_max(const SkewShape& p);

// The finite set Lambda_B(sigma, m) = {p of order type sigma with
// p_max <= m}, produced through the inverse rearrangement over all
// weakly decreasing sequences with first entry <= m and last entry 0.
std::vector<SkewShape> enumerate_filtration(const OrderType& sigma, int m);

// Coefficients of a rearrangement in the staircase basis
// w_i = (1,...,1,0,...,0) (i ones): coords_i = z_i - z_{i+1}.
class FundamentalCoords {
public:
    explicit FundamentalCoords(std::vector<int> coords);

    std::size_t size() const { return coords_.size(); }
    int operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<int>& coords() const { return coords_; }

    friend bool operator==(const FundamentalCoords&, const FundamentalCoords&) = default;

private:
    std::vector<int> coords_;  // non-negative
};

FundamentalCoords to_fundamental(const Rearrangement& z);
Rearrangement from_fundamental(const FundamentalCoords& c);

// Splits p (of order type sigma, with p_max = m > 1) into p' + p''
// with both parts at filtration level m-1: p' is the 0/1 indicator of
// h_sigma(p).  When tau is given, p must also be of order type tau and
// both parts stay in Lambda_B(tau, m-1).
std::pair<SkewShape, SkewShape> peel(const OrderType& sigma, const SkewShape& p,
                                     const std::optional<OrderType>& tau = std::nullopt);

enum class MegapeelCase {
    TensorSplit,       // A^{q_1} (x) ... (x) A^{q_n} = A^p
    CartanProjection,  // A^p SL2-irreducible; product map projects onto it
};

struct MegapeelResult {
    std::vector<SkewShape> parts;  // shapes summing to p, each at level m-1
    MegapeelCase kind;
};

// Factors p (p_max = m > 1) into shapes of filtration level m-1 whose
// modules either tensor to A^p exactly (n parts, one per slot) or
// present A^p as a Cartan component (the two-part peel, padded with
// zero shapes up to n; at rank one the peel's two parts stand alone).
MegapeelResult megapeel(const OrderType& sigma, const SkewShape& p);

struct CubicSplit {
    SkewShape t1, t2, r1, r2;
};

// Given pA + pB = qA + qB (all of order type sigma), produces shapes
// with t1 + r1 = pA, t2 + r2 = pB, r1 + r2 = qA, t1 + t2 = qB, computed
// coordinate-wise in the staircase basis.
CubicSplit cubic_split(const OrderType& sigma, const SkewShape& pA, const SkewShape& pB,
                       const SkewShape& qA, const SkewShape& qB);

}  // namespace sympbranch
