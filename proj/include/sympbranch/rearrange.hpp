#pragma once

#include "sympbranch/weights.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sympbranch {

// A weakly decreasing non-negative sequence of even length 2n, read as
// interleaved pairs (x_1, y_1, ..., x_n, y_n).
class Rearrangement {
public:
    explicit Rearrangement(std::vector<int> z);

    static Rearrangement zero(std::size_t n);

    std::size_t size() const { return z_.size(); }    // 2n
    std::size_t pairs() const { return z_.size() / 2; }  // n
    int operator[](std::size_t i) const { return z_[i]; }
    const std::vector<int>& values() const { return z_; }

    int x(std::size_t i) const { return z_[2 * i]; }      // 0-based pair index
    int y(std::size_t i) const { return z_[2 * i + 1]; }

    bool ends_in_zero() const { return z_.empty() || z_.back() == 0; }

    std::string to_string() const;

    friend bool operator==(const Rearrangement&, const Rearrangement&) = default;

private:
    std::vector<int> z_;
};

// Entry-wise sum; sizes must agree.
Rearrangement operator+(const Rearrangement& a, const Rearrangement& b);

// Non-increasing rearrangement of (mu_1..mu_{n-1}, lambda_1..lambda_{n+1}),
// computed by the closed form (lambda_1, max(mu_1,lambda_2),
// min(mu_1,lambda_2), ..., lambda_{n+1}).  Requires length(lambda) =
// length(mu) + 2 and mu << lambda.
Rearrangement rearrange(const DominantWeight& mu, const DominantWeight& lambda);

// h(lambda/mu) = rearrange(mu, lambda^+).  Its last entry is always 0.
Rearrangement h(const SkewShape& p);

// r_i = x_i - y_i (length n) and s_i = y_i - x_{i+1} (length n-1), both
// from h(p).
std::vector<int> r_values(const SkewShape& p);
std::vector<int> s_values(const SkewShape& p);

// Positions (0-based, into a length-2n rearrangement) where the entries
// of mu and lambda^+ land under the order type sigma.  a has n-1
// entries, b has n+1; both strictly increase and partition {0..2n-1}.
struct IndexMaps {
    std::vector<std::size_t> a;
    std::vector<std::size_t> b;
};

IndexMaps index_maps(const OrderType& sigma);

// h restricted to Lambda_B(sigma); checks membership.
Rearrangement h_sigma(const OrderType& sigma, const SkewShape& p);

// Inverse of h_sigma on rearrangements ending in zero:
// mu_i = z[a[i]], lambda_j = z[b[j]] for j < n.
SkewShape h_sigma_inverse(const OrderType& sigma, const Rearrangement& z);

// Splits an intermediate weight gamma of p+q into intermediates of p
// and of q (p, q of common order type sigma).  Takes the least
// admissible value nu_i = max(y_i, gamma_i - x'_i) in each slot;
// returns (nu, nu') with gamma = nu + nu', mu_p < nu < lambda_p^+ and
// mu_q < nu' < lambda_q^+.
std::pair<DominantWeight, DominantWeight> split_intermediate(const OrderType& sigma,
                                                             const SkewShape& p,
                                                             const SkewShape& q,
                                                             const DominantWeight& gamma);

}  // namespace sympbranch
