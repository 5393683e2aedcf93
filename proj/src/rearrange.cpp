#include "sympbranch/rearrange.hpp"

#include <algorithm>
#include <stdexcept>

namespace sympbranch {

Rearrangement::Rearrangement(std::vector<int> z) : z_(std::move(z))
{
    if (z_.size() % 2 != 0) {
        throw std::invalid_argument("rearrangement length must be even, got " + std::to_string(z_.size()));
    }
    if (!DominantWeight::is_dominant(z_)) {
        throw std::invalid_argument("rearrangement entries must be weakly decreasing and non-negative");
    }
}

Rearrangement Rearrangement::zero(std::size_t n)
{
    return Rearrangement(std::vector<int>(2 * n, 0));
}

std::string Rearrangement::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < z_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(z_[i]);
    }
    return out;
}

Rearrangement operator+(const Rearrangement& a, const Rearrangement& b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("cannot add rearrangements of sizes " + std::to_string(a.size()) +
                                    " and " + std::to_string(b.size()));
    }
    std::vector<int> z(a.size());
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = a[i] + b[i];
    return Rearrangement(std::move(z));
}

Rearrangement rearrange(const DominantWeight& mu, const DominantWeight& lambda)
{
    if (mu.size() + 2 != lambda.size()) {
        throw std::invalid_argument("rearrange needs length(lambda) = length(mu) + 2, got " +
                                    std::to_string(mu.size()) + " and " + std::to_string(lambda.size()));
    }
    if (!double_interlaces(mu, lambda)) {
        throw std::invalid_argument("rearrange requires mu << lambda");
    }
    const std::size_t n = mu.size() + 1;
    std::vector<int> z;
    z.reserve(2 * n);
    z.push_back(lambda[0]);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        z.push_back(std::max(mu[i], lambda[i + 1]));
        z.push_back(std::min(mu[i], lambda[i + 1]));
    }
    z.push_back(lambda[n]);
    return Rearrangement(std::move(z));
}

Rearrangement h(const SkewShape& p)
{
    if (!in_branching_semigroup(p)) {
        throw std::invalid_argument("shape " + p.to_string() + " is not in the branching semigroup");
    }
    return rearrange(p.mu(), p.lambda().plus_extend());
}

std::vector<int> r_values(const SkewShape& p)
{
    const auto z = h(p);
    std::vector<int> r(z.pairs());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = z.x(i) - z.y(i);
    return r;
}

std::vector<int> s_values(const SkewShape& p)
{
    const auto z = h(p);
    std::vector<int> s(z.pairs() - 1);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = z.y(i) - z.x(i + 1);
    return s;
}

IndexMaps index_maps(const OrderType& sigma)
{
    const std::size_t n = sigma.size() + 1;
    IndexMaps maps;
    maps.a.resize(n - 1);
    maps.b.resize(n + 1);
    maps.b[0] = 0;
    maps.b[n] = 2 * n - 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (sigma[i] == Rel::GE) {
            maps.a[i] = 2 * i + 1;
            maps.b[i + 1] = 2 * i + 2;
        } else {
            maps.a[i] = 2 * i + 2;
            maps.b[i + 1] = 2 * i + 1;
        }
    }
    return maps;
}

Rearrangement h_sigma(const OrderType& sigma, const SkewShape& p)
{
    if (!in_branching_semigroup(p) || !has_order_type(p, sigma)) {
        throw std::invalid_argument("shape " + p.to_string() + " is not in the semigroup of order type " +
                                    sigma.to_string());
    }
    return h(p);
}

SkewShape h_sigma_inverse(const OrderType& sigma, const Rearrangement& z)
{
    const std::size_t n = sigma.size() + 1;
    if (z.pairs() != n) {
        throw std::invalid_argument("rearrangement size " + std::to_string(z.size()) +
                                    " does not match order type " + sigma.to_string());
    }
    if (!z.ends_in_zero()) {
        throw std::invalid_argument("rearrangement " + z.to_string() + " does not end in zero");
    }
    const auto maps = index_maps(sigma);
    std::vector<int> mu(n - 1), lambda(n);
    for (std::size_t i = 0; i + 1 < n; ++i) mu[i] = z[maps.a[i]];
    for (std::size_t j = 0; j < n; ++j) lambda[j] = z[maps.b[j]];
    return SkewShape(DominantWeight(std::move(mu)), DominantWeight(std::move(lambda)));
}

std::pair<DominantWeight, DominantWeight> split_intermediate(const OrderType& sigma,
                                                             const SkewShape& p,
                                                             const SkewShape& q,
                                                             const DominantWeight& gamma)
{
    const auto zp = h_sigma(sigma, p);
    const auto zq = h_sigma(sigma, q);
    const std::size_t n = zp.pairs();
    if (gamma.size() != n || zq.pairs() != n) {
        throw std::invalid_argument("split_intermediate rank mismatch");
    }
    const auto sum = add_shapes(p, q);
    if (!interlaces(sum.mu(), gamma) || !interlaces(gamma, sum.lambda().plus_extend())) {
        throw std::invalid_argument("gamma " + gamma.to_string() + " is not intermediate for " +
                                    sum.to_string());
    }
    std::vector<int> nu(n), nu2(n);
    for (std::size_t i = 0; i < n; ++i) {
        nu[i] = std::max(zp.y(i), gamma[i] - zq.x(i));
        nu2[i] = gamma[i] - nu[i];
    }
    return {DominantWeight(std::move(nu)), DominantWeight(std::move(nu2))};
}

}  // namespace sympbranch
