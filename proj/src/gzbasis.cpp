#include "sympbranch/gzbasis.hpp"

#include "sympbranch/rearrange.hpp"
#include "sympbranch/sl2.hpp"

#include <stdexcept>

namespace sympbranch {

std::vector<DominantWeight> enumerate_intermediate(const SkewShape& p)
{
    const auto z = h(p);  // validates membership
    const std::size_t n = z.pairs();
    std::vector<DominantWeight> out;
    std::vector<int> cur(n, 0);
    // box product of the windows [y_i, x_i]; any choice is dominant
    // because y_i >= x_{i+1}
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            out.emplace_back(cur);
            return;
        }
        for (int v = z.x(i); v >= z.y(i); --v) {
            cur[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<BasisElement> basis_of(const SkewShape& p)
{
    const auto z = h(p);
    const std::size_t n = z.pairs();
    std::vector<BasisElement> out;
    for (auto& gamma : enumerate_intermediate(p)) {
        std::vector<int> weight(n);
        for (std::size_t i = 0; i < n; ++i) weight[i] = 2 * gamma[i] - z.x(i) - z.y(i);
        out.push_back(BasisElement{p, std::move(gamma), std::move(weight)});
    }
    return out;
}

std::map<DominantWeight, long long> branch_decompose(const DominantWeight& lambda)
{
    if (lambda.size() == 0) {
        throw std::invalid_argument("branch_decompose needs a weight of positive length");
    }
    std::map<DominantWeight, long long> table;
    for (const auto& mu : enumerate_double_interlacing(lambda)) {
        table.emplace(mu, dim_mult_space(SkewShape(mu, lambda)));
    }
    return table;
}

}  // namespace sympbranch
