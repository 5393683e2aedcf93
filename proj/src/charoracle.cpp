#include "sympbranch/charoracle.hpp"

#include "sympbranch/rearrange.hpp"
#include "sympbranch/sl2.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace sympbranch {

namespace {

// Sum over permutations pi of sign(pi) * prod_j entry(i = pi(j), j).
// entry(i, j) returns the (i, j) cell of the alternant matrix as a
// polynomial in k variables.
template <typename Entry>
MultiLaurentPoly alternant(std::size_t k, Entry&& entry)
{
    MultiLaurentPoly det(k);
    if (k == 0) return MultiLaurentPoly::one(0);
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int sign = 1;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) {
                if (perm[i] > perm[j]) sign = -sign;
            }
        }
        MultiLaurentPoly prod = MultiLaurentPoly::constant(k, sign);
        for (std::size_t j = 0; j < k; ++j) prod = prod * entry(perm[j], j);
        det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

MultiLaurentPoly power_monomial(std::size_t k, std::size_t var, int exponent)
{
    std::vector<int> exps(k, 0);
    exps[var] = exponent;
    return MultiLaurentPoly::monomial(k, std::move(exps));
}

}  // namespace

MultiLaurentPoly schur(const DominantWeight& lambda, std::size_t k)
{
    if (lambda.size() > k) {
        throw std::invalid_argument("schur needs length(lambda) <= number of variables");
    }
    if (k == 0) return MultiLaurentPoly::one(0);
    std::vector<int> padded(k, 0);
    for (std::size_t i = 0; i < lambda.size(); ++i) padded[i] = lambda[i];

    auto row_exps = [&](bool with_lambda) {
        std::vector<int> e(k);
        for (std::size_t i = 0; i < k; ++i) {
            e[i] = (with_lambda ? padded[i] : 0) + int(k - 1 - i);
        }
        return e;
    };
    const auto num_exps = row_exps(true);
    const auto den_exps = row_exps(false);

    const auto num = alternant(k, [&](std::size_t i, std::size_t j) {
        return power_monomial(k, j, num_exps[i]);
    });
    const auto den = alternant(k, [&](std::size_t i, std::size_t j) {
        return power_monomial(k, j, den_exps[i]);
    });
    return divide_exact(num, den);
}

MultiLaurentPoly sp_char(const DominantWeight& lambda, std::size_t n)
{
    if (lambda.size() != n) {
        throw std::invalid_argument("sp_char needs length(lambda) = rank");
    }
    if (n == 0) return MultiLaurentPoly::one(0);

    auto cell = [&](const std::vector<int>& exps, std::size_t i, std::size_t j) {
        MultiLaurentPoly e = power_monomial(n, j, exps[i]);
        e -= power_monomial(n, j, -exps[i]);
        return e;
    };
    std::vector<int> l(n), m(n);
    for (std::size_t i = 0; i < n; ++i) {
        l[i] = lambda[i] + int(n - i);
        m[i] = int(n - i);
    }
    const auto num = alternant(n, [&](std::size_t i, std::size_t j) { return cell(l, i, j); });
    const auto den = alternant(n, [&](std::size_t i, std::size_t j) { return cell(m, i, j); });
    return divide_exact(num, den);
}

Int dim_from_char(const MultiLaurentPoly& c)
{
    return c.value_at_one();
}

bool verify_gl_branching_identity(const DominantWeight& lambda, std::size_t n)
{
    if (lambda.size() != n || n == 0) {
        throw std::invalid_argument("verify_gl_branching_identity needs length(lambda) = n >= 1");
    }
    const auto ext = lambda.plus_extend();

    // s_{lambda^+} over (x_1..x_{n-1}, v, w), then v := q, w := q^{-1};
    // q lives at index n-1.
    MultiLaurentPoly lhs = schur(ext, n + 1);
    lhs = lhs.substitute_power(n, n - 1, -1);

    MultiLaurentPoly rhs(n);
    std::vector<std::size_t> keep(n - 1);
    std::iota(keep.begin(), keep.end(), 0);
    for (const auto& mu : enumerate_double_interlacing(lambda)) {
        MultiLaurentPoly term = schur(mu, n - 1).inflate(n, keep);
        const auto z = rearrange(mu, ext);
        for (std::size_t i = 0; i < z.pairs(); ++i) {
            term = term * MultiLaurentPoly::from_univariate(sl2_char(z.x(i) - z.y(i)), n, n - 1);
        }
        rhs += term;
    }
    return lhs == rhs;
}

bool verify_sp_branching_identity(const DominantWeight& lambda, std::size_t n)
{
    if (lambda.size() != n) {
        throw std::invalid_argument("verify_sp_branching_identity needs length(lambda) = n");
    }
    if (n < 2) {
        throw std::invalid_argument("verify_sp_branching_identity needs n >= 2");
    }

    // Evaluating at (x_1..x_{n-1}, q) only renames the last variable.
    const MultiLaurentPoly lhs = sp_char(lambda, n);

    MultiLaurentPoly rhs(n);
    std::vector<std::size_t> keep(n - 1);
    std::iota(keep.begin(), keep.end(), 0);
    const auto ext = lambda.plus_extend();
    for (const auto& mu : enumerate_double_interlacing(lambda)) {
        MultiLaurentPoly term = sp_char(mu, n - 1).inflate(n, keep);
        const auto z = rearrange(mu, ext);
        for (std::size_t i = 0; i < z.pairs(); ++i) {
            term = term * MultiLaurentPoly::from_univariate(sl2_char(z.x(i) - z.y(i)), n, n - 1);
        }
        rhs += term;
    }
    return lhs == rhs;
}

}  // namespace sympbranch
