// Test-only oracles, kept independent of the library code paths they
// check: brute-force enumerations and the Weyl dimension formulas.
#pragma once

#include "sympbranch/decomp.hpp"
#include "sympbranch/laurent.hpp"
#include "sympbranch/rearrange.hpp"
#include "sympbranch/weights.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace sympbranch::testing {

// Counts gamma with mu < gamma < lambda^+ by scanning every dominant
// weight up to lambda_1, using only the interlacing predicates.
inline long long brute_intermediate_count(const SkewShape& p)
{
    long long count = 0;
    const auto ext = p.lambda().plus_extend();
    const int bound = p.lambda()[0];
    for (const auto& gamma : enumerate_dominant(p.rank(), bound)) {
        if (interlaces(p.mu(), gamma) && interlaces(gamma, ext)) ++count;
    }
    return count;
}

// All gamma with mu < gamma < lambda^+ via the same scan.
inline std::vector<DominantWeight> brute_intermediates(const SkewShape& p)
{
    std::vector<DominantWeight> out;
    const auto ext = p.lambda().plus_extend();
    const int bound = p.lambda()[0];
    for (const auto& gamma : enumerate_dominant(p.rank(), bound)) {
        if (interlaces(p.mu(), gamma) && interlaces(gamma, ext)) out.push_back(gamma);
    }
    return out;
}

// Exact product of fractions with a zero-remainder check at the end.
class ExactFraction {
public:
    void multiply(long long num, long long den)
    {
        num_ *= num;
        den_ *= den;
    }

    Int value() const
    {
        if (den_ == 0 || num_ % den_ != 0) throw std::logic_error("fraction is not an integer");
        return num_ / den_;
    }

private:
    Int num_ = 1;
    Int den_ = 1;
};

// Weyl dimension formula for GL_k.
inline Int weyl_dim_gl(const DominantWeight& lambda, std::size_t k)
{
    std::vector<long long> l(k, 0);
    for (std::size_t i = 0; i < lambda.size(); ++i) l[i] = lambda[i];
    ExactFraction f;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            f.multiply(l[i] - l[j] + (long long)(j - i), (long long)(j - i));
        }
    }
    return f.value();
}

// Weyl dimension formula for Sp_{2n}.
inline Int weyl_dim_sp(const DominantWeight& lambda, std::size_t n)
{
    std::vector<long long> l(n), m(n);
    for (std::size_t i = 0; i < n; ++i) {
        l[i] = lambda[i] + (long long)(n - i);
        m[i] = (long long)(n - i);
    }
    ExactFraction f;
    for (std::size_t i = 0; i < n; ++i) {
        f.multiply(l[i], m[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            f.multiply(l[i] * l[i] - l[j] * l[j], m[i] * m[i] - m[j] * m[j]);
        }
    }
    return f.value();
}

struct FourWaySplit {
    SkewShape t1, t2, r1, r2;

    friend bool operator==(const FourWaySplit&, const FourWaySplit&) = default;
};

// Every four-way splitting of pA + pB = qA + qB by direct search over
// candidate t1 rearrangements; used to cross-check cubic_split.
inline std::vector<FourWaySplit> brute_four_way_splits(const OrderType& sigma, const SkewShape& pA,
                                                       const SkewShape& pB, const SkewShape& qA,
                                                       const SkewShape& qB)
{
    const auto zpA = h_sigma(sigma, pA).values();
    const auto zpB = h_sigma(sigma, pB).values();
    const auto zqA = h_sigma(sigma, qA).values();
    const auto zqB = h_sigma(sigma, qB).values();
    const std::size_t len = zpA.size();

    std::vector<FourWaySplit> found;
    std::vector<int> v(len, 0);
    auto emit = [&] {
        std::array<std::vector<int>, 3> rest;
        rest[0] = rest[1] = rest[2] = std::vector<int>(len);
        for (std::size_t i = 0; i < len; ++i) {
            rest[0][i] = zpA[i] - v[i];          // r1
            rest[1][i] = zqB[i] - v[i];          // t2
            rest[2][i] = zpB[i] - zqB[i] + v[i];  // r2
        }
        for (const auto& w : rest) {
            if (!DominantWeight::is_dominant(w)) return;
        }
        // r1 + r2 = qA is then automatic; assert it anyway
        for (std::size_t i = 0; i < len; ++i) {
            if (rest[0][i] + rest[2][i] != zqA[i]) return;
        }
        found.push_back(FourWaySplit{h_sigma_inverse(sigma, Rearrangement(v)),
                                     h_sigma_inverse(sigma, Rearrangement(rest[1])),
                                     h_sigma_inverse(sigma, Rearrangement(rest[0])),
                                     h_sigma_inverse(sigma, Rearrangement(rest[2]))});
    };
    auto rec = [&](auto&& self, std::size_t i, int prev) -> void {
        if (i == len) {
            if (v.empty() || v.back() == 0) emit();
            return;
        }
        const int hi = std::min({prev, zpA[i], zqB[i]});
        for (int x = 0; x <= hi; ++x) {
            v[i] = x;
            self(self, i + 1, x);
        }
    };
    rec(rec, 0, 1 << 20);
    return found;
}

}  // namespace sympbranch::testing
