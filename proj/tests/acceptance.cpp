// Acceptance suite: each check prints one PASS/FAIL line and the exit
// code is the number of failures.
#include "oracles.hpp"
#include "sympbranch/charoracle.hpp"
#include "sympbranch/cli.hpp"
#include "sympbranch/decomp.hpp"
#include "sympbranch/gzbasis.hpp"
#include "sympbranch/rearrange.hpp"
#include "sympbranch/sl2.hpp"
#include "sympbranch/weights.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace sympbranch;

namespace {

using Clock = std::chrono::steady_clock;

SkewShape shape(std::vector<int> mu, std::vector<int> lambda)
{
    return SkewShape(DominantWeight(std::move(mu)), DominantWeight(std::move(lambda)));
}

// 1. The worked example, reported by the CLI itself: dims 2, 2 and 9,
// with 2*2 < 9.  Under 1 s.
bool worked_example(std::string& detail)
{
    auto cli_dim = [](const std::string& shape_text) -> long long {
        std::ostringstream out, err;
        if (run_cli({"mult", shape_text, "--json"}, out, err) != 0) return -1;
        const auto j = nlohmann::json::parse(out.str());
        if (j["status"] != "OK") return -1;
        return j["results"]["dim"].get<long long>();
    };

    const auto p = shape({2, 0}, {2, 1, 0});
    const auto q = shape({0, 0}, {2, 1, 0});
    const auto sum = add_shapes(p, q);
    if (sum != shape({2, 0}, {4, 2, 0})) {
        detail = "sum shape wrong";
        return false;
    }
    const long long dp = cli_dim(p.to_string());
    const long long dq = cli_dim(q.to_string());
    const long long ds = cli_dim(sum.to_string());
    detail = "dims " + std::to_string(dp) + ", " + std::to_string(dq) + ", " + std::to_string(ds);
    return dp == 2 && dq == 2 && ds == 9 && dp * dq < ds &&
           dp == dim_mult_space(p) && dq == dim_mult_space(q) && ds == dim_mult_space(sum);
}

// 2. prod (r_i + 1) equals the brute-force count of intermediate
// weights for every member shape with n <= 4, entries <= 4.
bool dimension_law(std::string& detail)
{
    long long shapes = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& lambda : enumerate_dominant(n, 4)) {
            for (const auto& mu : enumerate_dominant(n - 1, 4)) {
                const SkewShape p(mu, lambda);
                if (!in_branching_semigroup(p)) continue;
                ++shapes;
                if (dim_mult_space(p) != testing::brute_intermediate_count(p)) {
                    detail = "mismatch at " + p.to_string();
                    return false;
                }
            }
        }
    }
    detail = std::to_string(shapes) + " member shapes";
    return true;
}

// 3. Symplectic branching as an exact character identity, n in {2,3},
// lambda_1 <= 3.
bool sp_identity(std::string& detail)
{
    long long count = 0;
    for (std::size_t n = 2; n <= 3; ++n) {
        for (const auto& lambda : enumerate_dominant(n, 3)) {
            ++count;
            if (!verify_sp_branching_identity(lambda, n)) {
                detail = "failed at lambda=" + lambda.to_string() + ", n=" + std::to_string(n);
                return false;
            }
        }
    }
    detail = std::to_string(count) + " identities";
    return true;
}

// 4. General linear branching as an exact character identity, same range.
bool gl_identity(std::string& detail)
{
    long long count = 0;
    for (std::size_t n = 2; n <= 3; ++n) {
        for (const auto& lambda : enumerate_dominant(n, 3)) {
            ++count;
            if (!verify_gl_branching_identity(lambda, n)) {
                detail = "failed at lambda=" + lambda.to_string() + ", n=" + std::to_string(n);
                return false;
            }
        }
    }
    detail = std::to_string(count) + " identities";
    return true;
}

// 5. h_sigma / h_sigma_inverse round-trip both ways and add, for every
// order type with n <= 4, entries <= 3.
bool semigroup_isomorphism(std::string& detail)
{
    long long checks = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& sigma : OrderType::all(n - 1)) {
            // every admissible rearrangement comes from a unique shape
            std::vector<int> z(2 * n, 0);
            bool ok = true;
            auto rec = [&](auto&& self, std::size_t i, int bound) -> void {
                if (!ok) return;
                if (i + 1 == 2 * n) {
                    const Rearrangement zz(z);
                    const auto p = h_sigma_inverse(sigma, zz);
                    ++checks;
                    if (h_sigma(sigma, p) != zz) {
                        detail = "inverse round-trip failed at sigma=" + sigma.to_string() +
                                 ", z=" + zz.to_string();
                        ok = false;
                    }
                    return;
                }
                for (int v = bound; v >= 0 && ok; --v) {
                    z[i] = v;
                    self(self, i + 1, v);
                }
            };
            rec(rec, 0, 3);
            if (!ok) return false;

            const auto filt = enumerate_filtration(sigma, 3);
            for (const auto& p : filt) {
                ++checks;
                if (h_sigma_inverse(sigma, h_sigma(sigma, p)) != p) {
                    detail = "forward round-trip failed at " + p.to_string();
                    return false;
                }
            }
            for (const auto& p : filt) {
                for (const auto& q : filt) {
                    ++checks;
                    if (h_sigma(sigma, add_shapes(p, q)) != h_sigma(sigma, p) + h_sigma(sigma, q)) {
                        detail = "additivity failed at " + p.to_string() + " + " + q.to_string();
                        return false;
                    }
                }
            }
        }
    }
    detail = std::to_string(checks) + " checks";
    return true;
}

bool check_peel(const OrderType& sigma, const SkewShape& p, int m, std::string& detail)
{
    const auto [p1, p2] = peel(sigma, p);
    auto in_level = [&](const SkewShape& s) {
        return in_branching_semigroup(s) && has_order_type(s, sigma) && p_max(s) <= m - 1;
    };
    if (add_shapes(p1, p2) != p || !in_level(p1) || !in_level(p2)) {
        detail = "peel failed at " + p.to_string();
        return false;
    }
    for (const auto& tau : order_types_of(p)) {
        const auto [q1, q2] = peel(sigma, p, tau);
        if (!has_order_type(q1, tau) || !has_order_type(q2, tau) || add_shapes(q1, q2) != p) {
            detail = "peel lost order type " + tau.to_string() + " at " + p.to_string();
            return false;
        }
    }
    return true;
}

bool check_megapeel(const OrderType& sigma, const SkewShape& p, int m, std::string& detail)
{
    const std::size_t n = p.rank();
    const auto result = megapeel(sigma, p);
    const std::size_t arity =
        result.kind == MegapeelCase::CartanProjection ? std::max<std::size_t>(n, 2) : n;
    if (result.parts.size() != arity) {
        detail = "megapeel arity at " + p.to_string();
        return false;
    }
    SkewShape sum = SkewShape::zero(n);
    for (const auto& q : result.parts) {
        sum = add_shapes(sum, q);
        const auto rq = r_values(q);
        const bool irreducible = std::count_if(rq.begin(), rq.end(), [](int v) { return v != 0; }) <= 1;
        if (!in_branching_semigroup(q) || !has_order_type(q, sigma) || p_max(q) > m - 1 || !irreducible) {
            detail = "megapeel part invalid at " + p.to_string();
            return false;
        }
    }
    if (sum != p) {
        detail = "megapeel sum at " + p.to_string();
        return false;
    }
    const auto rp = r_values(p);
    if (result.kind == MegapeelCase::TensorSplit) {
        long long dims = 1;
        for (std::size_t i = 0; i < n; ++i) {
            const auto rq = r_values(result.parts[i]);
            for (std::size_t j = 0; j < n; ++j) {
                if (rq[j] != (i == j ? rp[i] : 0)) {
                    detail = "megapeel factor placement at " + p.to_string();
                    return false;
                }
            }
            dims *= dim_mult_space(result.parts[i]);
        }
        if (dims != dim_mult_space(p)) {
            detail = "megapeel dimension at " + p.to_string();
            return false;
        }
    } else {
        // irreducible case: h_sigma(p) = (m,...,m,b,0,...,0)
        const auto z = h_sigma(sigma, p);
        std::size_t i = 0;
        while (i < 2 * n && z[i] == m) ++i;
        const std::size_t plateau = i;
        if (i < 2 * n) ++i;
        while (i < 2 * n && z[i] == 0) ++i;
        const bool one_factor = std::count_if(rp.begin(), rp.end(), [](int v) { return v != 0; }) <= 1;
        if (plateau == 0 || i != 2 * n || !one_factor) {
            detail = "megapeel irreducible-case shape at " + p.to_string();
            return false;
        }
    }
    return true;
}

// 6. peel, megapeel and the four-way splitting, exhaustively for
// n <= 3, m <= 3, plus at least 100 random four-way instances against
// the brute-force search.
bool decomposition_splittings(std::string& detail)
{
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& sigma : OrderType::all(n - 1)) {
            for (int m = 2; m <= 3; ++m) {
                for (const auto& p : enumerate_filtration(sigma, m)) {
                    if (p_max(p) != m) continue;
                    if (!check_peel(sigma, p, m, detail)) return false;
                    if (!check_megapeel(sigma, p, m, detail)) return false;
                }
            }

            // four-way splitting, all quadruples at level 3
            const auto filt = enumerate_filtration(sigma, 3);
            for (const auto& pA : filt) {
                for (const auto& pB : filt) {
                    const auto zsum = h_sigma(sigma, add_shapes(pA, pB));
                    for (const auto& qA : filt) {
                        const auto zqA = h_sigma(sigma, qA);
                        std::vector<int> diff(zsum.size());
                        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = zsum[i] - zqA[i];
                        if (!DominantWeight::is_dominant(diff)) continue;
                        const auto qB = h_sigma_inverse(sigma, Rearrangement(diff));
                        const auto s = cubic_split(sigma, pA, pB, qA, qB);
                        const bool equations = add_shapes(s.t1, s.r1) == pA &&
                                               add_shapes(s.t2, s.r2) == pB &&
                                               add_shapes(s.r1, s.r2) == qA &&
                                               add_shapes(s.t1, s.t2) == qB;
                        bool members = true;
                        for (const auto& part : {s.t1, s.t2, s.r1, s.r2}) {
                            members = members && in_branching_semigroup(part) &&
                                      has_order_type(part, sigma) && p_max(part) <= 3;
                        }
                        if (!equations || !members) {
                            detail = "four-way split failed at pA=" + pA.to_string() +
                                     ", pB=" + pB.to_string() + ", qA=" + qA.to_string();
                            return false;
                        }
                    }
                }
            }
        }
    }

    // randomized cross-check against the brute-force splitting search
    std::mt19937 rng(424242);
    int tested = 0;
    while (tested < 100) {
        const std::size_t n = 1 + rng() % 3;
        const auto sigmas = OrderType::all(n - 1);
        const auto& sigma = sigmas[rng() % sigmas.size()];
        const auto filt = enumerate_filtration(sigma, 3);
        const auto& pA = filt[rng() % filt.size()];
        const auto& pB = filt[rng() % filt.size()];
        const auto& qA = filt[rng() % filt.size()];
        const auto zsum = h_sigma(sigma, add_shapes(pA, pB));
        const auto zqA = h_sigma(sigma, qA);
        std::vector<int> diff(zsum.size());
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = zsum[i] - zqA[i];
        if (!DominantWeight::is_dominant(diff)) continue;
        const auto qB = h_sigma_inverse(sigma, Rearrangement(diff));

        const auto s = cubic_split(sigma, pA, pB, qA, qB);
        const auto oracle = testing::brute_four_way_splits(sigma, pA, pB, qA, qB);
        const testing::FourWaySplit ours{s.t1, s.t2, s.r1, s.r2};
        if (oracle.empty() || std::find(oracle.begin(), oracle.end(), ours) == oracle.end()) {
            detail = "random four-way split not among brute-force solutions at pA=" + pA.to_string();
            return false;
        }
        ++tested;
    }
    detail = "exhaustive n <= 3, m <= 3 plus " + std::to_string(tested) + " random quadruples";
    return true;
}

// 7. Basis torus weights: pairwise distinct and equal, as a multiset,
// to the weights of the tensor module; same range as the dimension law.
bool basis_weights(std::string& detail)
{
    long long shapes = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& lambda : enumerate_dominant(n, 4)) {
            for (const auto& mu : enumerate_dominant(n - 1, 4)) {
                const SkewShape p(mu, lambda);
                if (!in_branching_semigroup(p)) continue;
                ++shapes;

                const auto r = r_values(p);
                std::multiset<std::vector<int>> expected;
                std::vector<int> cur(n);
                auto rec = [&](auto&& self, std::size_t i) -> void {
                    if (i == n) {
                        expected.insert(cur);
                        return;
                    }
                    for (int j = 0; j <= r[i]; ++j) {
                        cur[i] = -r[i] + 2 * j;
                        self(self, i + 1);
                    }
                };
                rec(rec, 0);

                std::multiset<std::vector<int>> actual;
                for (const auto& el : basis_of(p)) actual.insert(el.weight);
                const std::set<std::vector<int>> distinct(actual.begin(), actual.end());
                if (actual != expected || distinct.size() != actual.size()) {
                    detail = "weight multiset mismatch at " + p.to_string();
                    return false;
                }
            }
        }
    }
    detail = std::to_string(shapes) + " member shapes";
    return true;
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        bool (*run)(std::string&);
        long long budget_ms;  // 0 = no stated bound
    };
    const std::vector<Criterion> criteria = {
        {1, "worked example dims 2, 2, 9 with 2*2 < 9", worked_example, 1000},
        {2, "dimension law, n <= 4, entries <= 4", dimension_law, 60000},
        {3, "symplectic character identity, n in {2,3}, entries <= 3", sp_identity, 300000},
        {4, "general linear character identity, n in {2,3}, entries <= 3", gl_identity, 300000},
        {5, "semigroup isomorphism, n <= 4, entries <= 3", semigroup_isomorphism, 0},
        {6, "decomposition splittings, n <= 3, m <= 3", decomposition_splittings, 0},
        {7, "basis weight multisets, n <= 4, entries <= 4", basis_weights, 0},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = false;
        const auto start = Clock::now();
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
        if (ok && c.budget_ms > 0 && ms >= c.budget_ms) {
            ok = false;
            detail += " [over time budget]";
        }
        if (!ok) ++failures;
        std::printf("criterion %d: %s - %s (%s, %lld ms)\n", c.id, ok ? "PASS" : "FAIL", c.name,
                    detail.c_str(), static_cast<long long>(ms));
    }
    return failures;
}
