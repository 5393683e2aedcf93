#include "sympbranch/verify.hpp"

#include "sympbranch/charoracle.hpp"
#include "sympbranch/decomp.hpp"
#include "sympbranch/gzbasis.hpp"
#include "sympbranch/rearrange.hpp"
#include "sympbranch/sl2.hpp"
#include "sympbranch/weights.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <thread>
#include <vector>

namespace sympbranch {

namespace {

struct CellResult {
    long long checks = 0;
    std::optional<std::string> failure;
};

class Sweep {
public:
    void add_cell(std::function<CellResult()> cell) { cells_.push_back(std::move(cell)); }

    SweepOutcome run(unsigned threads) const
    {
        if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
        threads = std::min<unsigned>(threads, cells_.size() ? cells_.size() : 1);

        std::vector<CellResult> results(cells_.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < cells_.size(); i = next.fetch_add(1)) {
                results[i] = cells_[i]();
            }
        };
        if (threads <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }

        SweepOutcome outcome;
        for (const auto& res : results) {
            outcome.checks += res.checks;
            if (!outcome.ok) continue;
            if (res.failure) {
                outcome.ok = false;
                outcome.counterexample = *res.failure;
            }
        }
        return outcome;
    }

private:
    std::vector<std::function<CellResult()>> cells_;
};

// All shapes with lambda and mu entries bounded by max_entry, with no
// membership filtering; a brute-force ground set independent of the
// inverse-rearrangement enumeration.
std::vector<SkewShape> all_shapes(std::size_t n, int max_entry)
{
    std::vector<SkewShape> out;
    for (const auto& lambda : enumerate_dominant(n, max_entry)) {
        for (const auto& mu : enumerate_dominant(n - 1, max_entry)) {
            out.emplace_back(mu, lambda);
        }
    }
    return out;
}

std::vector<int> minus(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

std::string join_ints(const std::vector<int>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

CellResult semigroup_cell(std::size_t n, const OrderType& sigma, int max_entry)
{
    CellResult res;
    auto fail = [&](const std::string& what) { res.failure = what; };

    // inverse then forward over every admissible rearrangement
    {
        std::vector<int> z(2 * n, 0);
        std::set<SkewShape> seen;
        auto rec = [&](auto&& self, std::size_t i, int bound) -> bool {
            if (i + 1 == 2 * n) {
                const Rearrangement zz(z);
                const auto p = h_sigma_inverse(sigma, zz);
                ++res.checks;
                if (h_sigma(sigma, p) != zz) {
                    fail("h_sigma round-trip failed at sigma=" + sigma.to_string() +
                         ", z=" + zz.to_string());
                    return false;
                }
                seen.insert(p);
                return true;
            }
            for (int v = bound; v >= 0; --v) {
                z[i] = v;
                if (!self(self, i + 1, v)) return false;
            }
            return true;
        };
        if (!rec(rec, 0, max_entry)) return res;

        // the filtration enumeration produces exactly the same set, and
        // matches the brute-force membership scan
        const auto filt = enumerate_filtration(sigma, max_entry);
        if (filt.size() != seen.size() ||
            !std::all_of(filt.begin(), filt.end(), [&](const SkewShape& p) { return seen.count(p); })) {
            fail("enumerate_filtration mismatch at sigma=" + sigma.to_string());
            return res;
        }
        std::size_t brute = 0;
        for (const auto& p : all_shapes(n, max_entry)) {
            if (in_branching_semigroup(p) && has_order_type(p, sigma) && p_max(p) <= max_entry) ++brute;
        }
        ++res.checks;
        if (brute != filt.size()) {
            fail("filtration size " + std::to_string(filt.size()) + " != brute count " +
                 std::to_string(brute) + " at sigma=" + sigma.to_string());
            return res;
        }

        // forward then inverse, additivity, closure
        for (const auto& p : filt) {
            ++res.checks;
            if (h_sigma_inverse(sigma, h_sigma(sigma, p)) != p) {
                fail("h_sigma inverse round-trip failed at " + p.to_string());
                return res;
            }
        }
        for (const auto& p : filt) {
            for (const auto& q : filt) {
                const auto sum = add_shapes(p, q);
                ++res.checks;
                if (!in_branching_semigroup(sum) || !has_order_type(sum, sigma)) {
                    fail("closure failed: " + p.to_string() + " + " + q.to_string());
                    return res;
                }
                if (h_sigma(sigma, sum) != h_sigma(sigma, p) + h_sigma(sigma, q)) {
                    fail("h_sigma additivity failed: " + p.to_string() + " + " + q.to_string());
                    return res;
                }
            }
        }
    }
    return res;
}

CellResult order_type_cell(std::size_t n, int max_entry)
{
    CellResult res;
    for (const auto& p : all_shapes(n, max_entry)) {
        ++res.checks;
        const bool member = in_branching_semigroup(p);

        // mu << lambda iff some gamma interlaces both ways
        bool has_gamma = false;
        const int bound = p.lambda().size() ? p.lambda()[0] : 0;
        const auto ext = p.lambda().plus_extend();
        for (const auto& gamma : enumerate_dominant(n, bound)) {
            if (interlaces(p.mu(), gamma) && interlaces(gamma, ext)) {
                has_gamma = true;
                break;
            }
        }
        if (member != has_gamma) {
            res.failure = "double interlacing / intermediate weight mismatch at " + p.to_string();
            return res;
        }
        if (!member) continue;

        const auto types = order_types_of(p);
        std::size_t ties = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (p.mu()[i] == p.lambda()[i + 1]) ++ties;
        }
        if (types.empty() || types.size() != (std::size_t(1) << ties)) {
            res.failure = "order type count wrong at " + p.to_string();
            return res;
        }
        for (const auto& sigma : types) {
            if (!has_order_type(p, sigma)) {
                res.failure = "order_types_of returned invalid type at " + p.to_string();
                return res;
            }
        }
    }
    return res;
}

CellResult dimension_law_cell(std::size_t n, int max_entry)
{
    CellResult res;
    for (const auto& p : all_shapes(n, max_entry)) {
        if (!in_branching_semigroup(p)) continue;
        ++res.checks;

        // brute-force count of intermediate weights
        long long brute = 0;
        const auto ext = p.lambda().plus_extend();
        const int bound = p.lambda()[0];
        for (const auto& gamma : enumerate_dominant(n, bound)) {
            if (interlaces(p.mu(), gamma) && interlaces(gamma, ext)) ++brute;
        }
        const auto inter = enumerate_intermediate(p);
        if (brute != dim_mult_space(p) || brute != (long long)inter.size()) {
            res.failure = "dimension law failed at " + p.to_string();
            return res;
        }

        // window characterization
        const auto z = h(p);
        for (const auto& gamma : enumerate_dominant(n, bound)) {
            bool window = true;
            for (std::size_t i = 0; i < n; ++i) {
                if (gamma[i] < z.y(i) || gamma[i] > z.x(i)) window = false;
            }
            if (window != (interlaces(p.mu(), gamma) && interlaces(gamma, ext))) {
                res.failure = "window characterization failed at " + p.to_string() + ", gamma=" +
                              gamma.to_string();
                return res;
            }
        }

        // basis weights: distinct, bounded, right parity
        const auto basis = basis_of(p);
        const auto r = r_values(p);
        std::set<std::vector<int>> weights;
        for (const auto& el : basis) {
            for (std::size_t i = 0; i < n; ++i) {
                const int w = el.weight[i];
                if (w < -r[i] || w > r[i] || (w - r[i]) % 2 != 0) {
                    res.failure = "basis weight out of range at " + p.to_string();
                    return res;
                }
            }
            weights.insert(el.weight);
        }
        if (weights.size() != basis.size()) {
            res.failure = "basis weights not distinct at " + p.to_string();
            return res;
        }
    }
    return res;
}

CellResult intermediate_split_cell(const OrderType& sigma, int max_entry)
{
    CellResult res;
    const auto filt = enumerate_filtration(sigma, max_entry);
    for (const auto& p : filt) {
        for (const auto& q : filt) {
            const auto sum = add_shapes(p, q);
            for (const auto& gamma : enumerate_intermediate(sum)) {
                ++res.checks;
                const auto [nu, nu2] = split_intermediate(sigma, p, q, gamma);
                const bool ok = nu + nu2 == gamma && interlaces(p.mu(), nu) &&
                                interlaces(nu, p.lambda().plus_extend()) && interlaces(q.mu(), nu2) &&
                                interlaces(nu2, q.lambda().plus_extend());
                if (!ok) {
                    res.failure = "intermediate splitting failed at " + p.to_string() + " + " +
                                  q.to_string() + ", gamma=" + gamma.to_string();
                    return res;
                }
            }
        }
    }
    return res;
}

CellResult fundamental_cell(std::size_t n, int max_entry)
{
    CellResult res;
    std::vector<int> z(2 * n, 0);
    auto rec = [&](auto&& self, std::size_t i, int bound) -> bool {
        if (i == 2 * n) {
            const Rearrangement zz(z);
            ++res.checks;
            if (from_fundamental(to_fundamental(zz)) != zz) {
                res.failure = "fundamental coordinate round-trip failed at z=" + zz.to_string();
                return false;
            }
            return true;
        }
        for (int v = bound; v >= 0; --v) {
            z[i] = v;
            if (!self(self, i + 1, v)) return false;
        }
        return true;
    };
    if (!rec(rec, 0, max_entry)) return res;

    // staircase basis vectors
    for (std::size_t i = 0; i < 2 * n; ++i) {
        std::vector<int> e(2 * n, 0);
        e[i] = 1;
        std::vector<int> expect(2 * n, 0);
        for (std::size_t j = 0; j <= i; ++j) expect[j] = 1;
        ++res.checks;
        if (from_fundamental(FundamentalCoords(e)).values() != expect) {
            res.failure = "staircase vector mismatch at index " + std::to_string(i);
            return res;
        }
    }
    return res;
}

CellResult peel_cell(const OrderType& sigma, int max_m)
{
    CellResult res;
    for (int m = 2; m <= max_m; ++m) {
        for (const auto& p : enumerate_filtration(sigma, m)) {
            if (p_max(p) != m) continue;
            ++res.checks;
            const auto [p1, p2] = peel(sigma, p);
            auto in_level = [&](const SkewShape& s) {
                return in_branching_semigroup(s) && has_order_type(s, sigma) && p_max(s) <= m - 1;
            };
            if (add_shapes(p1, p2) != p || !in_level(p1) || !in_level(p2)) {
                res.failure = "peel postcondition failed at " + p.to_string();
                return res;
            }
            // part 2: peeling preserves every other order type p carries
            for (const auto& tau : order_types_of(p)) {
                const auto [q1, q2] = peel(sigma, p, tau);
                if (std::make_pair(q1, q2) != std::make_pair(p1, p2) || !has_order_type(q1, tau) ||
                    !has_order_type(q2, tau)) {
                    res.failure = "peel order-type preservation failed at " + p.to_string() +
                                  ", tau=" + tau.to_string();
                    return res;
                }
            }
        }
    }
    return res;
}

CellResult megapeel_cell(std::size_t n, const OrderType& sigma, int max_m)
{
    CellResult res;
    for (int m = 2; m <= max_m; ++m) {
        for (const auto& p : enumerate_filtration(sigma, m)) {
            if (p_max(p) != m) continue;
            ++res.checks;
            const auto result = megapeel(sigma, p);
            const std::size_t arity =
                result.kind == MegapeelCase::CartanProjection ? std::max<std::size_t>(n, 2) : n;
            if (result.parts.size() != arity) {
                res.failure = "megapeel part count wrong at " + p.to_string();
                return res;
            }
            SkewShape sum = SkewShape::zero(n);
            for (const auto& q : result.parts) sum = add_shapes(sum, q);
            if (sum != p) {
                res.failure = "megapeel parts do not sum at " + p.to_string();
                return res;
            }
            for (const auto& q : result.parts) {
                if (!in_branching_semigroup(q) || !has_order_type(q, sigma) || p_max(q) > m - 1) {
                    res.failure = "megapeel part outside filtration at " + p.to_string();
                    return res;
                }
                const auto rq = r_values(q);
                if (std::count_if(rq.begin(), rq.end(), [](int v) { return v != 0; }) > 1) {
                    res.failure = "megapeel part not SL2-irreducible at " + p.to_string();
                    return res;
                }
            }
            const auto rp = r_values(p);
            if (result.kind == MegapeelCase::TensorSplit) {
                // part i carries F^{r_i(p)} in slot i and only there
                long long dims = 1;
                for (std::size_t i = 0; i < n; ++i) {
                    const auto rq = r_values(result.parts[i]);
                    for (std::size_t j = 0; j < n; ++j) {
                        if (rq[j] != (i == j ? rp[i] : 0)) {
                            res.failure = "megapeel tensor factors wrong at " + p.to_string();
                            return res;
                        }
                    }
                    dims *= dim_mult_space(result.parts[i]);
                }
                if (dims != dim_mult_space(p)) {
                    res.failure = "megapeel dimension mismatch at " + p.to_string();
                    return res;
                }
            } else {
                const auto z = h_sigma(sigma, p);
                // expect (m,...,m,b,0,...,0)
                std::size_t i = 0;
                while (i < 2 * n && z[i] == m) ++i;
                const std::size_t plateau = i;
                if (i < 2 * n) ++i;  // b
                while (i < 2 * n && z[i] == 0) ++i;
                if (plateau == 0 || i != 2 * n) {
                    res.failure = "megapeel case-1 shape wrong at " + p.to_string();
                    return res;
                }
                if (std::count_if(rp.begin(), rp.end(), [](int v) { return v != 0; }) > 1) {
                    res.failure = "megapeel case-1 module not irreducible at " + p.to_string();
                    return res;
                }
            }
        }
    }
    return res;
}

CellResult cubic_cell(const OrderType& sigma, int max_m)
{
    CellResult res;
    const auto filt = enumerate_filtration(sigma, max_m);
    for (const auto& pA : filt) {
        for (const auto& pB : filt) {
            const auto sum = add_shapes(pA, pB);
            const auto zsum = h_sigma(sigma, sum);
            for (const auto& qA : filt) {
                const auto zqA = h_sigma(sigma, qA);
                const auto diff = minus(zsum.values(), zqA.values());
                if (!DominantWeight::is_dominant(diff)) continue;
                const auto qB = h_sigma_inverse(sigma, Rearrangement(diff));
                if (p_max(qB) > max_m) continue;
                ++res.checks;

                const auto split = cubic_split(sigma, pA, pB, qA, qB);
                const bool equations = add_shapes(split.t1, split.r1) == pA &&
                                       add_shapes(split.t2, split.r2) == pB &&
                                       add_shapes(split.r1, split.r2) == qA &&
                                       add_shapes(split.t1, split.t2) == qB;
                const bool members = in_branching_semigroup(split.t1) && has_order_type(split.t1, sigma) &&
                                     in_branching_semigroup(split.t2) && has_order_type(split.t2, sigma) &&
                                     in_branching_semigroup(split.r1) && has_order_type(split.r1, sigma) &&
                                     in_branching_semigroup(split.r2) && has_order_type(split.r2, sigma);
                // rho' = min(n', m') coordinate-wise
                const auto nA = to_fundamental(h_sigma(sigma, pA)).coords();
                const auto mA = to_fundamental(zqA).coords();
                const auto rr = to_fundamental(h_sigma(sigma, split.r1)).coords();
                bool min_formula = true;
                for (std::size_t i = 0; i < rr.size(); ++i) {
                    if (rr[i] != std::min(nA[i], mA[i])) min_formula = false;
                }
                if (!equations || !members || !min_formula) {
                    res.failure = "cubic split failed at pA=" + pA.to_string() + ", pB=" + pB.to_string() +
                                  ", qA=" + qA.to_string() + ", qB=" + qB.to_string();
                    return res;
                }
            }
        }
    }
    return res;
}

CellResult gl_identity_cell(std::size_t n, int max_entry)
{
    CellResult res;
    for (const auto& lambda : enumerate_dominant(n, max_entry)) {
        ++res.checks;
        if (!verify_gl_branching_identity(lambda, n)) {
            res.failure = "GL branching identity failed at lambda=" + lambda.to_string();
            return res;
        }
    }
    return res;
}

CellResult sp_identity_cell(std::size_t n, int max_entry)
{
    CellResult res;
    for (const auto& lambda : enumerate_dominant(n, max_entry)) {
        ++res.checks;
        if (!verify_sp_branching_identity(lambda, n)) {
            res.failure = "Sp branching identity failed at lambda=" + lambda.to_string();
            return res;
        }
    }
    return res;
}

CellResult schur_sanity_cell(std::size_t k, int max_entry)
{
    CellResult res;
    for (const auto& lambda : enumerate_dominant(k, max_entry)) {
        ++res.checks;
        const auto lhs = schur(lambda, k).set_var_one(k - 1);
        MultiLaurentPoly rhs(k - 1);
        for (const auto& mu : enumerate_interlacing(lambda)) rhs += schur(mu, k - 1);
        if (lhs != rhs) {
            res.failure = "Schur interlacing sum failed at lambda=" + lambda.to_string();
            return res;
        }

        // symmetry under adjacent transpositions
        for (std::size_t i = 0; i + 1 < k; ++i) {
            std::vector<std::size_t> perm(k);
            std::iota(perm.begin(), perm.end(), 0);
            std::swap(perm[i], perm[i + 1]);
            const auto s = schur(lambda, k);
            if (s.permute_vars(perm) != s) {
                res.failure = "Schur symmetry failed at lambda=" + lambda.to_string();
                return res;
            }
        }
    }
    return res;
}

CellResult sp_symmetry_cell(std::size_t n, int max_entry)
{
    CellResult res;
    for (const auto& lambda : enumerate_dominant(n, max_entry)) {
        ++res.checks;
        const auto c = sp_char(lambda, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (c.invert_var(i) != c) {
                res.failure = "sp_char inversion symmetry failed at lambda=" + lambda.to_string();
                return res;
            }
        }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::swap(perm[i], perm[i + 1]);
            if (c.permute_vars(perm) != c) {
                res.failure = "sp_char permutation symmetry failed at lambda=" + lambda.to_string();
                return res;
            }
        }
    }
    return res;
}

CellResult sl2_consistency_cell(std::size_t n, int max_entry)
{
    CellResult res;
    // Clebsch-Gordan against the character product
    for (int a = 0; a <= max_entry + 1; ++a) {
        for (int b = 0; b <= max_entry + 1; ++b) {
            ++res.checks;
            if (clebsch_gordan(a, b).character() != sl2_char(a) * sl2_char(b)) {
                res.failure = "Clebsch-Gordan character mismatch at a=" + std::to_string(a) +
                              ", b=" + std::to_string(b);
                return res;
            }
            if (cartan_component(a, b) != a + b) {
                res.failure = "Cartan component wrong at a=" + std::to_string(a);
                return res;
            }
        }
    }

    // diagonal restriction against the product of factor characters
    std::vector<int> factors(n, 0);
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == n) {
            const LModule m{factors};
            LaurentPoly prod = LaurentPoly::one();
            for (int r : factors) prod = prod * sl2_char(r);
            ++res.checks;
            const auto dec = restrict_to_diagonal(m);
            if (dec.character() != prod || dec.dimension() != m.dimension()) {
                res.failure = "diagonal restriction mismatch at factors=(" + join_ints(factors) + ")";
                return false;
            }
            return true;
        }
        for (int v = 0; v <= max_entry; ++v) {
            factors[i] = v;
            if (!self(self, i + 1)) return false;
        }
        return true;
    };
    if (!rec(rec, 0)) return res;
    return res;
}

CellResult basis_character_cell(std::size_t n, int max_entry)
{
    CellResult res;
    for (const auto& p : all_shapes(n, max_entry)) {
        if (!in_branching_semigroup(p)) continue;
        ++res.checks;
        LaurentPoly diag;
        for (const auto& el : basis_of(p)) {
            diag.add_term(std::accumulate(el.weight.begin(), el.weight.end(), 0), 1);
        }
        LaurentPoly prod = LaurentPoly::one();
        for (int r : r_values(p)) prod = prod * sl2_char(r);
        if (diag != prod) {
            res.failure = "basis diagonal character mismatch at " + p.to_string();
            return res;
        }
    }
    return res;
}

CellResult branch_dimension_cell(std::size_t n, int max_entry)
{
    CellResult res;
    for (const auto& lambda : enumerate_dominant(n, max_entry)) {
        ++res.checks;
        Int total = 0;
        for (const auto& [mu, mult] : branch_decompose(lambda)) {
            total += Int(mult) * dim_from_char(sp_char(mu, n - 1));
        }
        if (total != dim_from_char(sp_char(lambda, n))) {
            res.failure = "branching dimension bookkeeping failed at lambda=" + lambda.to_string();
            return res;
        }
    }
    return res;
}

}  // namespace

SweepOutcome& SweepOutcome::merge(const SweepOutcome& other)
{
    checks += other.checks;
    if (ok && !other.ok) {
        ok = false;
        counterexample = other.counterexample;
    }
    return *this;
}

SweepOutcome sweep_semigroup(const SweepOptions& opts)
{
    Sweep sweep;
    for (int n = 1; n <= opts.max_rank; ++n) {
        for (const auto& sigma : OrderType::all(n - 1)) {
            sweep.add_cell([=] { return semigroup_cell(n, sigma, opts.max_entry); });
        }
        sweep.add_cell([=] { return order_type_cell(n, opts.max_entry); });
        sweep.add_cell([=] { return dimension_law_cell(n, opts.max_entry); });
        // the splitting sweep grows with the fourth power of the
        // filtration size; damp the entry bound at higher ranks
        const int peel_entry = n >= 4 ? std::min(opts.max_entry, 2) : opts.max_entry;
        for (const auto& sigma : OrderType::all(n - 1)) {
            sweep.add_cell([=] { return intermediate_split_cell(sigma, peel_entry); });
        }
    }
    return sweep.run(opts.threads);
}

SweepOutcome sweep_decomp(const SweepOptions& opts)
{
    Sweep sweep;
    for (int n = 1; n <= opts.max_rank; ++n) {
        sweep.add_cell([=] { return fundamental_cell(n, opts.max_entry); });
        for (const auto& sigma : OrderType::all(n - 1)) {
            sweep.add_cell([=] { return peel_cell(sigma, opts.max_entry); });
            sweep.add_cell([=] { return megapeel_cell(n, sigma, opts.max_entry); });
            sweep.add_cell([=] { return cubic_cell(sigma, opts.max_entry); });
        }
    }
    return sweep.run(opts.threads);
}

SweepOutcome sweep_characters(const SweepOptions& opts)
{
    Sweep sweep;
    for (int n = 1; n <= opts.max_rank; ++n) {
        sweep.add_cell([=] { return gl_identity_cell(n, opts.max_entry); });
        if (n >= 2) sweep.add_cell([=] { return sp_identity_cell(n, opts.max_entry); });
        sweep.add_cell([=] { return schur_sanity_cell(n, opts.max_entry); });
        sweep.add_cell([=] { return branch_dimension_cell(n, opts.max_entry); });
        sweep.add_cell([=] { return sp_symmetry_cell(n, opts.max_entry); });
        sweep.add_cell([=] { return sl2_consistency_cell(n, opts.max_entry); });
        sweep.add_cell([=] { return basis_character_cell(n, opts.max_entry); });
    }
    return sweep.run(opts.threads);
}

}  // namespace sympbranch
