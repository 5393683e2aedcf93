#include "sympbranch/decomp.hpp"

#include <algorithm>
#include <stdexcept>

namespace sympbranch {

int p_max(const SkewShape& p)
{
    return p.lambda().size() == 0 ? 0 : p.lambda()[0];
}

std::vector<SkewShape> enumerate_filtration(const OrderType& sigma, int m)
{
    const std::size_t n = sigma.size() + 1;
    std::vector<SkewShape> out;
    if (m < 0) return out;
    std::vector<int> z(2 * n, 0);
    // weakly decreasing z with z_1 <= m and z_{2n} = 0
    auto rec = [&](auto&& self, std::size_t i, int bound) -> void {
        if (i + 1 == 2 * n) {
            out.push_back(h_sigma_inverse(sigma, Rearrangement(z)));
            return;
        }
        for (int v = bound; v >= 0; --v) {
            z[i] = v;
            self(self, i + 1, v);
        }
    };
    rec(rec, 0, m);
    return out;
}

FundamentalCoords::FundamentalCoords(std::vector<int> coords) : coords_(std::move(coords))
{
    for (int c : coords_) {
        if (c < 0) throw std::invalid_argument("fundamental coordinates must be non-negative");
    }
}

FundamentalCoords to_fundamental(const Rearrangement& z)
{
    std::vector<int> coords(z.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        coords[i] = z[i] - (i + 1 < z.size() ? z[i + 1] : 0);
    }
    return FundamentalCoords(std::move(coords));
}

Rearrangement from_fundamental(const FundamentalCoords& c)
{
    std::vector<int> z(c.size());
    int suffix = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        suffix += c[i];
        z[i] = suffix;
    }
    return Rearrangement(std::move(z));
}

std::pair<SkewShape, SkewShape> peel(const OrderType& sigma, const SkewShape& p,
                                     const std::optional<OrderType>& tau)
{
    const int m = p_max(p);
    if (m <= 1) throw std::invalid_argument("peel needs p_max > 1, got " + std::to_string(m));
    if (tau && !has_order_type(p, *tau)) {
        throw std::invalid_argument("shape " + p.to_string() + " is not of order type " + tau->to_string());
    }
    const auto z = h_sigma(sigma, p);
    std::vector<int> lo(z.size()), hi(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        lo[i] = z[i] >= 1 ? 1 : 0;
        hi[i] = z[i] - lo[i];
    }
    return {h_sigma_inverse(sigma, Rearrangement(std::move(lo))),
            h_sigma_inverse(sigma, Rearrangement(std::move(hi)))};
}

MegapeelResult megapeel(const OrderType& sigma, const SkewShape& p)
{
    const int m = p_max(p);
    if (m <= 1) throw std::invalid_argument("megapeel needs p_max > 1, got " + std::to_string(m));
    const auto z = h_sigma(sigma, p);
    const std::size_t n = z.pairs();

    // xi_i = (x_i - x_{i+1} repeated 2i-1 times, y_i - x_{i+1}, 0...);
    // xi_n = (x_n, ..., x_n, 0).  They telescope back to z.
    std::vector<Rearrangement> xi;
    xi.reserve(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<int> v(2 * n, 0);
        for (std::size_t j = 0; j < 2 * i + 1; ++j) v[j] = z.x(i) - z.x(i + 1);
        v[2 * i + 1] = z.y(i) - z.x(i + 1);
        xi.emplace_back(std::move(v));
    }
    {
        std::vector<int> v(2 * n, z.x(n - 1));
        v[2 * n - 1] = 0;
        xi.emplace_back(std::move(v));
    }

    const bool all_below = std::all_of(xi.begin(), xi.end(),
                                       [&](const Rearrangement& v) { return v[0] <= m - 1; });
    MegapeelResult result;
    if (all_below) {
        result.kind = MegapeelCase::TensorSplit;
        for (const auto& v : xi) result.parts.push_back(h_sigma_inverse(sigma, v));
    } else {
        // h_sigma(p) = (m,...,m,b,0,...,0), so A^p is SL2-irreducible
        // and the two-part peel exposes it as a Cartan component.
        result.kind = MegapeelCase::CartanProjection;
        auto [p1, p2] = peel(sigma, p);
        result.parts.push_back(std::move(p1));
        result.parts.push_back(std::move(p2));
        while (result.parts.size() < n) result.parts.push_back(SkewShape::zero(n));
    }
    return result;
}

CubicSplit cubic_split(const OrderType& sigma, const SkewShape& pA, const SkewShape& pB,
                       const SkewShape& qA, const SkewShape& qB)
{
    if (add_shapes(pA, pB) != add_shapes(qA, qB)) {
        throw std::invalid_argument("cubic_split needs pA + pB = qA + qB");
    }
    const auto nA = to_fundamental(h_sigma(sigma, pA)).coords();
    const auto nB = to_fundamental(h_sigma(sigma, pB)).coords();
    h_sigma(sigma, qA);  // membership check
    const auto mB = to_fundamental(h_sigma(sigma, qB)).coords();

    const std::size_t len = nA.size();
    std::vector<int> t1(len), t2(len), r1(len), r2(len);
    for (std::size_t i = 0; i < len; ++i) {
        const int common = std::min(nB[i], mB[i]);
        t1[i] = mB[i] - common;
        r1[i] = nA[i] - mB[i] + common;
        t2[i] = common;
        r2[i] = nB[i] - common;
    }
    auto back = [&](std::vector<int> coords) {
        return h_sigma_inverse(sigma, from_fundamental(FundamentalCoords(std::move(coords))));
    };
    return CubicSplit{back(std::move(t1)), back(std::move(t2)), back(std::move(r1)),
                      back(std::move(r2))};
}

}  // namespace sympbranch
