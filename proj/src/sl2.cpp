#include "sympbranch/sl2.hpp"

#include "sympbranch/rearrange.hpp"

#include <cstdlib>
#include <stdexcept>

namespace sympbranch {

LaurentPoly sl2_char(int k)
{
    if (k < 0) throw std::invalid_argument("sl2_char needs k >= 0");
    LaurentPoly p;
    for (int e = -k; e <= k; e += 2) p.add_term(e, 1);
    return p;
}

SL2Decomposition SL2Decomposition::trivial()
{
    SL2Decomposition d;
    d.add(0);
    return d;
}

void SL2Decomposition::add(int k, long long multiplicity)
{
    if (k < 0 || multiplicity < 0) throw std::invalid_argument("bad SL2 summand");
    if (multiplicity == 0) return;
    parts_[k] += multiplicity;
}

long long SL2Decomposition::multiplicity(int k) const
{
    const auto it = parts_.find(k);
    return it == parts_.end() ? 0 : it->second;
}

long long SL2Decomposition::dimension() const
{
    long long dim = 0;
    for (const auto& [k, m] : parts_) dim += m * (k + 1);
    return dim;
}

LaurentPoly SL2Decomposition::character() const
{
    LaurentPoly ch;
    for (const auto& [k, m] : parts_) {
        const auto irr = sl2_char(k);
        for (const auto& [e, c] : irr.terms()) ch.add_term(e, c * m);
    }
    return ch;
}

SL2Decomposition clebsch_gordan(int a, int b)
{
    if (a < 0 || b < 0) throw std::invalid_argument("clebsch_gordan needs a, b >= 0");
    SL2Decomposition d;
    for (int k = std::abs(a - b); k <= a + b; k += 2) d.add(k);
    return d;
}

LModule::LModule(std::vector<int> factors) : factors_(std::move(factors))
{
    for (int r : factors_) {
        if (r < 0) throw std::invalid_argument("LModule factors must be non-negative");
    }
}

long long LModule::dimension() const
{
    long long dim = 1;
    for (int r : factors_) {
        if (__builtin_mul_overflow(dim, (long long)r + 1, &dim)) {
            throw std::overflow_error("module dimension exceeds 64 bits");
        }
    }
    return dim;
}

LModule l_module(const SkewShape& p)
{
    return LModule(r_values(p));
}

SL2Decomposition restrict_to_diagonal(const LModule& m)
{
    SL2Decomposition acc = SL2Decomposition::trivial();
    for (int r : m.factors()) {
        SL2Decomposition next;
        for (const auto& [k, mult] : acc.multiplicities()) {
            const auto product = clebsch_gordan(k, r);
            for (const auto& [j, one] : product.multiplicities()) {
                next.add(j, mult * one);
            }
        }
        acc = next;
    }
    return acc;
}

int cartan_component(int a, int b)
{
    if (a < 0 || b < 0) throw std::invalid_argument("cartan_component needs a, b >= 0");
    return a + b;
}

long long dim_mult_space(const SkewShape& p)
{
    if (!in_branching_semigroup(p)) return 0;
    return l_module(p).dimension();
}

}  // namespace sympbranch
