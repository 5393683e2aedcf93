#include "sympbranch/laurent.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace sympbranch {

LaurentPoly LaurentPoly::one()
{
    return monomial(0);
}

LaurentPoly LaurentPoly::monomial(int exponent, Int coefficient)
{
    LaurentPoly p;
    p.add_term(exponent, coefficient);
    return p;
}

Int LaurentPoly::coefficient(int exponent) const
{
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const Int& coefficient)
{
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Int LaurentPoly::value_at_one() const
{
    Int sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
}

std::string LaurentPoly::to_string(const std::string& var) const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        const Int mag = abs(c);
        const bool unit = mag == 1;
        if (!unit || e == 0) out += mag.str();
        if (e != 0) {
            if (!unit) out += "*";
            out += var;
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other)
{
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term(ea + eb, ca * cb);
        }
    }
    return out;
}

MultiLaurentPoly MultiLaurentPoly::constant(std::size_t nvars, Int value)
{
    MultiLaurentPoly p(nvars);
    p.add_term(std::vector<int>(nvars, 0), value);
    return p;
}

MultiLaurentPoly MultiLaurentPoly::monomial(std::size_t nvars, std::vector<int> exponents, Int coefficient)
{
    if (exponents.size() != nvars) throw std::logic_error("monomial exponent count mismatch");
    MultiLaurentPoly p(nvars);
    p.add_term(exponents, coefficient);
    return p;
}

MultiLaurentPoly MultiLaurentPoly::from_univariate(const LaurentPoly& p, std::size_t nvars, std::size_t var)
{
    MultiLaurentPoly out(nvars);
    std::vector<int> exps(nvars, 0);
    for (const auto& [e, c] : p.terms()) {
        exps[var] = e;
        out.add_term(exps, c);
    }
    return out;
}

Int MultiLaurentPoly::coefficient(const std::vector<int>& exponents) const
{
    const auto it = terms_.find(exponents);
    return it == terms_.end() ? Int(0) : it->second;
}

void MultiLaurentPoly::add_term(const std::vector<int>& exponents, const Int& coefficient)
{
    if (exponents.size() != nvars_) throw std::logic_error("term exponent count mismatch");
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.emplace(exponents, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Int MultiLaurentPoly::value_at_one() const
{
    Int sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
}

MultiLaurentPoly MultiLaurentPoly::inflate(std::size_t new_nvars,
                                           const std::vector<std::size_t>& new_index) const
{
    if (new_index.size() != nvars_) throw std::logic_error("inflate index count mismatch");
    MultiLaurentPoly out(new_nvars);
    for (const auto& [e, c] : terms_) {
        std::vector<int> exps(new_nvars, 0);
        for (std::size_t i = 0; i < nvars_; ++i) exps[new_index[i]] = e[i];
        out.add_term(exps, c);
    }
    return out;
}

MultiLaurentPoly MultiLaurentPoly::substitute_power(std::size_t var, std::size_t target, int power) const
{
    if (var >= nvars_ || target >= nvars_ || target == var) {
        throw std::logic_error("substitute_power bad variable indices");
    }
    MultiLaurentPoly out(nvars_ - 1);
    for (const auto& [e, c] : terms_) {
        std::vector<int> exps;
        exps.reserve(nvars_ - 1);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (i == var) continue;
            int v = e[i];
            if (i == target) v += power * e[var];
            exps.push_back(v);
        }
        out.add_term(exps, c);
    }
    return out;
}

MultiLaurentPoly MultiLaurentPoly::set_var_one(std::size_t var) const
{
    if (var >= nvars_) throw std::logic_error("set_var_one bad variable index");
    MultiLaurentPoly out(nvars_ - 1);
    for (const auto& [e, c] : terms_) {
        std::vector<int> exps;
        exps.reserve(nvars_ - 1);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (i != var) exps.push_back(e[i]);
        }
        out.add_term(exps, c);
    }
    return out;
}

MultiLaurentPoly MultiLaurentPoly::invert_var(std::size_t var) const
{
    MultiLaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> exps = e;
        exps[var] = -exps[var];
        out.add_term(exps, c);
    }
    return out;
}

MultiLaurentPoly MultiLaurentPoly::permute_vars(const std::vector<std::size_t>& perm) const
{
    if (perm.size() != nvars_) throw std::logic_error("permute_vars size mismatch");
    MultiLaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> exps(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) exps[i] = e[perm[i]];
        out.add_term(exps, c);
    }
    return out;
}

std::string MultiLaurentPoly::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty()) return "0";
    auto var_name = [&](std::size_t i) {
        return i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    };
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        const Int mag = abs(c);
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_name(i);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + "*";
            out += mono;
        }
    }
    return out;
}

MultiLaurentPoly& MultiLaurentPoly::operator+=(const MultiLaurentPoly& other)
{
    if (other.nvars_ != nvars_) throw std::logic_error("polynomial variable count mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

MultiLaurentPoly& MultiLaurentPoly::operator-=(const MultiLaurentPoly& other)
{
    if (other.nvars_ != nvars_) throw std::logic_error("polynomial variable count mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

MultiLaurentPoly operator*(const MultiLaurentPoly& a, const MultiLaurentPoly& b)
{
    if (a.nvars_ != b.nvars_) throw std::logic_error("polynomial variable count mismatch");
    MultiLaurentPoly out(a.nvars_);
    std::vector<int> exps(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = ea[i] + eb[i];
            out.add_term(exps, ca * cb);
        }
    }
    return out;
}

namespace {

std::vector<int> min_exponents(const MultiLaurentPoly& p)
{
    std::vector<int> mins(p.nvars(), 0);
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = 0; i < mins.size(); ++i) {
            mins[i] = first ? e[i] : std::min(mins[i], e[i]);
        }
        first = false;
    }
    return mins;
}

MultiLaurentPoly shift(const MultiLaurentPoly& p, const std::vector<int>& by)
{
    MultiLaurentPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> exps(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) exps[i] = e[i] + by[i];
        out.add_term(exps, c);
    }
    return out;
}

}  // namespace

MultiLaurentPoly divide_exact(const MultiLaurentPoly& a, const MultiLaurentPoly& b)
{
    if (a.nvars() != b.nvars()) throw std::logic_error("divide_exact variable count mismatch");
    if (b.is_zero()) throw std::logic_error("divide_exact by zero");
    if (a.is_zero()) return MultiLaurentPoly(a.nvars());

    // Clear negative exponents so lex-leading-term division applies.
    // When b divides a, the shifted quotient is a true polynomial and
    // the leading monomial of the remainder strictly decreases each
    // step, so the loop runs exactly term_count(quotient) times.
    const auto amin = min_exponents(a);
    const auto bmin = min_exponents(b);
    std::vector<int> up_a(amin.size()), up_b(bmin.size()), back(amin.size());
    for (std::size_t i = 0; i < amin.size(); ++i) {
        up_a[i] = -amin[i];
        up_b[i] = -bmin[i];
        back[i] = amin[i] - bmin[i];
    }
    const MultiLaurentPoly bb = shift(b, up_b);
    MultiLaurentPoly rem = shift(a, up_a);

    const auto& blead = *bb.terms().rbegin();
    MultiLaurentPoly quot(a.nvars());
    // Guards against runaway division if the inputs are not an exact
    // multiple in a way the per-step checks miss.
    std::size_t steps_left = 1000 * (a.term_count() + b.term_count()) + 1000000;

    while (!rem.is_zero()) {
        if (steps_left-- == 0) throw std::logic_error("divide_exact did not terminate");
        const auto& rlead = *rem.terms().rbegin();
        std::vector<int> mono(rlead.first.size());
        for (std::size_t i = 0; i < mono.size(); ++i) {
            mono[i] = rlead.first[i] - blead.first[i];
            if (mono[i] < 0) throw std::logic_error("divide_exact: nonzero remainder (monomial)");
        }
        Int q = rlead.second / blead.second;
        if (q * blead.second != rlead.second) {
            throw std::logic_error("divide_exact: nonzero remainder (coefficient)");
        }
        const MultiLaurentPoly t = MultiLaurentPoly::monomial(a.nvars(), mono, q);
        quot += t;
        rem -= t * bb;
    }
    return shift(quot, back);
}

}  // namespace sympbranch
