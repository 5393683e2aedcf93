#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace sympbranch {

using Int = boost::multiprecision::cpp_int;

// Laurent polynomial in one variable q with exact integer coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly one();
    static LaurentPoly monomial(int exponent, Int coefficient = 1);

    bool is_zero() const { return terms_.empty(); }
    Int coefficient(int exponent) const;
    const std::map<int, Int>& terms() const { return terms_; }

    void add_term(int exponent, const Int& coefficient);

    Int value_at_one() const;  // coefficient sum

    std::string to_string(const std::string& var = "q") const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    std::map<int, Int> terms_;  // exponent -> nonzero coefficient
};

// Laurent polynomial in nvars variables, exact integer coefficients.
// Terms map exponent vectors (length nvars, entries may be negative) to
// nonzero coefficients; the map's lexicographic key order doubles as
// the monomial order used by exact division.
class MultiLaurentPoly {
public:
    explicit MultiLaurentPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static MultiLaurentPoly constant(std::size_t nvars, Int value);
    static MultiLaurentPoly one(std::size_t nvars) { return constant(nvars, 1); }
    static MultiLaurentPoly monomial(std::size_t nvars, std::vector<int> exponents, Int coefficient = 1);
    static MultiLaurentPoly from_univariate(const LaurentPoly& p, std::size_t nvars, std::size_t var);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<std::vector<int>, Int>& terms() const { return terms_; }
    Int coefficient(const std::vector<int>& exponents) const;

    void add_term(const std::vector<int>& exponents, const Int& coefficient);

    Int value_at_one() const;  // coefficient sum

    // Re-indexes variables: old variable i becomes new_index[i] among
    // new_nvars variables (injective).  Fresh variables never occur.
    MultiLaurentPoly inflate(std::size_t new_nvars, const std::vector<std::size_t>& new_index) const;

    // x_var := x_target^power; the result has one variable fewer and
    // var's slot removed.
    MultiLaurentPoly substitute_power(std::size_t var, std::size_t target, int power) const;

    // x_var := 1, removing var's slot.
    MultiLaurentPoly set_var_one(std::size_t var) const;

    // x_var := x_var^{-1}.
    MultiLaurentPoly invert_var(std::size_t var) const;

    // Variable i of the result is variable perm[i] of *this.
    MultiLaurentPoly permute_vars(const std::vector<std::size_t>& perm) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

    MultiLaurentPoly& operator+=(const MultiLaurentPoly& other);
    MultiLaurentPoly& operator-=(const MultiLaurentPoly& other);
    friend MultiLaurentPoly operator+(MultiLaurentPoly a, const MultiLaurentPoly& b) { return a += b; }
    friend MultiLaurentPoly operator-(MultiLaurentPoly a, const MultiLaurentPoly& b) { return a -= b; }
    friend MultiLaurentPoly operator*(const MultiLaurentPoly& a, const MultiLaurentPoly& b);
    friend bool operator==(const MultiLaurentPoly&, const MultiLaurentPoly&) = default;

private:
    std::size_t nvars_ = 0;
    std::map<std::vector<int>, Int> terms_;
};

// Exact quotient a / b; throws std::logic_error if b is zero or the
// division leaves a remainder.
MultiLaurentPoly divide_exact(const MultiLaurentPoly& a, const MultiLaurentPoly& b);

}  // namespace sympbranch
