#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sympbranch {

// Weakly decreasing sequence of non-negative integers.  The length is
// structural: (2,1,0) and (2,1) are different weights, and the empty
// weight (length 0) is a valid value.
class DominantWeight {
public:
    DominantWeight() = default;
    explicit DominantWeight(std::vector<int> entries);

    static bool is_dominant(std::span<const int> seq);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<int>& entries() const { return entries_; }

    // Appends one zero; length grows by one.
    DominantWeight plus_extend() const;

    long long sum() const;

    bool is_zero() const;
    static DominantWeight zero(std::size_t n);

    // Comma-separated decimal entries, e.g. "2,1,0".  The empty string
    // parses to (and prints as) the empty weight.
    std::string to_string() const;
    static DominantWeight parse(std::string_view text);

    friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
    friend std::strong_ordering operator<=>(const DominantWeight& a, const DominantWeight& b)
    {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<int> entries_;
};

// Entry-wise sum; both operands must have the same length.
DominantWeight operator+(const DominantWeight& a, const DominantWeight& b);

// mu interlaces lambda: lambda_i >= mu_i >= lambda_{i+1}, with
// length(mu) = length(lambda) - 1.
bool interlaces(const DominantWeight& mu, const DominantWeight& lambda);

// mu double interlaces lambda: lambda_i >= mu_i >= lambda_{i+2}.
// Accepts length(lambda) = length(mu) + 2, or length(mu) + 1 in which
// case the test runs against lambda with a zero appended.
bool double_interlaces(const DominantWeight& mu, const DominantWeight& lambda);

enum class Rel : unsigned char { GE, LE };

// Word of length n-1 over {GE, LE}; slot i records how the i-th entry
// of mu may compare with the (i+1)-th entry of lambda.
class OrderType {
public:
    OrderType() = default;
    explicit OrderType(std::vector<Rel> letters) : letters_(std::move(letters)) {}

    static std::vector<OrderType> all(std::size_t length);

    std::size_t size() const { return letters_.size(); }
    Rel operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Rel>& letters() const { return letters_; }

    std::string to_string() const;  // e.g. "(>=,<=)"

    friend bool operator==(const OrderType&, const OrderType&) = default;
    // GE sorts before LE, so lexicographic order on words is the order
    // callers use when they need one canonical representative.
    friend std::strong_ordering operator<=>(const OrderType&, const OrderType&) = default;

private:
    std::vector<Rel> letters_;
};

// The grading pair p = lambda/mu with mu of length n-1 and lambda of
// length n.  Membership in the branching semigroup is a predicate, not
// an invariant of the type.
class SkewShape {
public:
    SkewShape(DominantWeight mu, DominantWeight lambda);

    static SkewShape zero(std::size_t n);

    const DominantWeight& mu() const { return mu_; }
    const DominantWeight& lambda() const { return lambda_; }
    std::size_t rank() const { return lambda_.size(); }  // n

    bool is_zero() const { return mu_.is_zero() && lambda_.is_zero(); }

    std::string to_string() const;  // "LAMBDA/MU", e.g. "2,1,0/2,0"
    static SkewShape parse(std::string_view text);

    friend bool operator==(const SkewShape&, const SkewShape&) = default;
    friend std::strong_ordering operator<=>(const SkewShape&, const SkewShape&) = default;

private:
    DominantWeight mu_;
    DominantWeight lambda_;
};

// Nonzero multiplicity test: mu double interlaces lambda^+.
bool in_branching_semigroup(const SkewShape& p);

bool has_order_type(const SkewShape& p, const OrderType& sigma);

// All order types sigma with p in Lambda_B(sigma), sorted with GE
// before LE.  There are 2^k of them, k = #{i : mu_i = lambda_{i+1}}.
// Throws if p is not in the branching semigroup.
std::vector<OrderType> order_types_of(const SkewShape& p);

// Entry-wise sum of the mu's and lambda's; ranks must agree.
SkewShape add_shapes(const SkewShape& p, const SkewShape& q);
inline SkewShape operator+(const SkewShape& p, const SkewShape& q) { return add_shapes(p, q); }

// Enumeration helpers.  Both lists are lexicographically decreasing.
std::vector<DominantWeight> enumerate_dominant(std::size_t length, int max_entry);
// All mu of length n-1 with mu < lambda (classical GL branching).
std::vector<DominantWeight> enumerate_interlacing(const DominantWeight& lambda);
// All mu of length n-1 with mu << lambda (symplectic branching support).
std::vector<DominantWeight> enumerate_double_interlacing(const DominantWeight& lambda);

}  // namespace sympbranch
