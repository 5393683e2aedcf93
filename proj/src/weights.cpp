#include "sympbranch/weights.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace sympbranch {

namespace {

[[noreturn]] void throw_not_dominant(std::span<const int> seq)
{
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] < 0) {
            throw std::invalid_argument("weight entry " + std::to_string(i + 1) + " is negative: " +
                                        std::to_string(seq[i]));
        }
        if (i + 1 < seq.size() && seq[i] < seq[i + 1]) {
            throw std::invalid_argument("weight not weakly decreasing: entry " + std::to_string(i + 1) +
                                        " = " + std::to_string(seq[i]) + " < entry " +
                                        std::to_string(i + 2) + " = " + std::to_string(seq[i + 1]));
        }
    }
    throw std::invalid_argument("weight not dominant");
}

int trimmed_int(std::string_view tok, std::string_view whole)
{
    const auto first = tok.find_first_not_of(" \t");
    const auto last = tok.find_last_not_of(" \t");
    if (first == std::string_view::npos) {
        throw std::invalid_argument("empty entry in weight \"" + std::string(whole) + "\"");
    }
    tok = tok.substr(first, last - first + 1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw std::invalid_argument("bad integer \"" + std::string(tok) + "\" in weight \"" +
                                    std::string(whole) + "\"");
    }
    return value;
}

}  // namespace

DominantWeight::DominantWeight(std::vector<int> entries) : entries_(std::move(entries))
{
    if (!is_dominant(entries_)) throw_not_dominant(entries_);
}

bool DominantWeight::is_dominant(std::span<const int> seq)
{
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] < 0) return false;
        if (i + 1 < seq.size() && seq[i] < seq[i + 1]) return false;
    }
    return true;
}

DominantWeight DominantWeight::plus_extend() const
{
    std::vector<int> out = entries_;
    out.push_back(0);
    return DominantWeight(std::move(out));
}

long long DominantWeight::sum() const
{
    return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

bool DominantWeight::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

DominantWeight DominantWeight::zero(std::size_t n)
{
    return DominantWeight(std::vector<int>(n, 0));
}

std::string DominantWeight::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(entries_[i]);
    }
    return out;
}

DominantWeight DominantWeight::parse(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string_view::npos) return DominantWeight{};
    const auto last = text.find_last_not_of(" \t");
    text = text.substr(first, last - first + 1);

    std::vector<int> entries;
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        const auto tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                          : comma - pos);
        entries.push_back(trimmed_int(tok, text));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return DominantWeight(std::move(entries));
}

DominantWeight operator+(const DominantWeight& a, const DominantWeight& b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("cannot add weights of lengths " + std::to_string(a.size()) +
                                    " and " + std::to_string(b.size()));
    }
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return DominantWeight(std::move(out));
}

bool interlaces(const DominantWeight& mu, const DominantWeight& lambda)
{
    if (mu.size() + 1 != lambda.size()) {
        throw std::invalid_argument("interlacing needs length(mu) = length(lambda) - 1, got " +
                                    std::to_string(mu.size()) + " and " + std::to_string(lambda.size()));
    }
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (lambda[i] < mu[i] || mu[i] < lambda[i + 1]) return false;
    }
    return true;
}

bool double_interlaces(const DominantWeight& mu, const DominantWeight& lambda)
{
    if (mu.size() + 1 == lambda.size()) return double_interlaces(mu, lambda.plus_extend());
    if (mu.size() + 2 != lambda.size()) {
        throw std::invalid_argument("double interlacing needs length(lambda) = length(mu) + 2 (or + 1), got " +
                                    std::to_string(mu.size()) + " and " + std::to_string(lambda.size()));
    }
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (lambda[i] < mu[i] || mu[i] < lambda[i + 2]) return false;
    }
    return true;
}

std::vector<OrderType> OrderType::all(std::size_t length)
{
    std::vector<OrderType> out;
    out.reserve(std::size_t(1) << length);
    for (std::size_t mask = 0; mask < (std::size_t(1) << length); ++mask) {
        std::vector<Rel> letters(length);
        for (std::size_t i = 0; i < length; ++i) {
            // bit order chosen so the list comes out lexicographically
            // increasing with GE < LE
            letters[i] = (mask >> (length - 1 - i)) & 1 ? Rel::LE : Rel::GE;
        }
        out.emplace_back(std::move(letters));
    }
    return out;
}

std::string OrderType::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i > 0) out += ',';
        out += letters_[i] == Rel::GE ? ">=" : "<=";
    }
    out += ')';
    return out;
}

SkewShape::SkewShape(DominantWeight mu, DominantWeight lambda)
    : mu_(std::move(mu)), lambda_(std::move(lambda))
{
    if (lambda_.size() == 0 || mu_.size() + 1 != lambda_.size()) {
        throw std::invalid_argument("skew shape needs length(mu) = length(lambda) - 1 >= 0, got " +
                                    std::to_string(mu_.size()) + " and " + std::to_string(lambda_.size()));
    }
}

SkewShape SkewShape::zero(std::size_t n)
{
    if (n == 0) throw std::invalid_argument("skew shape rank must be positive");
    return SkewShape(DominantWeight::zero(n - 1), DominantWeight::zero(n));
}

std::string SkewShape::to_string() const
{
    return lambda_.to_string() + "/" + mu_.to_string();
}

SkewShape SkewShape::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        throw std::invalid_argument("skew shape \"" + std::string(text) + "\" missing '/', expected LAMBDA/MU");
    }
    return SkewShape(DominantWeight::parse(text.substr(slash + 1)),
                     DominantWeight::parse(text.substr(0, slash)));
}

bool in_branching_semigroup(const SkewShape& p)
{
    return double_interlaces(p.mu(), p.lambda().plus_extend());
}

bool has_order_type(const SkewShape& p, const OrderType& sigma)
{
    if (sigma.size() + 1 != p.rank()) {
        throw std::invalid_argument("order type length " + std::to_string(sigma.size()) +
                                    " does not match shape rank " + std::to_string(p.rank()));
    }
    for (std::size_t i = 0; i + 1 < p.rank(); ++i) {
        const int m = p.mu()[i];
        const int l = p.lambda()[i + 1];
        if (sigma[i] == Rel::GE ? m < l : m > l) return false;
    }
    return true;
}

std::vector<OrderType> order_types_of(const SkewShape& p)
{
    if (!in_branching_semigroup(p)) {
        throw std::invalid_argument("shape " + p.to_string() + " is not in the branching semigroup");
    }
    std::vector<OrderType> out;
    for (const auto& sigma : OrderType::all(p.rank() - 1)) {
        if (has_order_type(p, sigma)) out.push_back(sigma);
    }
    return out;  // OrderType::all is lexicographically increasing
}

SkewShape add_shapes(const SkewShape& p, const SkewShape& q)
{
    if (p.rank() != q.rank()) {
        throw std::invalid_argument("cannot add shapes of ranks " + std::to_string(p.rank()) + " and " +
                                    std::to_string(q.rank()));
    }
    return SkewShape(p.mu() + q.mu(), p.lambda() + q.lambda());
}

std::vector<DominantWeight> enumerate_dominant(std::size_t length, int max_entry)
{
    std::vector<DominantWeight> out;
    std::vector<int> cur(length, 0);
    // descend from the lexicographically largest sequence
    auto rec = [&](auto&& self, std::size_t i, int bound) -> void {
        if (i == length) {
            out.emplace_back(cur);
            return;
        }
        for (int v = bound; v >= 0; --v) {
            cur[i] = v;
            self(self, i + 1, v);
        }
    };
    if (max_entry >= 0) rec(rec, 0, max_entry);
    return out;
}

namespace {

// Shared window enumeration: all dominant mu of length(lambda)-1 with
// lo_i <= mu_i <= lambda_i, lexicographically decreasing.
std::vector<DominantWeight> enumerate_windows(const DominantWeight& lambda,
                                              const std::vector<int>& lo)
{
    const std::size_t m = lo.size();
    std::vector<DominantWeight> out;
    std::vector<int> cur(m, 0);
    auto rec = [&](auto&& self, std::size_t i, int upper) -> void {
        if (i == m) {
            out.emplace_back(cur);
            return;
        }
        const int hi = std::min(lambda[i], upper);
        for (int v = hi; v >= lo[i]; --v) {
            cur[i] = v;
            self(self, i + 1, v);
        }
    };
    if (m == 0) return {DominantWeight{}};
    rec(rec, 0, lambda[0]);
    return out;
}

}  // namespace

std::vector<DominantWeight> enumerate_interlacing(const DominantWeight& lambda)
{
    if (lambda.size() == 0) return {};
    std::vector<int> lo(lambda.size() - 1);
    for (std::size_t i = 0; i + 1 < lambda.size(); ++i) lo[i] = lambda[i + 1];
    return enumerate_windows(lambda, lo);
}

std::vector<DominantWeight> enumerate_double_interlacing(const DominantWeight& lambda)
{
    if (lambda.size() == 0) return {};
    const auto ext = lambda.plus_extend();
    std::vector<int> lo(lambda.size() - 1);
    for (std::size_t i = 0; i + 1 < lambda.size(); ++i) lo[i] = ext[i + 2];
    return enumerate_windows(lambda, lo);
}

}  // namespace sympbranch
