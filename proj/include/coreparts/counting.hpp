#pragma once

#include "coreparts/common.hpp"
#include "coreparts/partition.hpp"

#include <cstdint>
#include <shared_mutex>
#include <span>
#include <vector>

namespace coreparts {

/// Memoized exact binomial coefficients. C(n, k) = 0 whenever k < 0, k > n
/// or n < 0. Rows up to `cap` are cached (grow-only); larger n falls back to
/// the multiplicative formula. Safe to share between threads.
class BinomialTable {
public:
    explicit BinomialTable(int cap = 512);

    BigInt operator()(std::int64_t n, std::int64_t k) const;

    /// The process-wide table used by the free function binomial().
    static const BinomialTable& shared();

private:
    void grow_to(std::int64_t n) const;

    int cap_;
    mutable std::shared_mutex mutex_;
    mutable std::vector<std::vector<BigInt>> rows_;
};

BigInt binomial(std::int64_t n, std::int64_t k);

/// C(a+b, a) / (a+b).
BigInt rational_catalan(int a, int b);

/// t-cores with exactly l parts: C(l+t−2, l). For t = 1 only l = 0 counts.
BigInt count_parts_exact(int t, int l);
/// t-cores with at most l parts: C(l+t−1, l).
BigInt count_parts_at_most(int t, int l);
/// t-cores with l parts greater than 1 and exactly j parts equal to 1.
BigInt count_parts_split(int t, int l, int j);
/// t-cores with l parts whose smallest part is i: C(l+t−i−2, l−1).
BigInt count_smallest_part(int t, int l, int i);

/// t-cores with largest part x: C(x+t−2, x).
BigInt count_largest_part(int t, int x);
/// t-cores with largest part x and second largest part y (y = 0 means a
/// single part). Zero when x − y > t − 1 or x < y.
BigInt count_largest_two(int t, int x, int y);
/// t-cores whose largest part x occurs exactly i times: C(x+t−2−i, t−1−i).
BigInt count_largest_multiplicity(int t, int x, int i);

/// Inclusion–exclusion count of t-cores with l parts whose largest hook
/// λ₁ + l − 1 is at most h.
BigInt count_parts_and_hook_bound(int t, int l, int h);
/// t-cores with l parts, none exceeding x.
BigInt count_parts_and_bound(int t, int l, int x);

/// The tree isomorphism from t-cores onto (dt−k)-cores whose parts are all
/// divisible by d. Preserves the number of parts.
/// Throws PreconditionError if λ is not a t-core, std::domain_error unless
/// t ≥ 1, d ≥ 1 and 0 ≤ k < d.
Partition psi_map(const Partition& lambda, int t, int d, int k);

/// (dt−k)-cores with l parts, each divisible by d: C(l+t−2, l).
BigInt count_divisible_parts(int t, int d, int k, int l);

/// Exact determinant by fraction-free elimination. Throws
/// std::domain_error if the matrix is not square.
BigInt determinant(std::vector<std::vector<BigInt>> m);

/// Number of sequences μ₁ ≥ … ≥ μ_n ≥ 0 with μ_j ≤ λ_j, as
/// det[C(λ_j + 1, j − i + 1)]. Throws std::domain_error unless λ is
/// nonincreasing and nonnegative.
BigInt kreweras_count(std::span<const int> lambda);

} // namespace coreparts
