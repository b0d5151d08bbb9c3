#pragma once

#include "coreparts/bijections.hpp"
#include "coreparts/common.hpp"
#include "coreparts/partition.hpp"

#include <vector>

namespace coreparts {

/// λ₁ > λ₂ > … > λ_l.
bool has_distinct_parts(const Partition& lambda);

/// n_j·n_{j+1} = 0 for all j, where n = Φ₁(λ). Throws PreconditionError if
/// λ is not a t-core.
bool distinct_iff_counts(const Partition& lambda, int t);

/// 1 ≤ n₁ ≤ n_{t−1} + 1 and n_j ≤ max(n_{j−1}, n_{j−2}) for 2 ≤ j ≤ t−1.
/// Holds exactly when the conjugate of the core has distinct parts.
/// Throws PreconditionError for the empty core.
bool conjugate_distinct_condition(const ResidueCounts& n);

/// |𝒟_{s,s+1}| = Σ_i C(s−i, i) = F_{s+1}, with F₁ = F₂ = 1.
BigInt count_distinct_consecutive(int s);

/// (s, s+1)-cores with distinct parts: residue counts at modulus s+1 taking
/// values in {0, 1} on 1..s−1 with no two adjacent ones, in bitmask order.
std::vector<Partition> enumerate_distinct_consecutive(int s);

/// |𝒟_{2s+1,2s+3}| = 4^s.
BigInt count_distinct_odd_pair(int s);

/// t-cores with exactly l distinct parts: Σ_{i≥1} C(t−i, i) C(l−1, i−1).
BigInt count_distinct_exact_parts(int t, int l);

/// t-cores with distinct parts and largest part x. Uses the two-term
/// recurrence where it is known to hold (2 ≤ x ≤ t, or x ≤ t+1 for odd t)
/// and brute-force enumeration elsewhere.
BigInt count_distinct_largest(int t, int x);

/// Rows t = 2..t_max, columns x = 0..x_max, filled by enumeration.
/// `jobs` > 1 fills rows on worker threads; the result does not change.
std::vector<std::vector<BigInt>> distinct_table(int t_max, int x_max, int jobs = 1);

/// Checks that every (s, s+1)-core with distinct parts is also a t-core for
/// t > s+1. Throws std::logic_error on a counterexample and
/// std::domain_error if t ≤ s+1.
bool distinct_triple_stability(int s, int t);

} // namespace coreparts
