#pragma once

#include "coreparts/common.hpp"
#include "coreparts/partition.hpp"

#include <span>
#include <vector>

// Brute-force enumerators used as ground truth. Nothing in here calls the
// other modules beyond the Partition value type: hook lengths, beta-sets and
// conjugates are recomputed locally.
namespace coreparts::oracle {

/// p(n) by Euler's pentagonal-number recurrence.
BigInt partition_count(int n);

/// All partitions of n in reverse-lexicographic order. Throws
/// std::logic_error if the count disagrees with partition_count(n).
std::vector<Partition> partitions_of(int n);

/// λ′, recomputed column by column.
Partition conjugate_of(const Partition& lambda);

/// All hook lengths of λ, row by row.
std::vector<int> hooks(const Partition& lambda);
bool is_core_by_hooks(const Partition& lambda, int t);

/// t-cores of n, in the order of partitions_of.
std::vector<Partition> tcores_of(int n, int t);
/// t-cores of every n ≤ N, ordered by size and then as in partitions_of.
std::vector<Partition> tcores_up_to(int N, int t);

/// t-cores with exactly l parts, each divisible by `step`. Parts never
/// exceed l(t−1), and rows are added bottom-up so each new row's hooks are
/// final when it is placed.
std::vector<Partition> tcores_with_parts(int t, int l, int step = 1);

/// Partitions that are a-, b- and c-cores for all c in `extra`, built from
/// subsets of the gaps of the semigroup ⟨a, b⟩ that are closed under
/// subtracting a and b. Throws std::domain_error if gcd(a, b) ≠ 1.
std::vector<Partition> ab_cores_brute(int a, int b, std::span<const int> extra = {});

/// t-cores with distinct parts and largest part x (x = 0 gives ∅).
std::vector<Partition> distinct_with_largest(int t, int x);

/// Number of sequences μ₁ ≥ … ≥ μ_n ≥ 0 with μ_j ≤ λ_j.
BigInt bounded_sequences(std::span<const int> lambda);

enum class Stat { Count, Parts, Alpha, Gamma, Size, MaxParts, MaxSize };

/// Folds a statistic over a list. Alpha and Gamma use residue counts of the
/// beta-set modulo t (each λ must be a t-core); other stats ignore t.
BigInt sum_statistic(std::span<const Partition> list, Stat stat, int t = 0);

} // namespace coreparts::oracle
