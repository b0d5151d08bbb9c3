#pragma once

#include "coreparts/common.hpp"
#include "coreparts/partition.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace coreparts {

/// Image of a t-core under Φ₁: n_j counts the beta-set entries that are
/// ≡ j (mod t). Always n₀ = 0. Indexing with operator[] is t-periodic.
struct ResidueCounts {
    int modulus = 0;
    std::vector<int> counts;

    ResidueCounts() = default;
    /// Throws std::domain_error if modulus < 1, the length is wrong, or an
    /// entry is negative. n₀ ≠ 0 is allowed here and rejected by the maps
    /// that need it.
    ResidueCounts(int modulus, std::vector<int> counts);
    static ResidueCounts zero(int modulus);

    int operator[](std::int64_t j) const noexcept {
        return counts[static_cast<std::size_t>(floor_mod(j, modulus))];
    }
    /// Σ n_j = #(λ).
    int total() const noexcept;
    /// P(λ): the number of zero coordinates.
    int zero_count() const noexcept;

    auto operator<=>(const ResidueCounts&) const = default;
    bool operator==(const ResidueCounts&) const = default;
};

/// Image under Φ₂: integers c₀..c_{t−1} with Σ c_j = 0.
struct ChargeCoordinates {
    int modulus = 0;
    std::vector<std::int64_t> charges;

    ChargeCoordinates() = default;
    /// Throws std::domain_error unless the charges sum to zero.
    ChargeCoordinates(int modulus, std::vector<std::int64_t> charges);

    auto operator<=>(const ChargeCoordinates&) const = default;
    bool operator==(const ChargeCoordinates&) const = default;
};

/// Φ₁. Throws PreconditionError if λ is not a t-core.
ResidueCounts phi1(const Partition& lambda, int t);

/// Φ₁⁻¹: β = {(i−1)t + j : 1 ≤ i ≤ n_j}. Throws std::domain_error if n₀ ≠ 0.
Partition phi1_inv(const ResidueCounts& n);

/// σ from residue counts: Σ (j n_j + t·C(n_j, 2)) − C(Σ n_j, 2).
std::int64_t size_from_counts(const ResidueCounts& n);

/// ψ_j = (φ̃₁∘φ̃₀)^j ∘ φ̃₀ on coordinates: rotate right by j+1 and add one to
/// the j entries that wrapped past index 0. Φ₁(φ_j(λ)) = ψ_j(Φ₁(λ)) whenever
/// φ_j(λ) is a t-core.
ResidueCounts psi_coordinates(const ResidueCounts& n, int j);

/// Children of λ in the t-core tree: φ_j(λ) for each 0 ≤ j ≤ t−1 with
/// n_{t−1−j} = 0, ascending in j. The self-loop φ₀(∅) = ∅ is excluded.
std::vector<Partition> children(const Partition& lambda, int t);

/// Coordinate-level children: (j, ψ_j(n)) pairs in the same order as
/// children().
std::vector<std::pair<int, ResidueCounts>> children_counts(const ResidueCounts& n);

/// Breadth-first walk of the t-core tree from ∅, visiting every t-core of
/// size ≤ max_size exactly once. The callback receives the residue counts
/// and the size (accumulated along tree edges as σ + #(λ) + j).
void for_each_tcore_up_to(int t, std::int64_t max_size,
                          const std::function<void(const ResidueCounts&, std::int64_t)>& visit);

/// Φ(λ) = (λ^(0), …, λ^(t−1); core). Runner j carries the beta-set entries
/// ≡ j (mod t) after padding #(λ) up to a multiple of t.
struct QuotientDecomposition {
    std::vector<Partition> quotient;
    Partition core;
};

QuotientDecomposition quotient_decompose(const Partition& lambda, int t);

/// Inverse of quotient_decompose. Throws PreconditionError if `core` is not
/// a t-core, std::domain_error if quotient.size() ≠ t.
Partition quotient_compose(std::span<const Partition> quotient, const Partition& core, int t);

/// Residue counts → charge coordinates:
///   c* = 1 + ⌊(Σn − 1)/t⌋,  m = (Σn − 1) mod t,
///   c_j = c* − n_{m−j} (j ≤ m),  c* − 1 − n_{m−j+t} (j > m).
ChargeCoordinates nvec_to_charges(const ResidueCounts& n);

/// Inverse of nvec_to_charges (c* = max c_j, m = last index attaining it).
ResidueCounts charges_to_nvec(const ChargeCoordinates& c);

/// σ = Σ (j c_j + (t/2) c_j²), evaluated as (t Σ c_j² + 2 Σ j c_j) / 2.
std::int64_t size_from_charges(const ChargeCoordinates& c);

/// c_i + c_{t−1−i} = 0 for all i. Equivalent to λ = λ′.
bool is_self_conjugate(const ChargeCoordinates& c);

} // namespace coreparts
