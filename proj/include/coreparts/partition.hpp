#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace coreparts {

/// An integer partition: a nonincreasing sequence of positive parts.
/// The empty sequence is the empty partition.
class Partition {
public:
    Partition() = default;
    /// Throws std::domain_error unless `parts` is nonincreasing and positive.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& vec() const noexcept { return parts_; }

    bool empty() const noexcept { return parts_.empty(); }
    /// #(λ)
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    /// σ(λ)
    std::int64_t size() const noexcept;
    /// λ_1, or 0 for the empty partition.
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    int smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }
    /// 0-based access to λ_{i+1}; returns 0 past the end.
    int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
    /// #_i(λ): number of parts equal to i.
    int multiplicity(int i) const noexcept;

    /// "4,2,1", or "-" for the empty partition.
    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// First-column hook lengths, stored in descending order.
struct BetaSet {
    std::vector<int> values;

    bool contains(int v) const noexcept;
    std::size_t size() const noexcept { return values.size(); }
    bool operator==(const BetaSet&) const = default;
};

/// β(λ) = {λ_j + #(λ) − j}.
BetaSet beta_set(const Partition& lambda);

/// β-set of λ padded with zero parts to `length` entries (length ≥ #(λ)).
BetaSet beta_set_padded(const Partition& lambda, int length);

/// Inverse of beta_set_padded: any set of distinct nonnegative integers
/// (in any order) determines a partition; leading 0,1,...,k−1 entries give
/// zero parts and are dropped.
Partition partition_from_beta(std::span<const int> values);

/// Hook length of cell (row, col), both 1-based. Throws std::domain_error
/// if the cell is not in the diagram.
int hook_length(const Partition& lambda, int row, int col);

/// All hook lengths, row by row.
std::vector<int> hook_lengths(const Partition& lambda);

/// λ′, the reflection along the main diagonal.
Partition conjugate(const Partition& lambda);

/// True iff λ has no hook length divisible by t (beta-set criterion:
/// every b ∈ β(λ) with b ≥ t has b − t ∈ β(λ)). t must be ≥ 1.
bool is_t_core(const Partition& lambda, int t);

enum class RemovalOrder { LargestFirst, SmallestFirst };

/// The t-core of λ, obtained by removing rim t-hooks on the beta-set until
/// none remain. The result does not depend on `order`.
Partition t_core_of(const Partition& lambda, int t,
                    RemovalOrder order = RemovalOrder::LargestFirst);

/// φ_j(λ) = (1^j, 2^{#_1(λ)}, 3^{#_2(λ)}, ...): every part grows by one and
/// j new parts equal to 1 are appended.
Partition phi_j(const Partition& lambda, int j);

/// gen(μ): drop the parts equal to 1 and decrement the rest.
Partition gen(const Partition& mu);

} // namespace coreparts
