#include "coreparts/partition.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>

namespace coreparts {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::domain_error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::domain_error("partition parts must be nonincreasing");
    }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

std::int64_t Partition::size() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

int Partition::multiplicity(int i) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << '(' << (p.empty() ? std::string{} : p.to_string()) << ')';
}

bool BetaSet::contains(int v) const noexcept {
    // descending order
    return std::binary_search(values.begin(), values.end(), v, std::greater<>{});
}

BetaSet beta_set(const Partition& lambda) {
    return beta_set_padded(lambda, lambda.length());
}

BetaSet beta_set_padded(const Partition& lambda, int length) {
    if (length < lambda.length())
        throw std::domain_error("beta-set length shorter than the partition");
    BetaSet beta;
    beta.values.reserve(static_cast<std::size_t>(length));
    for (int j = 1; j <= length; ++j)
        beta.values.push_back(lambda.part(static_cast<std::size_t>(j - 1)) + length - j);
    return beta;
}

Partition partition_from_beta(std::span<const int> values) {
    std::vector<int> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>{});
    const int len = static_cast<int>(sorted.size());
    std::vector<int> parts;
    parts.reserve(sorted.size());
    for (int j = 0; j < len; ++j) {
        if (sorted[j] < 0 || (j > 0 && sorted[j] == sorted[j - 1]))
            throw std::domain_error("beta-set must hold distinct nonnegative integers");
        const int part = sorted[j] - (len - 1 - j);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> cols(static_cast<std::size_t>(lambda.largest()), 0);
    for (int p : lambda.parts())
        for (int j = 0; j < p; ++j) ++cols[j];
    return Partition(std::move(cols));
}

int hook_length(const Partition& lambda, int row, int col) {
    if (row < 1 || row > lambda.length() || col < 1 ||
        col > lambda.part(static_cast<std::size_t>(row - 1)))
        throw std::domain_error("cell outside the Ferrers diagram");
    const Partition conj = conjugate(lambda);
    return lambda.part(row - 1) - col + conj.part(col - 1) - row + 1;
}

std::vector<int> hook_lengths(const Partition& lambda) {
    const Partition conj = conjugate(lambda);
    std::vector<int> hooks;
    hooks.reserve(static_cast<std::size_t>(lambda.size()));
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i - 1); ++j)
            hooks.push_back(lambda.part(i - 1) - j + conj.part(j - 1) - i + 1);
    return hooks;
}

bool is_t_core(const Partition& lambda, int t) {
    if (t < 1) throw std::domain_error("t must be at least 1");
    const BetaSet beta = beta_set(lambda);
    for (int b : beta.values)
        if (b >= t && !beta.contains(b - t)) return false;
    return true;
}

Partition t_core_of(const Partition& lambda, int t, RemovalOrder order) {
    if (t < 1) throw std::domain_error("t must be at least 1");
    std::set<int> beads;
    for (int b : beta_set(lambda).values) beads.insert(b);
    for (;;) {
        // a bead b with b - t vacant is a removable rim t-hook
        std::optional<int> pick;
        if (order == RemovalOrder::LargestFirst) {
            for (auto it = beads.rbegin(); it != beads.rend(); ++it)
                if (*it >= t && !beads.contains(*it - t)) { pick = *it; break; }
        } else {
            for (int b : beads)
                if (b >= t && !beads.contains(b - t)) { pick = b; break; }
        }
        if (!pick) break;
        beads.erase(*pick);
        beads.insert(*pick - t);
    }
    const std::vector<int> values(beads.begin(), beads.end());
    return partition_from_beta(values);
}

Partition phi_j(const Partition& lambda, int j) {
    if (j < 0) throw std::domain_error("phi_j requires j >= 0");
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(lambda.length() + j));
    for (int p : lambda.parts()) parts.push_back(p + 1);
    parts.insert(parts.end(), static_cast<std::size_t>(j), 1);
    return Partition(std::move(parts));
}

Partition gen(const Partition& mu) {
    std::vector<int> parts;
    for (int p : mu.parts())
        if (p > 1) parts.push_back(p - 1);
    return Partition(std::move(parts));
}

} // namespace coreparts
