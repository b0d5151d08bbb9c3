#include "coreparts/bijections.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace coreparts {

ResidueCounts::ResidueCounts(int modulus_, std::vector<int> counts_)
    : modulus(modulus_), counts(std::move(counts_)) {
    if (modulus < 1) throw std::domain_error("modulus must be at least 1");
    if (static_cast<int>(counts.size()) != modulus)
        throw std::domain_error("residue counts need exactly `modulus` entries");
    for (int c : counts)
        if (c < 0) throw std::domain_error("residue counts must be nonnegative");
}

ResidueCounts ResidueCounts::zero(int modulus) {
    return ResidueCounts(modulus, std::vector<int>(static_cast<std::size_t>(modulus), 0));
}

int ResidueCounts::total() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

int ResidueCounts::zero_count() const noexcept {
    return static_cast<int>(std::count(counts.begin(), counts.end(), 0));
}

ChargeCoordinates::ChargeCoordinates(int modulus_, std::vector<std::int64_t> charges_)
    : modulus(modulus_), charges(std::move(charges_)) {
    if (modulus < 1 || static_cast<int>(charges.size()) != modulus)
        throw std::domain_error("charge vector length must equal the modulus");
    if (std::accumulate(charges.begin(), charges.end(), std::int64_t{0}) != 0)
        throw std::domain_error("charges must sum to zero");
}

ResidueCounts phi1(const Partition& lambda, int t) {
    if (t < 1) throw std::domain_error("t must be at least 1");
    if (!is_t_core(lambda, t)) throw PreconditionError("phi1 requires a t-core");
    ResidueCounts n = ResidueCounts::zero(t);
    for (int b : beta_set(lambda).values) ++n.counts[static_cast<std::size_t>(b % t)];
    return n;
}

Partition phi1_inv(const ResidueCounts& n) {
    if (n.counts.empty() || n.counts[0] != 0)
        throw std::domain_error("phi1_inv requires n_0 = 0");
    const int t = n.modulus;
    std::vector<int> beta;
    beta.reserve(static_cast<std::size_t>(n.total()));
    for (int j = 1; j < t; ++j)
        for (int i = 1; i <= n.counts[j]; ++i) beta.push_back((i - 1) * t + j);
    return partition_from_beta(beta);
}

std::int64_t size_from_counts(const ResidueCounts& n) {
    const std::int64_t t = n.modulus;
    std::int64_t sigma = 0;
    for (std::int64_t j = 0; j < t; ++j) {
        const std::int64_t nj = n.counts[static_cast<std::size_t>(j)];
        sigma += j * nj + t * (nj * (nj - 1) / 2);
    }
    const std::int64_t len = n.total();
    return sigma - len * (len - 1) / 2;
}

ResidueCounts psi_coordinates(const ResidueCounts& n, int j) {
    const int t = n.modulus;
    if (j < 0 || j >= t) throw std::domain_error("psi_j requires 0 <= j < t");
    ResidueCounts out = ResidueCounts::zero(t);
    for (int i = 0; i < t; ++i)
        out.counts[i] = n[i - j - 1] + ((i >= 1 && i <= j) ? 1 : 0);
    return out;
}

std::vector<Partition> children(const Partition& lambda, int t) {
    const ResidueCounts n = phi1(lambda, t);
    std::vector<Partition> out;
    for (int j = 0; j < t; ++j) {
        if (n[t - 1 - j] != 0) continue;
        if (j == 0 && lambda.empty()) continue;
        out.push_back(phi_j(lambda, j));
    }
    return out;
}

std::vector<std::pair<int, ResidueCounts>> children_counts(const ResidueCounts& n) {
    const int t = n.modulus;
    const bool root = n.total() == 0;
    std::vector<std::pair<int, ResidueCounts>> out;
    for (int j = 0; j < t; ++j) {
        if (n[t - 1 - j] != 0) continue;
        if (j == 0 && root) continue;
        out.emplace_back(j, psi_coordinates(n, j));
    }
    return out;
}

void for_each_tcore_up_to(int t, std::int64_t max_size,
                          const std::function<void(const ResidueCounts&, std::int64_t)>& visit) {
    if (t < 2) throw std::domain_error("the t-core tree needs t >= 2");
    if (max_size < 0) return;
    // σ strictly increases along every edge, so pruning at max_size is exact.
    std::deque<std::pair<ResidueCounts, std::int64_t>> queue;
    queue.emplace_back(ResidueCounts::zero(t), 0);
    while (!queue.empty()) {
        auto [n, sigma] = std::move(queue.front());
        queue.pop_front();
        visit(n, sigma);
        const std::int64_t len = n.total();
        for (auto& [j, child] : children_counts(n)) {
            const std::int64_t child_size = sigma + len + j;
            if (child_size <= max_size) queue.emplace_back(std::move(child), child_size);
        }
    }
}

QuotientDecomposition quotient_decompose(const Partition& lambda, int t) {
    if (t < 2) throw std::domain_error("quotient_decompose requires t >= 2");
    const int padded = (lambda.length() + t - 1) / t * t;
    const BetaSet beta = beta_set_padded(lambda, padded);

    std::vector<std::vector<int>> levels(static_cast<std::size_t>(t));
    for (int b : beta.values) levels[static_cast<std::size_t>(b % t)].push_back(b / t);

    QuotientDecomposition out;
    std::vector<int> core_beads;
    for (int r = 0; r < t; ++r) {
        const auto& runner = levels[static_cast<std::size_t>(r)];
        out.quotient.push_back(partition_from_beta(runner));
        for (int i = 0; i < static_cast<int>(runner.size()); ++i) core_beads.push_back(r + t * i);
    }
    out.core = partition_from_beta(core_beads);
    return out;
}

Partition quotient_compose(std::span<const Partition> quotient, const Partition& core, int t) {
    if (t < 2) throw std::domain_error("quotient_compose requires t >= 2");
    if (static_cast<int>(quotient.size()) != t)
        throw std::domain_error("quotient must hold exactly t partitions");
    if (!is_t_core(core, t)) throw PreconditionError("quotient_compose requires a t-core");

    int padded = (core.length() + t - 1) / t * t;
    std::vector<int> beads_per_runner(static_cast<std::size_t>(t), 0);
    for (int b : beta_set_padded(core, padded).values) ++beads_per_runner[static_cast<std::size_t>(b % t)];
    // every runner needs at least as many beads as its quotient has parts
    int extra = 0;
    for (int r = 0; r < t; ++r)
        extra = std::max(extra, quotient[r].length() - beads_per_runner[static_cast<std::size_t>(r)]);
    for (int& c : beads_per_runner) c += extra;

    std::vector<int> beta;
    for (int r = 0; r < t; ++r)
        for (int level : beta_set_padded(quotient[r], beads_per_runner[static_cast<std::size_t>(r)]).values)
            beta.push_back(r + t * level);
    return partition_from_beta(beta);
}

ChargeCoordinates nvec_to_charges(const ResidueCounts& n) {
    if (n.counts.empty() || n.counts[0] != 0)
        throw std::domain_error("nvec_to_charges requires n_0 = 0");
    const std::int64_t t = n.modulus;
    const std::int64_t len = n.total();
    const std::int64_t top = 1 + floor_div(len - 1, t);
    const std::int64_t m = floor_mod(len - 1, t);
    std::vector<std::int64_t> c(static_cast<std::size_t>(t));
    for (std::int64_t j = 0; j < t; ++j)
        c[static_cast<std::size_t>(j)] = j <= m ? top - n[m - j] : top - 1 - n[m - j + t];
    return ChargeCoordinates(static_cast<int>(t), std::move(c));
}

ResidueCounts charges_to_nvec(const ChargeCoordinates& c) {
    const int t = c.modulus;
    const std::int64_t top = *std::max_element(c.charges.begin(), c.charges.end());
    int m = t - 1;
    while (c.charges[static_cast<std::size_t>(m)] != top) --m;
    ResidueCounts n = ResidueCounts::zero(t);
    for (int j = 0; j < t; ++j) {
        const std::int64_t v = j <= m ? top - c.charges[j] : top - 1 - c.charges[j];
        n.counts[static_cast<std::size_t>(floor_mod(m - j, t))] = static_cast<int>(v);
    }
    return n;
}

std::int64_t size_from_charges(const ChargeCoordinates& c) {
    const std::int64_t t = c.modulus;
    std::int64_t twice = 0;
    for (std::int64_t j = 0; j < t; ++j) {
        const std::int64_t cj = c.charges[static_cast<std::size_t>(j)];
        twice += t * cj * cj + 2 * j * cj;
    }
    if (twice % 2 != 0) throw std::logic_error("charge size is not an integer");
    return twice / 2;
}

bool is_self_conjugate(const ChargeCoordinates& c) {
    const int t = c.modulus;
    for (int i = 0; i < t; ++i)
        if (c.charges[i] + c.charges[t - 1 - i] != 0) return false;
    return true;
}

} // namespace coreparts
