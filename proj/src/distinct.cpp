#include "coreparts/distinct.hpp"

#include "coreparts/counting.hpp"
#include "coreparts/oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace coreparts {

bool has_distinct_parts(const Partition& lambda) {
    const auto parts = lambda.parts();
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] == parts[i - 1]) return false;
    return true;
}

bool distinct_iff_counts(const Partition& lambda, int t) {
    const ResidueCounts n = phi1(lambda, t);
    for (int j = 0; j + 1 < t; ++j)
        if (n[j] * n[j + 1] != 0) return false;
    return true;
}

bool conjugate_distinct_condition(const ResidueCounts& n) {
    if (n.total() == 0) throw PreconditionError("conjugate_distinct_condition needs a nonempty core");
    const int t = n.modulus;
    if (t < 2) return false;
    if (n[1] < 1 || n[1] > n[t - 1] + 1) return false;
    for (int j = 2; j <= t - 1; ++j)
        if (n[j] > std::max(n[j - 1], n[j - 2])) return false;
    return true;
}

BigInt count_distinct_consecutive(int s) {
    if (s < 1) throw std::domain_error("s must be at least 1");
    BigInt total = 0;
    for (int i = 0; 2 * i <= s; ++i) total += binomial(s - i, i);
    return total;
}

std::vector<Partition> enumerate_distinct_consecutive(int s) {
    if (s < 1) throw std::domain_error("s must be at least 1");
    if (s > 40) throw std::domain_error("s is too large to enumerate");
    std::vector<Partition> out;
    const int positions = s - 1;  // residues 1..s−1
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << positions); ++mask) {
        if (mask & (mask >> 1)) continue;
        ResidueCounts n = ResidueCounts::zero(s + 1);
        for (int j = 1; j <= positions; ++j)
            if (mask >> (j - 1) & 1U) n.counts[static_cast<std::size_t>(j)] = 1;
        out.push_back(phi1_inv(n));
    }
    return out;
}

BigInt count_distinct_odd_pair(int s) {
    if (s < 0) throw std::domain_error("s must be nonnegative");
    return boost::multiprecision::pow(BigInt(4), static_cast<unsigned>(s));
}

BigInt count_distinct_exact_parts(int t, int l) {
    if (t < 2 || l < 1) throw std::domain_error("count_distinct_exact_parts needs t >= 2, l >= 1");
    BigInt total = 0;
    for (int i = 1; 2 * i <= t; ++i) total += binomial(t - i, i) * binomial(l - 1, i - 1);
    return total;
}

namespace {

BigInt distinct_largest_memo(int t, int x, std::map<std::pair<int, int>, BigInt>& memo) {
    if (x == 0) return 1;
    if (t == 1) return 0;
    if (t == 2 || x == 1) return 1;
    const auto key = std::make_pair(t, x);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const bool recurrence_holds = x <= t || (t % 2 == 1 && x == t + 1);
    BigInt value = recurrence_holds
                       ? distinct_largest_memo(t - 1, x - 1, memo) + distinct_largest_memo(t - 2, x - 1, memo)
                       : BigInt(oracle::distinct_with_largest(t, x).size());
    memo.emplace(key, value);
    return value;
}

} // namespace

BigInt count_distinct_largest(int t, int x) {
    if (t < 1 || x < 0) throw std::domain_error("count_distinct_largest needs t >= 1, x >= 0");
    std::map<std::pair<int, int>, BigInt> memo;
    return distinct_largest_memo(t, x, memo);
}

std::vector<std::vector<BigInt>> distinct_table(int t_max, int x_max, int jobs) {
    if (t_max < 2 || x_max < 0) throw std::domain_error("distinct_table needs t_max >= 2, x_max >= 0");
    const int rows = t_max - 1;
    std::vector<std::vector<BigInt>> table(static_cast<std::size_t>(rows),
                                           std::vector<BigInt>(static_cast<std::size_t>(x_max) + 1));
    auto fill_row = [&](int row) {
        for (int x = 0; x <= x_max; ++x)
            table[static_cast<std::size_t>(row)][static_cast<std::size_t>(x)] =
                oracle::distinct_with_largest(row + 2, x).size();
    };
    if (jobs <= 1) {
        for (int row = 0; row < rows; ++row) fill_row(row);
        return table;
    }
    std::mutex mutex;
    int next = 0;
    std::vector<std::thread> workers;
    for (int w = 0; w < std::min(jobs, rows); ++w) {
        workers.emplace_back([&] {
            for (;;) {
                int row;
                {
                    std::lock_guard lock(mutex);
                    if (next == rows) return;
                    row = next++;
                }
                fill_row(row);
            }
        });
    }
    for (auto& w : workers) w.join();
    return table;
}

bool distinct_triple_stability(int s, int t) {
    if (s < 1) throw std::domain_error("s must be at least 1");
    if (t <= s + 1) throw std::domain_error("stability needs t > s+1");
    for (const Partition& p : enumerate_distinct_consecutive(s))
        if (!is_t_core(p, t)) throw std::logic_error("distinct (s,s+1)-core " + p.to_string() + " is not a t-core");
    return true;
}

} // namespace coreparts
