#include "coreparts/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace coreparts::oracle {

namespace {

std::vector<int> local_conjugate(const std::vector<int>& parts) {
    std::vector<int> out;
    if (parts.empty()) return out;
    for (int j = 1; j <= parts.front(); ++j) {
        int count = 0;
        for (int p : parts)
            if (p >= j) ++count;
        out.push_back(count);
    }
    return out;
}

std::vector<int> local_beta(const std::vector<int>& parts) {
    const int len = static_cast<int>(parts.size());
    std::vector<int> out;
    for (int j = 0; j < len; ++j) out.push_back(parts[static_cast<std::size_t>(j)] + len - 1 - j);
    return out;
}

Partition local_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int len = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int j = 0; j < len; ++j) {
        const int part = beta[static_cast<std::size_t>(j)] - (len - 1 - j);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

void require_t(int t) {
    if (t < 1) throw std::domain_error("t must be at least 1");
}

} // namespace

BigInt partition_count(int n) {
    if (n < 0) return 0;
    std::vector<BigInt> p(static_cast<std::size_t>(n) + 1, BigInt(0));
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        BigInt acc = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            if (g1 > m) break;
            const int g2 = k * (3 * k + 1) / 2;
            BigInt term = p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) term += p[static_cast<std::size_t>(m - g2)];
            if (k % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        p[static_cast<std::size_t>(m)] = acc;
    }
    return p[static_cast<std::size_t>(n)];
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::domain_error("n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    if (BigInt(out.size()) != partition_count(n))
        throw std::logic_error("partition enumeration disagrees with the pentagonal recurrence");
    return out;
}

Partition conjugate_of(const Partition& lambda) { return Partition(local_conjugate(lambda.vec())); }

std::vector<int> hooks(const Partition& lambda) {
    const std::vector<int>& parts = lambda.vec();
    const std::vector<int> columns = local_conjugate(parts);
    std::vector<int> out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j)
            out.push_back(parts[i] - j + columns[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1);
    return out;
}

bool is_core_by_hooks(const Partition& lambda, int t) {
    require_t(t);
    for (int h : hooks(lambda))
        if (h % t == 0) return false;
    return true;
}

std::vector<Partition> tcores_of(int n, int t) {
    require_t(t);
    std::vector<Partition> out;
    for (Partition& p : partitions_of(n))
        if (is_core_by_hooks(p, t)) out.push_back(std::move(p));
    return out;
}

std::vector<Partition> tcores_up_to(int N, int t) {
    std::vector<Partition> out;
    for (int n = 0; n <= N; ++n)
        for (Partition& p : tcores_of(n, t)) out.push_back(std::move(p));
    return out;
}

std::vector<Partition> tcores_with_parts(int t, int l, int step) {
    require_t(t);
    if (l < 0 || step < 1) throw std::domain_error("need l >= 0 and step >= 1");
    if (l == 0) return {Partition{}};
    if (t == 1) return {};
    const int bound = l * (t - 1);
    std::vector<int> rows(static_cast<std::size_t>(l));
    std::vector<int> below(static_cast<std::size_t>(bound) + 2, 0);  // rows already placed with part >= j
    std::vector<Partition> out;

    std::function<void(int, int)> place = [&](int row, int minimum) {
        if (row < 0) {
            out.emplace_back(rows);
            return;
        }
        const int first = (minimum + step - 1) / step * step;
        for (int v = std::max(first, step); v <= bound; v += step) {
            bool ok = true;
            for (int j = 1; j <= v && ok; ++j)
                if ((v - j + below[static_cast<std::size_t>(j)] + 1) % t == 0) ok = false;
            if (!ok) continue;
            rows[static_cast<std::size_t>(row)] = v;
            for (int j = 1; j <= v; ++j) ++below[static_cast<std::size_t>(j)];
            place(row - 1, v);
            for (int j = 1; j <= v; ++j) --below[static_cast<std::size_t>(j)];
        }
    };
    place(l - 1, 1);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<Partition> ab_cores_brute(int a, int b, std::span<const int> extra) {
    if (a < 1 || b < 1) throw std::domain_error("need a, b >= 1");
    std::int64_t x = a;
    std::int64_t y = b;
    while (y != 0) {
        const std::int64_t r = x % y;
        x = y;
        y = r;
    }
    if (x != 1) throw std::domain_error("a and b must be relatively prime");

    std::vector<int> gaps;
    if (a > 1 && b > 1) {
        const int frobenius = a * b - a - b;
        std::vector<bool> representable(static_cast<std::size_t>(frobenius) + 1, false);
        for (int i = 0; i * a <= frobenius; ++i)
            for (int j = 0; i * a + j * b <= frobenius; ++j) representable[static_cast<std::size_t>(i * a + j * b)] = true;
        for (int v = 1; v <= frobenius; ++v)
            if (!representable[static_cast<std::size_t>(v)]) gaps.push_back(v);
    }

    std::vector<bool> chosen(gaps.empty() ? 1 : static_cast<std::size_t>(gaps.back()) + 1, false);
    std::vector<int> beta;
    std::vector<Partition> out;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == gaps.size()) {
            Partition p = local_from_beta(beta);
            for (int c : extra)
                if (!is_core_by_hooks(p, c)) return;
            out.push_back(std::move(p));
            return;
        }
        rec(i + 1);
        const int v = gaps[i];
        const bool a_ok = v < a || chosen[static_cast<std::size_t>(v - a)];
        const bool b_ok = v < b || chosen[static_cast<std::size_t>(v - b)];
        if (a_ok && b_ok) {
            chosen[static_cast<std::size_t>(v)] = true;
            beta.push_back(v);
            rec(i + 1);
            beta.pop_back();
            chosen[static_cast<std::size_t>(v)] = false;
        }
    };
    rec(0);
    return out;
}

std::vector<Partition> distinct_with_largest(int t, int x) {
    require_t(t);
    if (x < 0) throw std::domain_error("x must be nonnegative");
    std::vector<Partition> out;
    if (x == 0) {
        out.emplace_back();
        return out;
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (x - 1)); ++mask) {
        std::vector<int> parts{x};
        for (int v = x - 1; v >= 1; --v)
            if (mask >> (v - 1) & 1U) parts.push_back(v);
        Partition p(std::move(parts));
        if (is_core_by_hooks(p, t)) out.push_back(std::move(p));
    }
    return out;
}

BigInt bounded_sequences(std::span<const int> lambda) {
    BigInt count = 0;
    std::function<void(std::size_t, int)> rec = [&](std::size_t j, int previous) {
        if (j == lambda.size()) {
            ++count;
            return;
        }
        for (int v = 0; v <= std::min(previous, lambda[j]); ++v) rec(j + 1, v);
    };
    rec(0, lambda.empty() ? 0 : lambda[0]);
    return count;
}

BigInt sum_statistic(std::span<const Partition> list, Stat stat, int t) {
    BigInt total = 0;
    for (const Partition& p : list) {
        switch (stat) {
        case Stat::Count:
            total += 1;
            break;
        case Stat::Parts:
            total += p.length();
            break;
        case Stat::Size:
            total += p.size();
            break;
        case Stat::MaxParts:
            total = std::max(total, BigInt(p.length()));
            break;
        case Stat::MaxSize:
            total = std::max(total, BigInt(p.size()));
            break;
        case Stat::Alpha:
        case Stat::Gamma: {
            require_t(t);
            if (!is_core_by_hooks(p, t)) throw std::domain_error("alpha/gamma need t-cores");
            std::vector<std::int64_t> residues(static_cast<std::size_t>(t), 0);
            for (int v : local_beta(p.vec())) ++residues[static_cast<std::size_t>(v % t)];
            for (int j = 0; j < t; ++j) {
                const std::int64_t c = residues[static_cast<std::size_t>(j)];
                total += stat == Stat::Alpha ? c * (c - 1) / 2 : j * c;
            }
            break;
        }
        }
    }
    return total;
}

} // namespace coreparts::oracle
