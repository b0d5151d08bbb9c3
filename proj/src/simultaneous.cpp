#include "coreparts/simultaneous.hpp"

#include "coreparts/counting.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace coreparts {

namespace {

void require_coprime(int a, int b) {
    if (a < 1 || b < 0) throw std::domain_error("need a >= 1 and b >= 0");
    if (gcd64(a, b) != 1) throw std::domain_error("a and b must be relatively prime");
}

std::int64_t window_sum(const ZCoords& z, int start, int length) {
    std::int64_t sum = 0;
    for (int i = 0; i < length; ++i) sum += z[start + i];
    return sum;
}

bool consecutive_windows_ok(const ZCoords& z, int s, int r) {
    const int cap = std::min(s, r) - 1;
    for (int i = 1; i <= cap; ++i)
        for (int j = 0; j < z.a; ++j)
            if (window_sum(z, j, i) > i + 1) return false;
    return true;
}

} // namespace

bool is_b_core_given_a(const ResidueCounts& n, int b) {
    const int a = n.modulus;
    require_coprime(a, b);
    for (int j = 0; j < a; ++j)
        if (n[j + b] - n[j] > (b + j) / a) return false;
    return true;
}

ZCoords to_z(const ResidueCounts& n, int b) {
    const int a = n.modulus;
    require_coprime(a, b);
    if (n.counts[0] != 0 || !is_b_core_given_a(n, b))
        throw PreconditionError("to_z requires the counts of an (a,b)-core");
    // a·x_j as an integer
    auto ax = [&](std::int64_t j) { return static_cast<std::int64_t>(a) * n[j] + floor_mod(j, a); };
    ZCoords out{a, b, std::vector<int>(static_cast<std::size_t>(a))};
    for (int j = 0; j < a; ++j) {
        const std::int64_t num = ax(static_cast<std::int64_t>(j) * b) - ax(static_cast<std::int64_t>(j + 1) * b) + b;
        out.z[static_cast<std::size_t>(j)] = static_cast<int>(num / a);
    }
    return out;
}

YCoords to_y(const ZCoords& z) {
    YCoords out{z.a, z.b, {}};
    int prefix = 0;
    for (int j = 1; j < z.a; ++j) {
        prefix += z.z[static_cast<std::size_t>(j - 1)];
        out.y.push_back(prefix);
    }
    return out;
}

ZCoords z_from_y(const YCoords& y) {
    ZCoords out{y.a, y.b, std::vector<int>(static_cast<std::size_t>(y.a))};
    int previous = 0;
    for (int j = 1; j < y.a; ++j) {
        out.z[static_cast<std::size_t>(j - 1)] = y.y[static_cast<std::size_t>(j - 1)] - previous;
        previous = y.y[static_cast<std::size_t>(j - 1)];
    }
    if (y.a > 0) out.z.back() = y.b - previous;
    return out;
}

ResidueCounts from_y(const YCoords& y) {
    ResidueCounts n = ResidueCounts::zero(y.a);
    for (int j = 1; j < y.a; ++j) {
        const std::int64_t jb = static_cast<std::int64_t>(j) * y.b;
        n.counts[static_cast<std::size_t>(jb % y.a)] =
            static_cast<int>(jb / y.a) - y.y[static_cast<std::size_t>(j - 1)];
    }
    return n;
}

Partition partition_from_z(const ZCoords& z) {
    if (z.a == 0) return {};
    return phi1_inv(from_y(to_y(z)));
}

bool in_Zprime(const ZCoords& z) {
    if (static_cast<int>(z.z.size()) != z.a) return false;
    std::int64_t sum = 0;
    for (int v : z.z) {
        if (v < 0) return false;
        sum += v;
    }
    return z.a == 0 || sum == z.b;
}

bool in_Z(const ZCoords& z) {
    if (!in_Zprime(z)) return false;
    std::int64_t prefix = 0;
    for (int j = 0; j < z.a; ++j) {
        if (static_cast<std::int64_t>(z.a) * prefix > static_cast<std::int64_t>(j) * z.b) return false;
        prefix += z.z[static_cast<std::size_t>(j)];
    }
    return true;
}

std::pair<int, ZCoords> cycle_normalize(const ZCoords& zprime) {
    require_coprime(zprime.a, zprime.b);
    if (!in_Zprime(zprime)) throw std::domain_error("cycle_normalize needs a weak composition of b into a parts");
    for (int shift = 0; shift < zprime.a; ++shift) {
        ZCoords rotated{zprime.a, zprime.b, std::vector<int>(zprime.z.size())};
        for (int j = 0; j < zprime.a; ++j) rotated.z[static_cast<std::size_t>(j)] = zprime[j - shift];
        if (in_Z(rotated)) return {shift, rotated};
    }
    throw std::logic_error("cycle_normalize: no rotation lies in Z");
}

std::int64_t parts_from_y(const YCoords& y) {
    const std::int64_t a = y.a;
    const std::int64_t b = y.b;
    const std::int64_t sum = std::accumulate(y.y.begin(), y.y.end(), std::int64_t{0});
    return (a - 1) * (b - 1) / 2 - sum;
}

std::int64_t size_from_y(const YCoords& y) {
    const std::int64_t a = y.a;
    const std::int64_t b = y.b;
    std::int64_t inner = 0;
    std::int64_t sum = 0;
    for (std::int64_t j = 1; j < a; ++j) {
        const std::int64_t yj = y.y[static_cast<std::size_t>(j - 1)];
        inner += a * yj * yj + b * (a - 1 - 2 * j) * yj;
        sum += yj;
    }
    inner -= sum * sum;
    return ((a * a - 1) * (b * b - 1) + 12 * inner) / 24;
}

std::int64_t parts_from_z(const ZCoords& z) {
    const std::int64_t a = z.a;
    const std::int64_t b = z.b;
    std::int64_t weighted = 0;
    for (std::int64_t j = 0; j + 1 < a; ++j) weighted += (a - j - 1) * z.z[static_cast<std::size_t>(j)];
    return (a - 1) * (b - 1) / 2 - weighted;
}

std::int64_t size_from_z(const ZCoords& z) {
    const std::int64_t a = z.a;
    const std::int64_t b = z.b;
    // w_l = a − 1 − l for l < a − 1
    std::int64_t quad = 0;
    std::int64_t linear_w = 0;
    std::int64_t lin = 0;
    for (std::int64_t l = 0; l + 1 < a; ++l) {
        const std::int64_t wl = a - 1 - l;
        const std::int64_t zl = z.z[static_cast<std::size_t>(l)];
        for (std::int64_t m = 0; m + 1 < a; ++m)
            quad += std::min(wl, a - 1 - m) * zl * z.z[static_cast<std::size_t>(m)];
        linear_w += wl * zl;
        lin -= b * (l + 1) * wl * zl;
    }
    quad = a * quad - linear_w * linear_w;
    return ((a * a - 1) * (b * b - 1) + 12 * (quad + lin)) / 24;
}

std::vector<YCoords> enumerate_y(int a, int b) {
    require_coprime(a, b);
    std::vector<YCoords> out;
    std::vector<int> y(static_cast<std::size_t>(std::max(a - 1, 0)));
    auto rec = [&](auto&& self, int j, int low) -> void {
        if (j == a) {
            out.push_back(YCoords{a, b, y});
            return;
        }
        const int high = static_cast<int>(static_cast<std::int64_t>(j) * b / a);
        for (int v = low; v <= high; ++v) {
            y[static_cast<std::size_t>(j - 1)] = v;
            self(self, j + 1, v);
        }
    };
    rec(rec, 1, 0);
    return out;
}

std::vector<ZCoords> enumerate_zprime(int a, int b) {
    if (a < 1 || b < 0) throw std::domain_error("need a >= 1 and b >= 0");
    std::vector<ZCoords> out;
    std::vector<int> z(static_cast<std::size_t>(a));
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == 0) {
            z[0] = remaining;
            out.push_back(ZCoords{a, b, z});
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            z[static_cast<std::size_t>(i)] = v;
            self(self, i - 1, remaining - v);
        }
    };
    rec(rec, a - 1, b);
    return out;
}

std::vector<Window> multi_core_windows(int a, int b, const std::vector<int>& extra) {
    require_coprime(a, b);
    std::vector<Window> out;
    for (int c : extra) {
        if (c < 1) throw std::domain_error("extra moduli must be positive");
        if (c % a == 0) continue;
        for (int d = 1; d <= a; ++d) {
            const std::int64_t bound = static_cast<std::int64_t>(b) * d + c;
            if (bound % a == 0) {
                out.push_back(Window{d, bound});
                break;
            }
        }
    }
    return out;
}

bool satisfies_windows(const ZCoords& z, const std::vector<Window>& windows) {
    for (const Window& w : windows)
        for (int j = 0; j < z.a; ++j)
            if (static_cast<std::int64_t>(z.a) * window_sum(z, j, w.length) > w.bound) return false;
    return true;
}

BigInt count_multi_cores_direct(int a, int b, const std::vector<int>& extra) {
    const auto windows = multi_core_windows(a, b, extra);
    BigInt count = 0;
    for (const YCoords& y : enumerate_y(a, b))
        if (satisfies_windows(z_from_y(y), windows)) ++count;
    return count;
}

BigInt count_multi_cores_orbit(int a, int b, const std::vector<int>& extra) {
    const auto windows = multi_core_windows(a, b, extra);
    BigInt count = 0;
    for (const ZCoords& z : enumerate_zprime(a, b))
        if (satisfies_windows(z, windows)) ++count;
    if (count % a != 0) throw std::logic_error("window-filtered Z' is not a union of full orbits");
    return count / a;
}

BigInt count_multi_cores(int a, int b, const std::vector<int>& extra) {
    BigInt direct = count_multi_cores_direct(a, b, extra);
    if (direct != count_multi_cores_orbit(a, b, extra))
        throw std::logic_error("multi-core counting routes disagree");
    return direct;
}

std::vector<Partition> enumerate_multi_cores(int a, int b, const std::vector<int>& extra) {
    const auto windows = multi_core_windows(a, b, extra);
    std::vector<Partition> out;
    for (const YCoords& y : enumerate_y(a, b))
        if (satisfies_windows(z_from_y(y), windows)) out.push_back(phi1_inv(from_y(y)));
    return out;
}

std::vector<Partition> enumerate_ab_cores(int a, int b) { return enumerate_multi_cores(a, b, {}); }

bool in_G(const ZCoords& z, int s, int r) {
    if (s < 0 || r < 1) throw std::domain_error("in_G needs s >= 0, r >= 1");
    if (z.a != s + 1 || z.b != s) return false;
    return in_Z(z) && consecutive_windows_ok(z, s, r);
}

bool in_H(const ZCoords& z, int s, int r) {
    if (s < 1 || r < 1) throw std::domain_error("in_H needs s >= 1, r >= 1");
    if (z.a != s - 1 || z.b != s) return false;
    return in_Z(z) && consecutive_windows_ok(z, s, r);
}

std::vector<ZCoords> enumerate_G(int s, int r) {
    if (s < 0 || r < 1) throw std::domain_error("enumerate_G needs s >= 0, r >= 1");
    std::vector<ZCoords> out;
    for (const YCoords& y : enumerate_y(s + 1, s)) {
        ZCoords z = z_from_y(y);
        if (consecutive_windows_ok(z, s, r)) out.push_back(std::move(z));
    }
    return out;
}

std::vector<ZCoords> enumerate_H(int s, int r) {
    if (s < 1 || r < 1) throw std::domain_error("enumerate_H needs s >= 1, r >= 1");
    if (s == 1) return {ZCoords{0, 1, {}}};
    std::vector<ZCoords> out;
    for (const YCoords& y : enumerate_y(s - 1, s)) {
        ZCoords z = z_from_y(y);
        if (consecutive_windows_ok(z, s, r)) out.push_back(std::move(z));
    }
    return out;
}

GDecomposition decompose_G(const ZCoords& z, int s, int r) {
    if (!in_G(z, s, r)) throw std::domain_error("decompose_G needs an element of G_{s,r}");
    int k = 0;
    int prefix = 0;
    for (int j = 1; j <= s; ++j) {
        prefix += z.z[static_cast<std::size_t>(j - 1)];
        if (prefix == j - 1) k = j;
    }
    if (k == 0) throw std::logic_error("decompose_G: no split position");
    GDecomposition out;
    out.k = k;
    out.u = ZCoords{k, k - 1, std::vector<int>(z.z.begin(), z.z.begin() + k)};
    out.v = ZCoords{s - k, s - k + 1, std::vector<int>(z.z.begin() + k + 1, z.z.end())};
    return out;
}

std::int64_t alpha_stat(const Partition& lambda, int t) {
    if (t == 0) return 0;
    std::int64_t sum = 0;
    for (std::int64_t c : phi1(lambda, t).counts) sum += c * (c - 1) / 2;
    return sum;
}

std::int64_t gamma_stat(const Partition& lambda, int t) {
    if (t == 0) return 0;
    const ResidueCounts n = phi1(lambda, t);
    std::int64_t sum = 0;
    for (int j = 0; j < t; ++j) sum += static_cast<std::int64_t>(j) * n.counts[static_cast<std::size_t>(j)];
    return sum;
}

namespace {

// Value at index p, with the boundary values used for p ≤ 0.
struct StatSeq {
    std::vector<BigInt> values;  // values[p] for p = 1..
    BigInt below;                // value for p ≤ 0

    const BigInt& operator()(std::int64_t p) const {
        return p <= 0 ? below : values[static_cast<std::size_t>(p)];
    }
};

} // namespace

std::vector<ConsecutiveStats> consecutive_stats_table(int s_max, int r) {
    if (s_max < 0 || r < 1) throw std::domain_error("consecutive_stats needs s >= 1, r >= 1");
    const std::size_t size = static_cast<std::size_t>(s_max) + 1;
    StatSeq N{std::vector<BigInt>(size), 1};
    StatSeq M{std::vector<BigInt>(size), 0};
    StatSeq f{std::vector<BigInt>(size), 0};
    StatSeq g{std::vector<BigInt>(size), 0};
    StatSeq h{std::vector<BigInt>(size), 0};
    StatSeq T{std::vector<BigInt>(size), 0};

    std::vector<ConsecutiveStats> out;
    for (std::int64_t s = 1; s <= s_max; ++s) {
        BigInt n_sum = 0;
        BigInt f_sum = 0;
        BigInt g_sum = 0;
        BigInt h_sum = 0;
        std::vector<BigInt> F(static_cast<std::size_t>(s) + 1);
        for (std::int64_t k = 1; k <= s; ++k) {
            const std::int64_t m = s - k + 1;
            const BigInt& Nk = N(k - 1);
            const BigInt& NH = N(m - r);
            const BigInt& fH = f(m - r);
            const BigInt& gH = g(m - r);
            const BigInt hH = h(m - r) - static_cast<std::int64_t>(r - 2) * g(m - r);
            n_sum += N(s - k) * N(k - r);
            F[static_cast<std::size_t>(k)] = f(k - 1) * NH + Nk * fH + (s - k) * Nk * NH;
            f_sum += F[static_cast<std::size_t>(k)];
            g_sum += g(k - 1) * NH + Nk * gH + Nk * fH;
            h_sum += (s - k) * F[static_cast<std::size_t>(k)] + h(k - 1) * NH - Nk * hH + f(k - 1) * NH -
                     binomial(s - k, 2) * Nk * NH;
        }
        BigInt t_sum = (s + 1) * g_sum + h_sum;
        for (std::int64_t k = 1; k <= s; ++k) {
            const std::int64_t m = s - k + 1;
            const BigInt& Nk = N(k - 1);
            const BigInt& NH = N(m - r);
            const BigInt& fH = f(m - r);
            const BigInt& gH = g(m - r);
            const BigInt hH = h(m - r) - static_cast<std::int64_t>(r - 2) * g(m - r);
            const BigInt& TH = T(m - r);
            t_sum += -(s - k) * F[static_cast<std::size_t>(k)] + (T(k - 1) - k * g(k - 1) - h(k - 1)) * NH +
                     (TH - (s - k) * gH - hH) * Nk - f(k - 1) * fH + binomial(s - k + 1, 2) * Nk * NH;
        }
        const auto idx = static_cast<std::size_t>(s);
        N.values[idx] = n_sum;
        M.values[idx] = M(s - r) + (s - 1);
        f.values[idx] = f_sum;
        g.values[idx] = g_sum;
        h.values[idx] = h_sum;
        T.values[idx] = t_sum;
        out.push_back(ConsecutiveStats{static_cast<int>(s), r, n_sum, M.values[idx], f_sum, g_sum, h_sum, t_sum});
    }
    return out;
}

ConsecutiveStats consecutive_stats(int s, int r) {
    if (s < 1) throw std::domain_error("consecutive_stats needs s >= 1");
    return consecutive_stats_table(s, r).back();
}

ConsecutiveStats consecutive_stats_direct(int s, int r) {
    if (s < 1 || r < 1) throw std::domain_error("consecutive_stats needs s >= 1, r >= 1");
    std::vector<int> extra;
    for (int c = s + 2; c <= s + r; ++c) extra.push_back(c);
    ConsecutiveStats out{s, r, 0, 0, 0, 0, 0, 0};
    for (const Partition& p : enumerate_multi_cores(s + 1, s, extra)) {
        out.N += 1;
        if (out.M < p.length()) out.M = p.length();
        out.f += p.length();
        out.g += alpha_stat(p, s + 1);
        out.h += gamma_stat(p, s + 1);
        out.T += p.size();
    }
    return out;
}

namespace detail {

namespace {

BigInt stat_at(const std::vector<ConsecutiveStats>& table, std::int64_t p, BigInt ConsecutiveStats::*field,
               const BigInt& below) {
    if (p <= 0) return below;
    if (p > static_cast<std::int64_t>(table.size())) throw std::out_of_range("statistics table too short");
    return table[static_cast<std::size_t>(p - 1)].*field;
}

} // namespace

BigInt printed_f(const std::vector<ConsecutiveStats>& table, int s, int r) {
    auto N = [&](std::int64_t p) { return stat_at(table, p, &ConsecutiveStats::N, 1); };
    auto f = [&](std::int64_t p) { return stat_at(table, p, &ConsecutiveStats::f, 0); };
    BigInt total = 0;
    for (std::int64_t k = 1; k < s; ++k) total += 2 * f(k) * N(s - k - r) + k * N(s - k - 1) * N(k - r + 1);
    for (std::int64_t k = 1; k < r; ++k) total -= f(s + k - r);
    return total;
}

BigInt printed_g(const std::vector<ConsecutiveStats>& table, int s, int r) {
    auto N = [&](std::int64_t p) { return stat_at(table, p, &ConsecutiveStats::N, 1); };
    auto f = [&](std::int64_t p) { return stat_at(table, p, &ConsecutiveStats::f, 0); };
    auto g = [&](std::int64_t p) { return stat_at(table, p, &ConsecutiveStats::g, 0); };
    BigInt total = 0;
    for (std::int64_t k = 1; k < s; ++k) total += 2 * g(k) * N(s - k - r) + f(k - r + 1) * N(s - k - 1);
    for (std::int64_t k = 1; k < r; ++k) total -= g(s + k - r);
    return total;
}

} // namespace detail

} // namespace coreparts
