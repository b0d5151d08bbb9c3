#pragma once

#include "coreparts/bijections.hpp"
#include "coreparts/common.hpp"
#include "coreparts/partition.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace coreparts {

/// z₀..z_{a−1}, extended a-periodically. Elements of 𝒵_{a,b} satisfy
/// Σ z = b and a·(z₀ + … + z_{j−1}) ≤ j·b for 0 ≤ j < a; dropping the
/// prefix condition gives 𝒵′_{a,b}.
struct ZCoords {
    int a = 0;
    int b = 0;
    std::vector<int> z;

    int operator[](std::int64_t j) const { return z.at(static_cast<std::size_t>(floor_mod(j, a))); }
    auto operator<=>(const ZCoords&) const = default;
    bool operator==(const ZCoords&) const = default;
};

/// y₁ ≤ … ≤ y_{a−1} with 0 ≤ y_j ≤ jb/a. Stored 0-based: y[j−1] = y_j.
struct YCoords {
    int a = 0;
    int b = 0;
    std::vector<int> y;

    auto operator<=>(const YCoords&) const = default;
    bool operator==(const YCoords&) const = default;
};

/// True iff the a-core with residue counts n (a = n.modulus) is also a b-core,
/// via n_{j+b} − n_j ≤ ⌊(b + j)/a⌋. Throws std::domain_error if gcd(a, b) ≠ 1.
bool is_b_core_given_a(const ResidueCounts& n, int b);

/// Throws PreconditionError unless n describes an (a, b)-core.
ZCoords to_z(const ResidueCounts& n, int b);
YCoords to_y(const ZCoords& z);
ZCoords z_from_y(const YCoords& y);
/// n_{jb mod a} = ⌊jb/a⌋ − y_j.
ResidueCounts from_y(const YCoords& y);
/// The (a, b)-core with z-coordinates z; ∅ when a = 0.
Partition partition_from_z(const ZCoords& z);

bool in_Z(const ZCoords& z);
bool in_Zprime(const ZCoords& z);

/// The unique rotation (φ^s z)_j = z_{j−s} lying in 𝒵_{a,b}, with its shift s.
/// Throws std::domain_error if gcd(a, b) ≠ 1 or z ∉ 𝒵′_{a,b}.
std::pair<int, ZCoords> cycle_normalize(const ZCoords& zprime);

std::int64_t parts_from_y(const YCoords& y);
std::int64_t size_from_y(const YCoords& y);
std::int64_t parts_from_z(const ZCoords& z);
std::int64_t size_from_z(const ZCoords& z);

/// 𝒴_{a,b} in lexicographic order.
std::vector<YCoords> enumerate_y(int a, int b);
/// 𝒵′_{a,b}: weak compositions of b into a parts, colex order.
std::vector<ZCoords> enumerate_zprime(int a, int b);

/// Window constraint a·(z_j + … + z_{j+length−1}) ≤ bound for every j.
struct Window {
    int length = 0;
    std::int64_t bound = 0;
};

/// Windows induced by extra moduli c (length d with bd + c ≡ 0 mod a,
/// bound bd + c). Moduli divisible by a impose nothing.
std::vector<Window> multi_core_windows(int a, int b, const std::vector<int>& extra);
bool satisfies_windows(const ZCoords& z, const std::vector<Window>& windows);

/// |𝒵_{a,b} ∩ windows|.
BigInt count_multi_cores_direct(int a, int b, const std::vector<int>& extra);
/// |𝒵′_{a,b} ∩ windows| / a.
BigInt count_multi_cores_orbit(int a, int b, const std::vector<int>& extra);
/// Number of partitions that are a-, b- and c-cores for every c in `extra`.
/// Computes both routes and throws std::logic_error if they disagree.
BigInt count_multi_cores(int a, int b, const std::vector<int>& extra);
/// Those partitions, in the lexicographic order of their y-coordinates.
std::vector<Partition> enumerate_multi_cores(int a, int b, const std::vector<int>& extra);
std::vector<Partition> enumerate_ab_cores(int a, int b);

/// G_{s,r} = 𝒵_{s+1,s} and H_{s,r} = 𝒵_{s−1,s}, both cut down by the windows
/// z_j + … + z_{j+i−1} ≤ i + 1 for 1 ≤ i ≤ min(s, r) − 1.
bool in_G(const ZCoords& z, int s, int r);
bool in_H(const ZCoords& z, int s, int r);
std::vector<ZCoords> enumerate_G(int s, int r);
std::vector<ZCoords> enumerate_H(int s, int r);

/// z = u ⋅ z_k ⋅ v with u ∈ G_{k−1,r} and v ∈ H_{s−k+1,r}. k is the largest
/// index in 1..s with z₀ + … + z_{k−1} = k − 1.
struct GDecomposition {
    int k = 0;
    ZCoords u;
    ZCoords v;
};

/// Throws std::domain_error if z ∉ G_{s,r}.
GDecomposition decompose_G(const ZCoords& z, int s, int r);

/// α(λ) = Σ C(n_j, 2) and γ(λ) = Σ j·n_j for n = Φ₁(λ) at modulus t.
/// Both are 0 for t = 0. Throws PreconditionError if λ is not a t-core.
std::int64_t alpha_stat(const Partition& lambda, int t);
std::int64_t gamma_stat(const Partition& lambda, int t);

/// Statistics of 𝒫_{s,s+1,…,s+r}: N count, M max #, f = Σ#, g = Σα,
/// h = Σγ, T = Σσ (α, γ taken at modulus s+1).
struct ConsecutiveStats {
    int s = 0;
    int r = 0;
    BigInt N, M, f, g, h, T;

    bool operator==(const ConsecutiveStats&) const = default;
};

/// Recurrence values for s = 1..s_max (entry s−1 holds s).
std::vector<ConsecutiveStats> consecutive_stats_table(int s_max, int r);
ConsecutiveStats consecutive_stats(int s, int r);

/// The same statistics summed over the enumerated set.
ConsecutiveStats consecutive_stats_direct(int s, int r);

namespace detail {
/// Closed forms for f and g in terms of earlier values, as printed:
///   f(s) = Σ_{k<s} [2f(k)N(s−k−r) + kN(s−k−1)N(k−r+1)] − Σ_{k<r} f(s+k−r)
///   g(s) = Σ_{k<s} [2g(k)N(s−k−r) + f(k−r+1)N(s−k−1)] − Σ_{k<r} g(s+k−r)
BigInt printed_f(const std::vector<ConsecutiveStats>& table, int s, int r);
BigInt printed_g(const std::vector<ConsecutiveStats>& table, int s, int r);
} // namespace detail

} // namespace coreparts
