#pragma once

#include "coreparts/common.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace coreparts {

/// A power series in q truncated after q^N. Coefficients are exact.
class TruncatedSeries {
public:
    /// The zero series of the given order. Throws std::domain_error if order < 0.
    explicit TruncatedSeries(int order = 0);
    TruncatedSeries(int order, std::vector<BigInt> coeffs);

    static TruncatedSeries one(int order);
    /// c·q^exponent (zero if exponent > order). Throws std::domain_error if exponent < 0.
    static TruncatedSeries monomial(int order, int exponent, const BigInt& c = 1);

    int order() const noexcept { return order_; }
    const BigInt& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    BigInt& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    /// Multiplicative inverse. Throws std::domain_error unless c₀ = ±1.
    TruncatedSeries inverse() const;
    TruncatedSeries pow(unsigned exponent) const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const TruncatedSeries& rhs);
    TruncatedSeries& operator/=(const TruncatedSeries& rhs);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
    friend TruncatedSeries operator/(TruncatedSeries a, const TruncatedSeries& b) { return a /= b; }

    bool operator==(const TruncatedSeries&) const = default;

    /// One "n coefficient" line per term, n = 0..N, each ending in '\n'.
    std::string to_text() const;
    /// Parses to_text() output. Throws std::invalid_argument on malformed input.
    static TruncatedSeries from_text(std::string_view text);

private:
    void require_same_order(const TruncatedSeries& rhs) const;

    int order_ = 0;
    std::vector<BigInt> coeffs_;
};

/// ∏_{n≥0} (1 − sign·q^{a_exp + n·q_exp}) mod q^{N+1}. sign = −1 gives the
/// (−q^a; q^b)_∞ products. Throws std::domain_error if a_exp < 1,
/// q_exp < 1 or sign ∉ {−1, 1}.
TruncatedSeries pochhammer(int sign, int a_exp, int q_exp, int order);

/// (q^t; q^t)_∞^t / (q; q)_∞.
TruncatedSeries gen_tcores_product(int t, int order);

/// Σ q^{σ(λ)} over the t-cores found by walking the t-core tree.
TruncatedSeries gen_tcores_nsum(int t, int order);

/// Σ q^{Σ (j c_j + t c_j²/2)} over integer vectors c with Σ c_j = 0.
TruncatedSeries gen_tcores_csum(int t, int order);

/// Generating function of self-conjugate t-cores:
///   t even: (q^{2t}; q^{2t})^{t/2} (−q; q²)
///   t odd:  (q^{2t}; q^{2t})^{(t−1)/2} (−q; q²) / (−q^t; q^{2t})
TruncatedSeries gen_self_conjugate(int t, int order);

/// Compares both sides of Jacobi's triple product under z = z_sign·q^{z_exp}.
/// Only z_exp ∈ {−1, 0, 1} keeps every exponent nonnegative; anything else
/// throws std::domain_error, as does z_sign ∉ {−1, 1}.
bool jacobi_triple_check(int z_sign, int z_exp, int order);

} // namespace coreparts
