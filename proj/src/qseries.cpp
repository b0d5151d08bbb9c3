#include "coreparts/qseries.hpp"

#include "coreparts/bijections.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace coreparts {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw std::domain_error("series order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, BigInt(0));
}

TruncatedSeries::TruncatedSeries(int order, std::vector<BigInt> coeffs) : TruncatedSeries(order) {
    if (coeffs.size() > coeffs_.size()) coeffs.resize(coeffs_.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
}

TruncatedSeries TruncatedSeries::one(int order) { return monomial(order, 0); }

TruncatedSeries TruncatedSeries::monomial(int order, int exponent, const BigInt& c) {
    if (exponent < 0) throw std::domain_error("negative exponent");
    TruncatedSeries s(order);
    if (exponent <= order) s.coeffs_[static_cast<std::size_t>(exponent)] = c;
    return s;
}

void TruncatedSeries::require_same_order(const TruncatedSeries& rhs) const {
    if (order_ != rhs.order_) throw std::domain_error("series orders differ");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    require_same_order(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    require_same_order(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& rhs) {
    require_same_order(rhs);
    std::vector<BigInt> out(coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < out.size(); ++j)
            if (!rhs.coeffs_[j].is_zero()) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    return *this;
}

TruncatedSeries TruncatedSeries::inverse() const {
    const BigInt& c0 = coeffs_[0];
    if (c0 != 1 && c0 != -1) throw std::domain_error("series is not a unit (constant term must be ±1)");
    TruncatedSeries inv(order_);
    inv.coeffs_[0] = c0;  // (±1)⁻¹ = ±1
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
        BigInt acc = 0;
        for (std::size_t k = 1; k <= n; ++k)
            if (!coeffs_[k].is_zero()) acc += coeffs_[k] * inv.coeffs_[n - k];
        inv.coeffs_[n] = -acc * c0;
    }
    return inv;
}

TruncatedSeries& TruncatedSeries::operator/=(const TruncatedSeries& rhs) {
    return *this *= rhs.inverse();
}

TruncatedSeries TruncatedSeries::pow(unsigned exponent) const {
    TruncatedSeries result = one(order_);
    TruncatedSeries base = *this;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

std::string TruncatedSeries::to_text() const {
    std::ostringstream os;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) os << n << ' ' << coeffs_[n] << '\n';
    return os.str();
}

TruncatedSeries TruncatedSeries::from_text(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::vector<BigInt> coeffs;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        long long n = -1;
        std::string value;
        std::string trailing;
        if (!(ls >> n >> value) || (ls >> trailing) || n != static_cast<long long>(coeffs.size()))
            throw std::invalid_argument("malformed series line: " + line);
        try {
            coeffs.emplace_back(value);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed coefficient: " + value);
        }
    }
    if (coeffs.empty()) throw std::invalid_argument("empty series text");
    const int order = static_cast<int>(coeffs.size()) - 1;
    return TruncatedSeries(order, std::move(coeffs));
}

TruncatedSeries pochhammer(int sign, int a_exp, int q_exp, int order) {
    if (sign != 1 && sign != -1) throw std::domain_error("pochhammer sign must be ±1");
    if (a_exp < 1) throw std::domain_error("pochhammer needs a_exp >= 1");
    if (q_exp < 1) throw std::domain_error("pochhammer needs q_exp >= 1");
    TruncatedSeries s = TruncatedSeries::one(order);
    // multiply in place by (1 − sign·q^e), high coefficients first
    for (long long e = a_exp; e <= order; e += q_exp) {
        for (long long n = order; n >= e; --n)
            s[static_cast<int>(n)] -= sign * s[static_cast<int>(n - e)];
    }
    return s;
}

TruncatedSeries gen_tcores_product(int t, int order) {
    if (t < 1) throw std::domain_error("t must be at least 1");
    const TruncatedSeries euler = pochhammer(1, 1, 1, order);
    return pochhammer(1, t, t, order).pow(static_cast<unsigned>(t)) / euler;
}

TruncatedSeries gen_tcores_nsum(int t, int order) {
    if (t < 2) throw std::domain_error("t must be at least 2");
    TruncatedSeries s(order);
    for_each_tcore_up_to(t, order, [&](const ResidueCounts&, std::int64_t sigma) {
        s[static_cast<int>(sigma)] += 1;
    });
    return s;
}

namespace {

// Twice the exponent is Σ_j (t c_j² + (2j − t + 1) c_j) once Σ c_j = 0, and
// each summand is nonnegative, so partial sums bound the search.
struct ChargeWalk {
    int t;
    std::int64_t budget;  // 2N
    TruncatedSeries* out;

    std::int64_t term(int j, std::int64_t c) const {
        return t * c * c + (2 * j - t + 1) * c;
    }

    void run(int j, std::int64_t sum, std::int64_t twice) {
        if (j == t - 1) {
            const std::int64_t total = twice + term(j, -sum);
            if (total <= budget) (*out)[static_cast<int>(total / 2)] += 1;
            return;
        }
        for (int dir : {1, -1}) {
            for (std::int64_t c = dir == 1 ? 0 : -1;; c += dir) {
                const std::int64_t next = twice + term(j, c);
                if (next > budget) break;
                run(j + 1, sum + c, next);
            }
        }
    }
};

} // namespace

TruncatedSeries gen_tcores_csum(int t, int order) {
    if (t < 2) throw std::domain_error("t must be at least 2");
    TruncatedSeries s(order);
    ChargeWalk walk{t, 2 * static_cast<std::int64_t>(order), &s};
    walk.run(0, 0, 0);
    return s;
}

TruncatedSeries gen_self_conjugate(int t, int order) {
    if (t < 2) throw std::domain_error("t must be at least 2");
    const TruncatedSeries odd_parts = pochhammer(-1, 1, 2, order);
    const TruncatedSeries block = pochhammer(1, 2 * t, 2 * t, order);
    if (t % 2 == 0) return block.pow(static_cast<unsigned>(t / 2)) * odd_parts;
    return block.pow(static_cast<unsigned>((t - 1) / 2)) * odd_parts / pochhammer(-1, t, 2 * t, order);
}

bool jacobi_triple_check(int z_sign, int z_exp, int order) {
    if (z_sign != 1 && z_sign != -1) throw std::domain_error("z sign must be ±1");
    if (z_exp < -1 || z_exp > 1)
        throw std::domain_error("specialization z = ±q^k needs |k| <= 1 to keep exponents nonnegative");
    if (order < 0) throw std::domain_error("series order must be nonnegative");

    // Σ_n z^n q^{n²} = Σ_n z_sign^n q^{n(n + k)}
    TruncatedSeries lhs(order);
    for (long long n = -static_cast<long long>(order) - 2; n <= order + 2; ++n) {
        const long long e = n * (n + z_exp);
        if (e < 0 || e > order) continue;
        lhs[static_cast<int>(e)] += (n % 2 != 0 && z_sign == -1) ? -1 : 1;
    }

    // (1 + z q^{2n+1}) and (1 + z⁻¹ q^{2n+1}) have exponents 2n+1±k.
    auto plus_factor = [&](int first_exp) {
        if (first_exp >= 1) return pochhammer(-z_sign, first_exp, 2, order);
        // exponent 0 at n = 0 contributes the constant 1 + z_sign
        const TruncatedSeries rest = pochhammer(-z_sign, first_exp + 2, 2, order);
        TruncatedSeries c(order);
        c[0] = 1 + z_sign;
        return c * rest;
    };
    const TruncatedSeries rhs = plus_factor(1 + z_exp) * plus_factor(1 - z_exp) * pochhammer(1, 2, 2, order);
    return lhs == rhs;
}

} // namespace coreparts
