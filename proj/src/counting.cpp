#include "coreparts/counting.hpp"

#include "coreparts/bijections.hpp"

#include <mutex>
#include <stdexcept>

namespace coreparts {

BinomialTable::BinomialTable(int cap) : cap_(cap) {}

void BinomialTable::grow_to(std::int64_t n) const {
    std::unique_lock lock(mutex_);
    while (static_cast<std::int64_t>(rows_.size()) <= n) {
        const std::size_t r = rows_.size();
        std::vector<BigInt> row(r + 1, BigInt(1));
        for (std::size_t k = 1; k < r; ++k) row[k] = rows_[r - 1][k - 1] + rows_[r - 1][k];
        rows_.push_back(std::move(row));
    }
}

BigInt BinomialTable::operator()(std::int64_t n, std::int64_t k) const {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    if (n > cap_) {
        BigInt acc = 1;
        for (std::int64_t i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
        return acc;
    }
    {
        std::shared_lock lock(mutex_);
        if (static_cast<std::int64_t>(rows_.size()) > n)
            return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }
    grow_to(n);
    std::shared_lock lock(mutex_);
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const BinomialTable& BinomialTable::shared() {
    static const BinomialTable table;
    return table;
}

BigInt binomial(std::int64_t n, std::int64_t k) { return BinomialTable::shared()(n, k); }

BigInt rational_catalan(int a, int b) {
    if (a < 1 || b < 1) throw std::domain_error("rational Catalan numbers need a, b >= 1");
    return binomial(a + b, a) / (a + b);
}

namespace {

void require_t(int t, int minimum) {
    if (t < minimum) throw std::domain_error("t is out of range");
}

void require_nonnegative(int v, const char* what) {
    if (v < 0) throw std::domain_error(std::string(what) + " must be nonnegative");
}

} // namespace

BigInt count_parts_exact(int t, int l) {
    require_t(t, 1);
    require_nonnegative(l, "l");
    if (t == 1) return l == 0 ? 1 : 0;
    return binomial(l + t - 2, l);
}

BigInt count_parts_at_most(int t, int l) {
    require_t(t, 1);
    require_nonnegative(l, "l");
    return binomial(l + t - 1, l);
}

BigInt count_parts_split(int t, int l, int j) {
    require_t(t, 2);
    require_nonnegative(l, "l");
    require_nonnegative(j, "j");
    if (l == 0) return j <= t - 1 ? 1 : 0;  // (1^j); C(t−3, 0) would vanish at t = 2
    if (j <= t - 2) return binomial(l + t - 3, l);
    if (j == t - 1) return binomial(l + t - 2, l);
    return 0;
}

BigInt count_smallest_part(int t, int l, int i) {
    require_t(t, 2);
    if (l < 1 || i < 1) throw std::domain_error("count_smallest_part needs l, i >= 1");
    return binomial(l + t - i - 2, l - 1);
}

BigInt count_largest_part(int t, int x) {
    return count_parts_exact(t, x);
}

BigInt count_largest_two(int t, int x, int y) {
    require_t(t, 2);
    require_nonnegative(y, "y");
    if (x < 1) throw std::domain_error("count_largest_two needs x >= 1");
    if (x < y || x - y > t - 1) return 0;
    return count_parts_split(t, y, x - y);
}

BigInt count_largest_multiplicity(int t, int x, int i) {
    require_t(t, 2);
    if (x < 1 || i < 1) throw std::domain_error("count_largest_multiplicity needs x, i >= 1");
    return binomial(x + t - 2 - i, t - 1 - i);
}

BigInt count_parts_and_hook_bound(int t, int l, int h) {
    require_t(t, 2);
    require_nonnegative(l, "l");
    require_nonnegative(h, "h");
    const int q = h / t;
    const int rem = h % t;
    // residues 1..rem carry bound 2+q, the other t−1−rem carry 1+q
    BigInt total = 0;
    for (int a = 0; a <= rem; ++a) {
        for (int b = 0; b <= t - 1 - rem; ++b) {
            const std::int64_t top = static_cast<std::int64_t>(l) + t - 2 -
                                     static_cast<std::int64_t>(a) * (2 + q) -
                                     static_cast<std::int64_t>(b) * (1 + q);
            BigInt term = binomial(rem, a) * binomial(t - 1 - rem, b) * binomial(top, t - 2);
            if ((a + b) % 2 == 0)
                total += term;
            else
                total -= term;
        }
    }
    return total;
}

BigInt count_parts_and_bound(int t, int l, int x) {
    require_t(t, 2);
    require_nonnegative(l, "l");
    require_nonnegative(x, "x");
    if (l == 0) return 1;
    return count_parts_and_hook_bound(t, l, x + l - 1);
}

namespace {

int divisible_zero_count(const ResidueCounts& n, int d) {
    const int T = n.modulus;
    int count = 0;
    for (int j = 0; j <= (T - 1) / d; ++j)
        if (n[T - 1 - j * d] == 0) ++count;
    return count;
}

} // namespace

Partition psi_map(const Partition& lambda, int t, int d, int k) {
    if (t < 1 || d < 1) throw std::domain_error("psi_map needs t, d >= 1");
    if (k < 0 || k >= d) throw std::domain_error("psi_map needs 0 <= k < d");
    if (!is_t_core(lambda, t)) throw PreconditionError("psi_map requires a t-core");
    const int target = d * t - k;

    // Work with conjugates: there the tree edges are the φ_j and gen.
    std::vector<Partition> chain;
    for (Partition node = conjugate(lambda); !node.empty(); node = gen(node)) chain.push_back(node);

    ResidueCounts image = ResidueCounts::zero(target);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        const int wanted = phi1(*it, t).zero_count();
        const bool root = image.total() == 0;
        bool found = false;
        for (int j = 0; j <= (target - 1) / d && !found; ++j) {
            if (root && j == 0) continue;
            if (image[target - 1 - j * d] != 0) continue;
            ResidueCounts child = psi_coordinates(image, j * d);
            if (divisible_zero_count(child, d) == wanted) {
                image = std::move(child);
                found = true;
            }
        }
        if (!found) throw std::logic_error("psi_map: no matching child in the target tree");
    }
    return conjugate(phi1_inv(image));
}

BigInt count_divisible_parts(int t, int d, int k, int l) {
    require_t(t, 1);
    if (d < 1 || k < 0 || k >= d) throw std::domain_error("count_divisible_parts needs d >= 1, 0 <= k < d");
    return count_parts_exact(t, l);
}

BigInt determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::domain_error("determinant needs a square matrix");
    if (n == 0) return 1;
    int sign = 1;
    BigInt previous = 1;
    for (std::size_t p = 0; p < n; ++p) {
        if (m[p][p].is_zero()) {
            std::size_t swap_row = p + 1;
            while (swap_row < n && m[swap_row][p].is_zero()) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[p], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < n; ++i) {
            for (std::size_t j = p + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / previous;
        }
        previous = m[p][p];
    }
    return sign * m[n - 1][n - 1];
}

BigInt kreweras_count(std::span<const int> lambda) {
    for (std::size_t j = 0; j < lambda.size(); ++j) {
        if (lambda[j] < 0) throw std::domain_error("kreweras_count needs nonnegative entries");
        if (j > 0 && lambda[j] > lambda[j - 1])
            throw std::domain_error("kreweras_count needs a nonincreasing sequence");
    }
    const std::size_t n = lambda.size();
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = binomial(lambda[j] + 1, static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i) + 1);
    return determinant(std::move(m));
}

} // namespace coreparts
