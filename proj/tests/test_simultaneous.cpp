#include "coreparts/counting.hpp"
#include "coreparts/oracle.hpp"
#include "coreparts/simultaneous.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace coreparts;

namespace {
std::set<Partition> as_set(const std::vector<Partition>& v) { return {v.begin(), v.end()}; }

ZCoords zc(int a, int b, std::vector<int> z) { return ZCoords{a, b, std::move(z)}; }
} // namespace

TEST_CASE("second core test from residue counts") {
    CHECK(is_b_core_given_a(ResidueCounts::zero(4), 7));
    const ResidueCounts n = phi1(Partition{4, 2}, 3);
    CHECK(n == ResidueCounts(3, {0, 0, 2}));
    CHECK(is_b_core_given_a(n, 4) == is_t_core(Partition{4, 2}, 4));
    CHECK_FALSE(is_b_core_given_a(phi1(Partition{2, 1}, 2), 3));
    CHECK(is_b_core_given_a(phi1(Partition{1}, 2), 3));
    CHECK_THROWS_AS(is_b_core_given_a(n, 6), std::domain_error);
    for (int a = 2; a <= 5; ++a)
        for (int b = 1; b <= 9; ++b) {
            if (gcd64(a, b) != 1) continue;
            for (const Partition& p : oracle::tcores_up_to(14, a))
                CHECK(is_b_core_given_a(phi1(p, a), b) == is_t_core(p, b));
        }
}

TEST_CASE("coordinate maps") {
    // extremes of Y
    for (auto [a, b] : std::vector<std::pair<int, int>>{{3, 4}, {4, 3}, {5, 7}}) {
        YCoords top{a, b, {}};
        YCoords bottom{a, b, {}};
        for (int j = 1; j < a; ++j) {
            top.y.push_back(j * b / a);
            bottom.y.push_back(0);
        }
        CHECK(phi1_inv(from_y(top)) == Partition{});
        const Partition largest = phi1_inv(from_y(bottom));
        CHECK(largest.length() == (a - 1) * (b - 1) / 2);
        CHECK(largest.size() == (a * a - 1) * (b * b - 1) / 24);
        CHECK(parts_from_y(top) == 0);
        CHECK(size_from_y(top) == 0);
        CHECK(parts_from_y(bottom) == (a - 1) * (b - 1) / 2);
        CHECK(size_from_y(bottom) == (a * a - 1) * (b * b - 1) / 24);
        CHECK(size_from_z(z_from_y(bottom)) == largest.size());
        CHECK(parts_from_z(z_from_y(bottom)) == largest.length());
    }
    CHECK(enumerate_ab_cores(2, 3).size() == 2);
    const auto cores = enumerate_ab_cores(3, 4);
    REQUIRE(cores.size() == 5);
    for (const Partition& p : cores) {
        const ZCoords z = to_z(phi1(p, 3), 4);
        CHECK(in_Z(z));
        const YCoords y = to_y(z);
        CHECK(z_from_y(y) == z);
        CHECK(phi1_inv(from_y(y)) == p);
        CHECK(parts_from_y(y) == p.length());
        CHECK(size_from_y(y) == p.size());
        CHECK(parts_from_z(z) == p.length());
        CHECK(size_from_z(z) == p.size());
    }
    CHECK_THROWS_AS(to_z(phi1(Partition{4, 2}, 3), 2), PreconditionError);
}

TEST_CASE("cycle normalization") {
    const auto [s0, z0] = cycle_normalize(zc(3, 4, {0, 1, 3}));
    CHECK(s0 == 0);
    CHECK(z0 == zc(3, 4, {0, 1, 3}));
    const auto [s1, z1] = cycle_normalize(zc(2, 3, {3, 0}));
    CHECK(s1 == 1);
    CHECK(z1 == zc(2, 3, {0, 3}));
    CHECK_THROWS_AS(cycle_normalize(zc(2, 4, {4, 0})), std::domain_error);
    CHECK_THROWS_AS(cycle_normalize(zc(2, 3, {1, 1})), std::domain_error);

    const auto all = enumerate_zprime(3, 4);
    CHECK(all.size() == 15);
    std::set<ZCoords> normal;
    for (const ZCoords& z : all) normal.insert(cycle_normalize(z).second);
    CHECK(normal.size() == 5);
    CHECK(std::count_if(all.begin(), all.end(), [](const ZCoords& z) { return in_Z(z); }) == 5);
}

TEST_CASE("enumeration of (a,b)-cores") {
    CHECK(enumerate_ab_cores(1, 5) == std::vector<Partition>{Partition{}});
    CHECK_THROWS_AS(enumerate_ab_cores(4, 6), std::domain_error);
    std::int64_t max_size = 0;
    for (const Partition& p : enumerate_ab_cores(3, 4)) max_size = std::max(max_size, p.size());
    CHECK(max_size == 5);
    for (int a = 1; a <= 7; ++a)
        for (int b = 1; b <= 7; ++b) {
            if (gcd64(a, b) != 1) continue;
            const auto cores = enumerate_ab_cores(a, b);
            CHECK(BigInt(cores.size()) == rational_catalan(a, b));
            CHECK(as_set(cores) == as_set(oracle::ab_cores_brute(a, b)));
            CHECK(enumerate_ab_cores(a, b) == cores);
        }
}

TEST_CASE("multi-core counts") {
    CHECK(count_multi_cores(5, 7, {}) == rational_catalan(5, 7));
    const int extra5[] = {5};
    CHECK(count_multi_cores(4, 3, {5}) == BigInt(oracle::ab_cores_brute(4, 3, extra5).size()));
    CHECK(count_multi_cores(4, 3, {5, 6}) == 4);
    CHECK(count_multi_cores_direct(4, 5, {6, 7}) == count_multi_cores_orbit(4, 5, {6, 7}));
    CHECK(as_set(enumerate_multi_cores(4, 5, {6})) == as_set(oracle::ab_cores_brute(4, 5, std::vector<int>{6})));
    CHECK_THROWS_AS(count_multi_cores(3, 6, {}), std::domain_error);
    CHECK_THROWS_AS(count_multi_cores(3, 4, {0}), std::domain_error);
    // a | c imposes nothing
    CHECK(multi_core_windows(3, 4, {6}).empty());
}

TEST_CASE("G and H") {
    CHECK(enumerate_G(1, 1).size() == 1);
    CHECK(enumerate_G(3, 3).size() == 4);
    CHECK(enumerate_G(0, 2).size() == 1);
    CHECK(enumerate_G(4, 2).size() == oracle::ab_cores_brute(4, 5, std::vector<int>{6}).size());
    CHECK(enumerate_H(1, 2).size() == 1);
    for (int r = 1; r <= 3; ++r) {
        const auto table = consecutive_stats_table(8, r);
        auto N = [&](int p) { return p <= 0 ? BigInt(1) : table[static_cast<std::size_t>(p - 1)].N; };
        for (int s = 1; s <= 7; ++s) {
            CHECK(BigInt(enumerate_G(s, r).size()) == N(s));
            CHECK(BigInt(enumerate_H(s, r).size()) == N(s - r));
            for (const ZCoords& z : enumerate_G(s, r)) CHECK(in_G(z, s, r));
            for (const ZCoords& z : enumerate_H(s, r)) {
                CHECK(in_H(z, s, r));
                int prefix = 0;
                for (int j = 0; j + 3 <= s; ++j) {
                    prefix += z.z[static_cast<std::size_t>(j)];
                    CHECK(prefix <= j + 1);
                }
            }
            // the window cap never removes anything from G
            std::size_t uncapped = 0;
            for (const YCoords& y : enumerate_y(s + 1, s)) {
                const ZCoords z = z_from_y(y);
                bool ok = true;
                for (int i = 1; i < r && ok; ++i)
                    for (int j = 0; j < z.a && ok; ++j) {
                        int sum = 0;
                        for (int q = 0; q < i; ++q) sum += z[j + q];
                        ok = sum <= i + 1;
                    }
                if (ok) ++uncapped;
            }
            CHECK(uncapped == enumerate_G(s, r).size());
        }
    }
    CHECK(in_Z(zc(4, 3, {0, 0, 0, 3})));
    CHECK_FALSE(in_G(zc(4, 3, {0, 0, 0, 3}), 3, 2));
}

TEST_CASE("decomposition identities") {
    const auto d1 = decompose_G(zc(2, 1, {0, 1}), 1, 1);
    CHECK(d1.k == 1);
    CHECK(d1.u.z == std::vector<int>{0});
    CHECK(d1.v.z.empty());
    CHECK_THROWS_AS(decompose_G(zc(2, 1, {1, 0}), 1, 1), std::domain_error);

    for (int r = 1; r <= 3; ++r)
        for (int s = 1; s <= 6; ++s) {
            std::map<int, std::size_t> class_size;
            std::set<std::pair<ZCoords, ZCoords>> seen;
            for (const ZCoords& z : enumerate_G(s, r)) {
                const GDecomposition d = decompose_G(z, s, r);
                const int k = d.k;
                CHECK(in_G(d.u, k - 1, r));
                CHECK(in_H(d.v, s - k + 1, r));
                CHECK(z.z[static_cast<std::size_t>(k)] == (k == s ? 1 : 0));
                seen.insert({d.u, d.v});
                ++class_size[k];

                const Partition lambda = partition_from_z(z);
                const Partition mu = partition_from_z(d.u);
                const Partition nu = partition_from_z(d.v);
                const std::int64_t sk = s - k;
                const std::int64_t len_l = lambda.length(), len_m = mu.length(), len_n = nu.length();
                CHECK(len_l == len_m + len_n + sk);
                const std::int64_t al = alpha_stat(lambda, s + 1), am = alpha_stat(mu, k), an = alpha_stat(nu, s - k);
                const std::int64_t gl = gamma_stat(lambda, s + 1), gm = gamma_stat(mu, k), gn = gamma_stat(nu, s - k);
                CHECK(al == am + an + len_n);
                CHECK(gl == sk * len_l + gm - gn + len_m - sk * (sk - 1) / 2);
                CHECK(lambda.size() == (s + 1) * al + gl - sk * len_l + mu.size() - k * am - gm + nu.size() - sk * an -
                                           gn - len_m * len_n + (sk + 1) * sk / 2);
            }
            for (const auto& [k, size] : class_size)
                CHECK(size == enumerate_G(k - 1, r).size() * enumerate_H(s - k + 1, r).size());
            CHECK(seen.size() == enumerate_G(s, r).size());
        }
}

TEST_CASE("consecutive statistics") {
    CHECK(consecutive_stats(4, 1).N == 14);
    CHECK(consecutive_stats(5, 2).M == 6);
    const ConsecutiveStats a = consecutive_stats(4, 1);
    CHECK(a == ConsecutiveStats{4, 1, 14, 6, 37, 10, 69, 70});
    CHECK(consecutive_stats(4, 2) == ConsecutiveStats{4, 2, 9, 4, 16, 1, 32, 25});
    CHECK(consecutive_stats(4, 3) == ConsecutiveStats{4, 3, 8, 3, 12, 0, 24, 18});
    for (int s = 1; s <= 8; ++s) CHECK(consecutive_stats(s, s).N == BigInt(1) << (s - 1));
    for (int r = 1; r <= 3; ++r)
        for (int s = 1; s <= 7; ++s) CHECK(consecutive_stats(s, r) == consecutive_stats_direct(s, r));
    // Catalan recurrence at r = 1
    for (int s = 1; s <= 10; ++s) CHECK(consecutive_stats(s, 1).N == rational_catalan(s, s + 1));
    CHECK(consecutive_stats(40, 2).N > 0);
    CHECK_THROWS_AS(consecutive_stats(0, 1), std::domain_error);
}

TEST_CASE("statistics need cores") {
    CHECK(alpha_stat(Partition{4, 2}, 3) == 1);
    CHECK(gamma_stat(Partition{4, 2}, 3) == 4);
    CHECK(alpha_stat(Partition{5}, 0) == 0);
    CHECK_THROWS_AS(alpha_stat(Partition{3}, 3), PreconditionError);
}
