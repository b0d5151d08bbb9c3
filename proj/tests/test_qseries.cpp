#include "coreparts/oracle.hpp"
#include "coreparts/qseries.hpp"

#include <doctest.h>

#include <random>

using namespace coreparts;

namespace {
TruncatedSeries series(std::vector<int> c) {
    std::vector<BigInt> big(c.begin(), c.end());
    return TruncatedSeries(static_cast<int>(c.size()) - 1, big);
}
} // namespace

TEST_CASE("pochhammer products") {
    CHECK(pochhammer(-1, 1, 2, 4) == series({1, 1, 0, 1, 1}));
    CHECK(pochhammer(1, 1, 1, 0) == series({1}));
    const TruncatedSeries euler = pochhammer(1, 1, 1, 10).inverse();
    CHECK(euler[5] == 7);
    for (int n = 0; n <= 10; ++n) CHECK(euler[n] == oracle::partition_count(n));
    CHECK_THROWS_AS(pochhammer(1, 0, 1, 5), std::domain_error);
    CHECK_THROWS_AS(pochhammer(2, 1, 1, 5), std::domain_error);
}

TEST_CASE("arithmetic") {
    const TruncatedSeries a = series({1, 2, 0, -3});
    const TruncatedSeries b = series({-1, 0, 5, 1});
    CHECK(a + b == series({0, 2, 5, -2}));
    CHECK(a - b == series({2, 2, -5, -4}));
    CHECK(a * b == series({-1, -2, 5, 14}));
    CHECK((a * b) / b == a);
    CHECK(a.pow(0) == TruncatedSeries::one(3));
    CHECK(a.pow(3) == a * a * a);
    CHECK_THROWS_AS(series({2, 1}).inverse(), std::domain_error);
    CHECK_THROWS_AS(series({1, 1}) + series({1}), std::domain_error);
    CHECK(TruncatedSeries::monomial(3, 5) == TruncatedSeries(3));

    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::bernoulli_distribution sparse(0.3);
    for (int trial = 0; trial < 50; ++trial) {
        TruncatedSeries x(20), y(20);
        for (int n = 0; n <= 20; ++n) {
            if (sparse(rng)) x[n] = coeff(rng);
            if (sparse(rng)) y[n] = coeff(rng);
        }
        y[0] = trial % 2 == 0 ? 1 : -1;
        CHECK((x * y) / y == x);
    }
}

TEST_CASE("text format") {
    const TruncatedSeries s = series({1, 0, -4});
    CHECK(s.to_text() == "0 1\n1 0\n2 -4\n");
    CHECK(TruncatedSeries::from_text(s.to_text()) == s);
    TruncatedSeries big(1);
    big[1] = BigInt("123456789012345678901234567890");
    CHECK(TruncatedSeries::from_text(big.to_text()) == big);
    CHECK_THROWS_AS(TruncatedSeries::from_text("1 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries::from_text("0 x\n"), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries::from_text(""), std::invalid_argument);
}

TEST_CASE("core generating functions") {
    CHECK(gen_tcores_product(1, 8) == TruncatedSeries::one(8));
    const TruncatedSeries staircase = series({1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1});
    CHECK(gen_tcores_product(2, 10) == staircase);
    CHECK(gen_tcores_nsum(2, 10) == staircase);
    CHECK(gen_tcores_csum(2, 10) == staircase);
    CHECK(gen_tcores_product(3, 6)[6] == BigInt(oracle::tcores_of(6, 3).size()));
    CHECK(gen_tcores_nsum(3, 30) == gen_tcores_product(3, 30));
    CHECK(gen_tcores_csum(4, 20) == gen_tcores_product(4, 20));
    for (int t = 2; t <= 6; ++t) {
        CHECK(gen_tcores_nsum(t, 0)[0] == 1);
        CHECK(gen_tcores_csum(t, 0)[0] == 1);
    }
    CHECK_THROWS_AS(gen_tcores_nsum(1, 5), std::domain_error);
    CHECK_THROWS_AS(gen_tcores_csum(1, 5), std::domain_error);
}

TEST_CASE("self-conjugate cores") {
    CHECK(gen_self_conjugate(2, 10) == series({1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1}));
    for (int t = 2; t <= 6; ++t) {
        const TruncatedSeries s = gen_self_conjugate(t, 20);
        CHECK(s[0] == 1);
        for (int n = 0; n <= 20; ++n) {
            long long count = 0;
            for (const Partition& p : oracle::tcores_of(n, t))
                if (oracle::conjugate_of(p) == p) ++count;
            CHECK(s[n] == count);
        }
    }
}

TEST_CASE("triple product") {
    CHECK(jacobi_triple_check(1, 0, 20));
    CHECK(jacobi_triple_check(-1, 0, 20));
    CHECK(jacobi_triple_check(1, 0, 0));
    CHECK(jacobi_triple_check(1, 1, 30));
    CHECK(jacobi_triple_check(-1, 1, 30));
    CHECK(jacobi_triple_check(1, -1, 30));
    CHECK(jacobi_triple_check(-1, -1, 30));
    CHECK_THROWS_AS(jacobi_triple_check(1, 2, 10), std::domain_error);
    CHECK_THROWS_AS(jacobi_triple_check(1, -2, 10), std::domain_error);
    CHECK_THROWS_AS(jacobi_triple_check(0, 0, 10), std::domain_error);
}
