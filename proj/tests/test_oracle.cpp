#include "coreparts/bijections.hpp"
#include "coreparts/oracle.hpp"
#include "coreparts/qseries.hpp"
#include "coreparts/simultaneous.hpp"

#include <doctest.h>

#include <set>

using namespace coreparts;

TEST_CASE("partition enumeration") {
    CHECK(oracle::partitions_of(0) == std::vector<Partition>{Partition{}});
    CHECK(oracle::partitions_of(4).size() == 5);
    CHECK(oracle::partitions_of(10).size() == 42);
    CHECK(oracle::partitions_of(3) == std::vector<Partition>{Partition{3}, Partition{2, 1}, Partition{1, 1, 1}});
    for (int n = 0; n <= 40; ++n) CHECK(oracle::partition_count(n) == pochhammer(1, 1, 1, 40).inverse()[n]);
    CHECK(oracle::partition_count(40) == 37338);
    for (int n = 0; n <= 25; ++n) CHECK(BigInt(oracle::partitions_of(n).size()) == oracle::partition_count(n));
    CHECK_THROWS_AS(oracle::partitions_of(-1), std::domain_error);
}

TEST_CASE("core enumeration") {
    CHECK(oracle::tcores_of(0, 1) == std::vector<Partition>{Partition{}});
    CHECK(oracle::tcores_of(4, 1).empty());
    CHECK(BigInt(oracle::tcores_of(6, 3).size()) == gen_tcores_product(3, 6)[6]);
    for (int t = 2; t <= 6; ++t) {
        const auto filtered = oracle::tcores_up_to(t == 4 ? 15 : 25, t);
        std::set<Partition> walked;
        for_each_tcore_up_to(t, t == 4 ? 15 : 25, [&](const ResidueCounts& n, std::int64_t) { walked.insert(phi1_inv(n)); });
        CHECK(std::set<Partition>(filtered.begin(), filtered.end()) == walked);
        CHECK(walked.size() == filtered.size());
    }
}

TEST_CASE("cores with a fixed number of parts") {
    CHECK(oracle::tcores_with_parts(3, 0) == std::vector<Partition>{Partition{}});
    CHECK(oracle::tcores_with_parts(1, 2).empty());
    CHECK(oracle::tcores_with_parts(3, 1) == std::vector<Partition>{Partition{2}, Partition{1}});
    for (int t = 2; t <= 4; ++t)
        for (int l = 0; l <= 3; ++l) {
            std::set<Partition> direct;
            for (const Partition& p : oracle::tcores_up_to(l * l * (t - 1), t))
                if (p.length() == l) direct.insert(p);
            const auto listed = oracle::tcores_with_parts(t, l);
            CHECK(std::set<Partition>(listed.begin(), listed.end()) == direct);
        }
}

TEST_CASE("(a,b)-cores from semigroup gaps") {
    CHECK(oracle::ab_cores_brute(2, 3).size() == 2);
    const auto cores = oracle::ab_cores_brute(3, 4);
    CHECK(cores.size() == 5);
    CHECK(oracle::sum_statistic(cores, oracle::Stat::MaxSize) == 5);
    const int six[] = {6};
    std::set<Partition> filtered;
    for (const Partition& p : enumerate_ab_cores(4, 5))
        if (is_t_core(p, 6)) filtered.insert(p);
    const auto brute = oracle::ab_cores_brute(4, 5, six);
    CHECK(std::set<Partition>(brute.begin(), brute.end()) == filtered);
    CHECK_THROWS_AS(oracle::ab_cores_brute(4, 6), std::domain_error);
    CHECK(oracle::ab_cores_brute(1, 9) == std::vector<Partition>{Partition{}});
}

TEST_CASE("statistic folds") {
    const std::vector<Partition> none;
    CHECK(oracle::sum_statistic(none, oracle::Stat::Count) == 0);
    CHECK(oracle::sum_statistic(oracle::ab_cores_brute(4, 5), oracle::Stat::Parts) == 37);
    const std::vector<Partition> list{Partition{4, 2}, Partition{1}};
    CHECK(oracle::sum_statistic(list, oracle::Stat::Size) == 7);
    CHECK(oracle::sum_statistic(list, oracle::Stat::MaxParts) == 2);
    CHECK(oracle::sum_statistic(list, oracle::Stat::Alpha, 3) == 1);
    CHECK(oracle::sum_statistic(list, oracle::Stat::Gamma, 3) == 5);
    CHECK_THROWS_AS(oracle::sum_statistic(list, oracle::Stat::Alpha, 0), std::domain_error);
}

TEST_CASE("distinct partitions and bounded sequences") {
    CHECK(oracle::distinct_with_largest(5, 0) == std::vector<Partition>{Partition{}});
    CHECK(oracle::distinct_with_largest(3, 2) == std::vector<Partition>{Partition{2}});
    CHECK(oracle::bounded_sequences(std::vector<int>{}) == 1);
    CHECK(oracle::bounded_sequences(std::vector<int>{2, 1}) == 5);
}
