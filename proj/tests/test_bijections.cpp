#include "coreparts/bijections.hpp"
#include "coreparts/oracle.hpp"

#include <doctest.h>

#include <set>

using namespace coreparts;

namespace {
ResidueCounts rc(int t, std::vector<int> v) { return ResidueCounts(t, std::move(v)); }
} // namespace

TEST_CASE("residue counts") {
    CHECK(phi1(Partition{}, 3) == rc(3, {0, 0, 0}));
    for (int t = 2; t <= 6; ++t)
        for (int j = 1; j < t; ++j) {
            std::vector<int> unit(static_cast<std::size_t>(t), 0);
            unit[static_cast<std::size_t>(j)] = 1;
            CHECK(phi1(Partition{j}, t) == rc(t, unit));
        }
    const ResidueCounts n = phi1(Partition{4, 2}, 3);
    CHECK(n == rc(3, {0, 0, 2}));
    CHECK(size_from_counts(n) == 6);
    CHECK_THROWS_AS(phi1(Partition{3}, 3), PreconditionError);
    CHECK_THROWS_AS(rc(3, {0, 1}), std::domain_error);
    CHECK_THROWS_AS(rc(2, {0, -1}), std::domain_error);
    CHECK(n[5] == 2);
    CHECK(n[-1] == 2);
}

TEST_CASE("inverse of residue counts") {
    CHECK(phi1_inv(rc(3, {0, 0, 0})) == Partition{});
    CHECK(phi1_inv(rc(3, {0, 0, 2})) == Partition{4, 2});
    CHECK(phi1_inv(rc(3, {0, 1, 1})) == Partition{1, 1});
    CHECK(phi1_inv(phi1(Partition{4, 2}, 3)) == Partition{4, 2});
    CHECK_THROWS_AS(phi1_inv(rc(3, {1, 0, 0})), std::domain_error);
    for (int t = 2; t <= 5; ++t)
        for (const Partition& p : oracle::tcores_up_to(18, t)) {
            CHECK(phi1_inv(phi1(p, t)) == p);
            CHECK(size_from_counts(phi1(p, t)) == p.size());
        }
}

TEST_CASE("children of the tree") {
    const auto root = children(Partition{}, 3);
    REQUIRE(root.size() == 2);
    CHECK(phi1(root[0], 3) == rc(3, {0, 1, 0}));
    CHECK(phi1(root[1], 3) == rc(3, {0, 1, 1}));

    const auto kids = children(Partition{1}, 3);
    CHECK(kids == std::vector<Partition>{Partition{2}, Partition{2, 1, 1}});

    // every n_j > 0 for j ≥ 1 leaves only φ_{t−1}
    const Partition full = phi1_inv(rc(4, {0, 1, 2, 1}));
    const auto single = children(full, 4);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == phi_j(full, 3));

    for (int t = 2; t <= 5; ++t)
        for (const Partition& p : oracle::tcores_up_to(12, t)) {
            const auto cs = children(p, t);
            const auto coords = children_counts(phi1(p, t));
            REQUIRE(cs.size() == coords.size());
            CHECK(static_cast<int>(cs.size()) == phi1(p, t).zero_count() - (p.empty() ? 1 : 0));
            for (std::size_t i = 0; i < cs.size(); ++i) {
                CHECK(is_t_core(cs[i], t));
                CHECK(gen(cs[i]) == p);
                CHECK(phi1(cs[i], t) == coords[i].second);
                CHECK(psi_coordinates(phi1(p, t), coords[i].first) == coords[i].second);
            }
        }
}

TEST_CASE("tree walk reaches every core once") {
    for (int t = 2; t <= 6; ++t) {
        std::multiset<Partition> walked;
        for_each_tcore_up_to(t, 25, [&](const ResidueCounts& n, std::int64_t size) {
            const Partition p = phi1_inv(n);
            CHECK(p.size() == size);
            walked.insert(p);
        });
        const auto direct = oracle::tcores_up_to(25, t);
        CHECK(walked == std::multiset<Partition>(direct.begin(), direct.end()));
    }
    CHECK_THROWS_AS(for_each_tcore_up_to(1, 3, [](const ResidueCounts&, std::int64_t) {}), std::domain_error);
}

TEST_CASE("quotient decomposition") {
    const Partition core{4, 2};
    const auto q = quotient_decompose(core, 3);
    CHECK(q.core == core);
    for (const Partition& part : q.quotient) CHECK(part.empty());

    const auto two = quotient_decompose(Partition{2}, 2);
    CHECK(two.core == Partition{});
    int ones = 0;
    for (const Partition& part : two.quotient) ones += part == Partition{1} ? 1 : part.empty() ? 0 : 100;
    CHECK(ones == 1);
    CHECK(quotient_compose(two.quotient, two.core, 2) == Partition{2});

    const std::vector<Partition> empties(3);
    CHECK(quotient_compose(empties, Partition{}, 3) == Partition{});
    CHECK_THROWS_AS(quotient_compose(empties, Partition{3}, 3), PreconditionError);
    CHECK_THROWS_AS(quotient_compose(std::vector<Partition>(2), Partition{}, 3), std::domain_error);

    // arbitrary quotients compose back
    const std::vector<Partition> tuple{Partition{2, 1}, Partition{}, Partition{3}};
    const Partition built = quotient_compose(tuple, Partition{1, 1}, 3);
    const auto back = quotient_decompose(built, 3);
    CHECK(back.quotient == tuple);
    CHECK(back.core == Partition{1, 1});
    CHECK(built.size() == 2 + 3 * 6);
}

TEST_CASE("charge coordinates") {
    const ChargeCoordinates zero = nvec_to_charges(rc(4, {0, 0, 0, 0}));
    CHECK(zero.charges == std::vector<std::int64_t>{0, 0, 0, 0});
    CHECK(charges_to_nvec(zero) == rc(4, {0, 0, 0, 0}));
    CHECK(is_self_conjugate(zero));

    const ChargeCoordinates c = nvec_to_charges(rc(2, {0, 2}));
    CHECK(c.charges == std::vector<std::int64_t>{-1, 1});
    CHECK(size_from_charges(c) == 3);
    CHECK(charges_to_nvec(c) == rc(2, {0, 2}));
    CHECK(is_self_conjugate(c));
    CHECK_FALSE(is_self_conjugate(nvec_to_charges(phi1(Partition{2}, 3))));
    CHECK_THROWS_AS(ChargeCoordinates(2, {1, 1}), std::domain_error);
}
