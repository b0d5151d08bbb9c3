#include "coreparts/verify.hpp"

#include "coreparts/bijections.hpp"
#include "coreparts/counting.hpp"
#include "coreparts/distinct.hpp"
#include "coreparts/oracle.hpp"
#include "coreparts/qseries.hpp"
#include "coreparts/simultaneous.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coreparts {

namespace {

class Checker {
public:
    explicit Checker(SuiteResult& result) : result_(result) {}

    template <class Describe>
    void check(bool ok, Describe&& describe) {
        ++result_.checks;
        if (ok) return;
        result_.passed = false;
        if (result_.failures.size() < 10) result_.failures.push_back(describe());
    }

    template <class A, class B>
    void equal(const A& got, const B& want, const std::string& what) {
        check(got == want, [&] {
            std::ostringstream os;
            os << what << ": got " << got << ", expected " << want;
            return os.str();
        });
    }

private:
    SuiteResult& result_;
};

struct Context {
    Envelope envelope;
    int jobs;
    bool full() const { return envelope == Envelope::Full; }
    int pick(int small, int full_value) const { return full() ? full_value : small; }
};

std::string describe(int t, int n) {
    return "t=" + std::to_string(t) + " n=" + std::to_string(n);
}

std::set<Partition> as_set(const std::vector<Partition>& v) { return {v.begin(), v.end()}; }

std::vector<std::pair<int, int>> coprime_pairs(int limit) {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= limit; ++a)
        for (int b = 1; b <= limit; ++b)
            if (gcd64(a, b) == 1) out.emplace_back(a, b);
    return out;
}

void suite_eq1(Checker& c, const Context& ctx) {
    const int max_n = ctx.pick(12, 25);
    for (int t = 2; t <= 6; ++t) {
        const TruncatedSeries series = gen_tcores_product(t, max_n);
        for (int n = 0; n <= max_n; ++n)
            c.equal(series[n], BigInt(oracle::tcores_of(n, t).size()), "product coefficient " + describe(t, n));
    }
}

void suite_three_route(Checker& c, const Context& ctx) {
    const int order = ctx.pick(15, 40);
    for (int t = 2; t <= 6; ++t) {
        const TruncatedSeries product = gen_tcores_product(t, order);
        c.check(product == gen_tcores_nsum(t, order), [&] { return "tree sum differs at t=" + std::to_string(t); });
        c.check(product == gen_tcores_csum(t, order), [&] { return "charge sum differs at t=" + std::to_string(t); });
    }
    for (int sign : {1, -1})
        for (int k : {-1, 0, 1})
            c.check(jacobi_triple_check(sign, k, order), [&] {
                return "triple product fails at z=" + std::to_string(sign) + "q^" + std::to_string(k);
            });
}

void suite_self_conjugate(Checker& c, const Context& ctx) {
    const int max_n = ctx.pick(12, 25);
    for (int t = 2; t <= 6; ++t) {
        const TruncatedSeries series = gen_self_conjugate(t, max_n);
        for (int n = 0; n <= max_n; ++n) {
            long long count = 0;
            for (const Partition& p : oracle::tcores_of(n, t))
                if (oracle::conjugate_of(p) == p) ++count;
            c.equal(series[n], BigInt(count), "self-conjugate coefficient " + describe(t, n));
        }
    }
}

void suite_counting(Checker& c, const Context& ctx) {
    const int t_max = ctx.pick(4, 6);
    const int l_max = ctx.pick(4, 6);
    const int x_max = ctx.pick(5, 8);
    const int d_max = ctx.pick(2, 3);

    std::map<std::pair<int, int>, std::vector<Partition>> cache;
    auto with_parts = [&](int t, int l) -> const std::vector<Partition>& {
        auto it = cache.find({t, l});
        if (it == cache.end()) it = cache.emplace(std::make_pair(t, l), oracle::tcores_with_parts(t, l)).first;
        return it->second;
    };

    for (int t = 2; t <= t_max; ++t) {
        const std::string tag = "t=" + std::to_string(t);
        long long at_most = 0;
        for (int l = 0; l <= l_max; ++l) {
            const auto& cores = with_parts(t, l);
            const std::string tl = tag + " l=" + std::to_string(l);
            at_most += static_cast<long long>(cores.size());
            c.equal(count_parts_exact(t, l), BigInt(cores.size()), "exact parts " + tl);
            c.equal(count_parts_at_most(t, l), BigInt(at_most), "at most parts " + tl);

            for (int j = 0; j <= t; ++j) {
                long long n = 0;
                for (const Partition& p : with_parts(t, l + j))
                    if (p.multiplicity(1) == j) ++n;
                c.equal(count_parts_split(t, l, j), BigInt(n), "split " + tl + " j=" + std::to_string(j));
            }
            if (l >= 1) {
                for (int i = 1; i <= t; ++i) {
                    long long n = 0;
                    for (const Partition& p : cores)
                        if (p.smallest() == i) ++n;
                    c.equal(count_smallest_part(t, l, i), BigInt(n), "smallest " + tl + " i=" + std::to_string(i));
                }
            }
            for (int x = 0; x <= x_max; ++x) {
                long long n = 0;
                for (const Partition& p : cores)
                    if (p.largest() <= x) ++n;
                c.equal(count_parts_and_bound(t, l, x), BigInt(n), "parts and bound " + tl + " x=" + std::to_string(x));
            }
            for (int d = 1; d <= d_max; ++d) {
                for (int k = 0; k < d; ++k) {
                    const auto targets = oracle::tcores_with_parts(d * t - k, l, d);
                    c.equal(count_divisible_parts(t, d, k, l), BigInt(targets.size()),
                            "divisible " + tl + " d=" + std::to_string(d) + " k=" + std::to_string(k));
                }
            }
        }
        // largest-part families, via conjugates of the l = x slices
        for (int x = 0; x <= x_max; ++x) {
            std::vector<Partition> largest;
            for (const Partition& p : with_parts(t, x)) largest.push_back(oracle::conjugate_of(p));
            const std::string tx = tag + " x=" + std::to_string(x);
            c.equal(count_largest_part(t, x), BigInt(largest.size()), "largest " + tx);
            if (x == 0) continue;
            for (int y = 0; y <= x + 1; ++y) {
                long long n = 0;
                for (const Partition& p : largest)
                    if (p.part(1) == y) ++n;
                c.equal(count_largest_two(t, x, y), BigInt(n), "largest two " + tx + " y=" + std::to_string(y));
            }
            for (int i = 1; i <= t; ++i) {
                long long n = 0;
                for (const Partition& p : largest)
                    if (p.multiplicity(x) == i) ++n;
                c.equal(count_largest_multiplicity(t, x, i), BigInt(n),
                        "largest multiplicity " + tx + " i=" + std::to_string(i));
            }
        }
    }
}

void suite_psi(Checker& c, const Context& ctx) {
    const int l_max = ctx.pick(3, 5);
    const int triples[][3] = {{3, 2, 0}, {3, 2, 1}, {2, 3, 1}};
    for (const auto& tr : triples) {
        const int t = tr[0], d = tr[1], k = tr[2];
        const int target = d * t - k;
        for (int l = 0; l <= l_max; ++l) {
            const std::string tag = "(t,d,k)=(" + std::to_string(t) + "," + std::to_string(d) + "," +
                                    std::to_string(k) + ") l=" + std::to_string(l);
            std::vector<Partition> images;
            for (const Partition& p : oracle::tcores_with_parts(t, l)) images.push_back(psi_map(p, t, d, k));
            bool parts_ok = std::all_of(images.begin(), images.end(), [&](const Partition& p) { return p.length() == l; });
            c.check(parts_ok, [&] { return "part count not preserved " + tag; });
            const std::set<Partition> image_set = as_set(images);
            c.check(image_set.size() == images.size(), [&] { return "not injective " + tag; });
            c.check(image_set == as_set(oracle::tcores_with_parts(target, l, d)), [&] { return "image mismatch " + tag; });
        }
    }
}

void suite_anderson(Checker& c, const Context& ctx) {
    for (auto [a, b] : coprime_pairs(ctx.pick(5, 8))) {
        const std::string tag = "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")";
        const auto cores = enumerate_ab_cores(a, b);
        const BigInt cat = rational_catalan(a, b);
        c.equal(BigInt(cores.size()), cat, "Y-enumeration count " + tag);
        const auto brute = oracle::ab_cores_brute(a, b);
        c.equal(BigInt(brute.size()), cat, "beta-set oracle count " + tag);
        c.check(as_set(cores) == as_set(brute), [&] { return "core sets differ " + tag; });
        bool all_cores = std::all_of(cores.begin(), cores.end(), [&](const Partition& p) {
            return oracle::is_core_by_hooks(p, a) && oracle::is_core_by_hooks(p, b);
        });
        c.check(all_cores, [&] { return "listed partition is not an (a,b)-core " + tag; });
        std::vector<int> staircase;
        for (int j = a - 1; j >= 1; --j) staircase.push_back(static_cast<int>(static_cast<long long>(j) * b / a));
        c.equal(kreweras_count(staircase), cat, "staircase determinant " + tag);
        c.equal(oracle::bounded_sequences(staircase), cat, "staircase sequences " + tag);
    }
}

void suite_extremes(Checker& c, const Context& ctx) {
    for (auto [a, b] : coprime_pairs(ctx.pick(5, 8))) {
        const std::string tag = "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")";
        const auto cores = enumerate_ab_cores(a, b);
        const BigInt want_parts = BigInt(a - 1) * (b - 1) / 2;
        const BigInt want_size = BigInt(a * a - 1) * (b * b - 1) / 24;
        c.equal(oracle::sum_statistic(cores, oracle::Stat::MaxParts), want_parts, "max parts " + tag);
        c.equal(oracle::sum_statistic(cores, oracle::Stat::MaxSize), want_size, "max size " + tag);
        const auto brute = oracle::ab_cores_brute(a, b);
        c.equal(oracle::sum_statistic(brute, oracle::Stat::MaxParts), want_parts, "oracle max parts " + tag);
        c.equal(oracle::sum_statistic(brute, oracle::Stat::MaxSize), want_size, "oracle max size " + tag);
        for (const YCoords& y : enumerate_y(a, b)) {
            const Partition p = phi1_inv(from_y(y));
            const ZCoords z = z_from_y(y);
            c.equal(parts_from_y(y), p.length(), "parts from y " + tag);
            c.equal(size_from_y(y), p.size(), "size from y " + tag);
            c.equal(parts_from_z(z), p.length(), "parts from z " + tag);
            c.equal(size_from_z(z), p.size(), "size from z " + tag);
        }
    }
}

void suite_cycle(Checker& c, const Context& ctx) {
    for (auto [a, b] : coprime_pairs(ctx.pick(5, 7))) {
        const std::string tag = "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")";
        const auto all = enumerate_zprime(a, b);
        c.equal(BigInt(all.size()), binomial(a + b - 1, b), "|Z'| " + tag);
        std::map<std::vector<int>, std::vector<ZCoords>> orbits;
        for (const ZCoords& z : all) {
            std::vector<int> least = z.z;
            for (int s = 1; s < a; ++s) {
                std::vector<int> rotated(z.z.size());
                for (int j = 0; j < a; ++j) rotated[static_cast<std::size_t>(j)] = z[j - s];
                least = std::min(least, rotated);
            }
            orbits[least].push_back(z);
        }
        for (const auto& [key, members] : orbits) {
            c.equal(static_cast<long long>(members.size()), static_cast<long long>(a), "orbit size " + tag);
            const auto in_z = std::count_if(members.begin(), members.end(), [](const ZCoords& z) { return in_Z(z); });
            c.equal(static_cast<long long>(in_z), 1LL, "Z elements per orbit " + tag);
            const ZCoords normal = cycle_normalize(members.front()).second;
            c.check(in_Z(normal) && std::find(members.begin(), members.end(), normal) != members.end(),
                    [&] { return "cycle_normalize left the orbit " + tag; });
        }
        const auto z_count = std::count_if(all.begin(), all.end(), [](const ZCoords& z) { return in_Z(z); });
        c.equal(BigInt(z_count) * a, binomial(a + b - 1, b), "|Z| * a " + tag);
        c.equal(BigInt(enumerate_y(a, b).size()), BigInt(z_count), "|Y| " + tag);
    }
}

void suite_multi(Checker& c, const Context& ctx) {
    const int ab_max = ctx.pick(4, 6);
    const int c_max = ctx.pick(8, 12);
    std::vector<std::vector<int>> extras{{}};
    for (int c1 = 1; c1 <= c_max; ++c1) {
        extras.push_back({c1});
        for (int c2 = c1 + 1; c2 <= c_max; ++c2) extras.push_back({c1, c2});
    }
    for (auto [a, b] : coprime_pairs(ab_max)) {
        for (const auto& extra : extras) {
            std::ostringstream tag;
            tag << "(a,b)=(" << a << "," << b << ") extra=";
            for (int e : extra) tag << e << ";";
            const auto brute = oracle::ab_cores_brute(a, b, extra);
            const BigInt direct = count_multi_cores_direct(a, b, extra);
            const BigInt orbit = count_multi_cores_orbit(a, b, extra);
            c.equal(direct, BigInt(brute.size()), "Z-filter count " + tag.str());
            c.equal(orbit, BigInt(brute.size()), "orbit count " + tag.str());
            c.check(as_set(enumerate_multi_cores(a, b, extra)) == as_set(brute),
                    [&] { return "multi-core sets differ " + tag.str(); });
        }
    }
}

void suite_consecutive(Checker& c, const Context& ctx) {
    const int s_max = ctx.pick(5, 8);
    for (int r = 1; r <= 3; ++r) {
        const auto table = consecutive_stats_table(s_max, r);
        for (int s = 1; s <= s_max; ++s) {
            const std::string tag = "s=" + std::to_string(s) + " r=" + std::to_string(r);
            const ConsecutiveStats& rec = table[static_cast<std::size_t>(s - 1)];
            std::vector<int> extra;
            for (int e = s + 2; e <= s + r; ++e) extra.push_back(e);
            const auto brute = oracle::ab_cores_brute(s, s + 1, extra);
            using oracle::Stat;
            c.equal(rec.N, oracle::sum_statistic(brute, Stat::Count), "N " + tag);
            c.equal(rec.M, oracle::sum_statistic(brute, Stat::MaxParts), "M " + tag);
            c.equal(rec.f, oracle::sum_statistic(brute, Stat::Parts), "f " + tag);
            c.equal(rec.g, oracle::sum_statistic(brute, Stat::Alpha, s + 1), "g " + tag);
            c.equal(rec.h, oracle::sum_statistic(brute, Stat::Gamma, s + 1), "h " + tag);
            c.equal(rec.T, oracle::sum_statistic(brute, Stat::Size), "T " + tag);
            c.check(rec == consecutive_stats_direct(s, r), [&] { return "enumerated statistics differ " + tag; });
            c.equal(detail::printed_f(table, s, r), rec.f, "closed f " + tag);
            c.equal(detail::printed_g(table, s, r), rec.g, "closed g " + tag);
            c.equal(BigInt(enumerate_G(s, r).size()), rec.N, "|G| " + tag);
        }
    }
    for (int s = 1; s <= s_max; ++s) {
        for (int r = s; r <= s + 1; ++r) {
            const std::string tag = "s=" + std::to_string(s) + " r=" + std::to_string(r);
            const BigInt power = BigInt(1) << (s - 1);
            c.equal(consecutive_stats(s, r).N, power, "N = 2^(s-1) " + tag);
            std::vector<int> extra;
            for (int e = s + 2; e <= s + r; ++e) extra.push_back(e);
            c.equal(BigInt(oracle::ab_cores_brute(s, s + 1, extra).size()), power, "oracle 2^(s-1) " + tag);
        }
    }
}

void suite_distinct_table(Checker& c, const Context& ctx) {
    static const int expected[9][11] = {
        {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
        {1, 1, 2, 2, 2, 3, 3, 3, 4, 4, 4},    {1, 1, 2, 3, 3, 3, 4, 5, 5, 5, 6},
        {1, 1, 2, 4, 5, 5, 6, 8, 10, 11, 12}, {1, 1, 2, 4, 7, 8, 8, 10, 13, 17, 20},
        {1, 1, 2, 4, 8, 12, 13, 14, 18, 24, 31}, {1, 1, 2, 4, 8, 15, 20, 21, 24, 31, 41},
        {1, 1, 2, 4, 8, 16, 27, 33, 35, 42, 55},
    };
    const auto table = distinct_table(10, 10, ctx.jobs);
    for (int t = 2; t <= 10; ++t) {
        for (int x = 0; x <= 10; ++x) {
            const std::string tag = "t=" + std::to_string(t) + " x=" + std::to_string(x);
            const BigInt& cell = table[static_cast<std::size_t>(t - 2)][static_cast<std::size_t>(x)];
            c.equal(cell, BigInt(expected[t - 2][x]), "table " + tag);
            const bool proven = x <= 1 || t <= 2 || x <= t || (t % 2 == 1 && x == t + 1);
            if (proven) c.equal(count_distinct_largest(t, x), cell, "recurrence " + tag);
            if (x >= 1 && 2 * x <= t) c.equal(cell, BigInt(1) << (x - 1), "power of two " + tag);
        }
    }
    c.equal(count_distinct_largest(7, 4), BigInt(7), "D(7;4)");
    c.equal(count_distinct_largest(10, 6), BigInt(27), "D(10;6)");
    c.equal(count_distinct_largest(4, 8), BigInt(4), "D(4;8)");
}

std::vector<Partition> distinct_only(std::vector<Partition> v) {
    std::erase_if(v, [](const Partition& p) {
        for (std::size_t i = 1; i < p.vec().size(); ++i)
            if (p.vec()[i] == p.vec()[i - 1]) return true;
        return false;
    });
    return v;
}

void suite_fibonacci_power(Checker& c, const Context& ctx) {
    BigInt f_prev = 1, f_cur = 1;  // F₁, F₂
    for (int s = 1; s <= 10; ++s) {
        const std::string tag = "s=" + std::to_string(s);
        const auto brute = distinct_only(oracle::ab_cores_brute(s, s + 1));
        c.equal(BigInt(brute.size()), f_cur, "oracle |D(s,s+1)| = F(s+1) " + tag);
        c.equal(count_distinct_consecutive(s), f_cur, "binomial sum " + tag);
        c.check(as_set(enumerate_distinct_consecutive(s)) == as_set(brute), [&] { return "D(s,s+1) sets differ " + tag; });
        const BigInt next = f_prev + f_cur;
        f_prev = f_cur;
        f_cur = next;
    }
    for (int s = 0; s <= ctx.pick(2, 4); ++s) {
        const auto brute = distinct_only(oracle::ab_cores_brute(2 * s + 1, 2 * s + 3));
        c.equal(BigInt(brute.size()), count_distinct_odd_pair(s), "|D(2s+1,2s+3)| s=" + std::to_string(s));
    }
    for (int s = 1; s <= 6; ++s) {
        const auto base = as_set(distinct_only(oracle::ab_cores_brute(s, s + 1)));
        for (int t = s + 2; t <= s + 6; ++t) {
            const std::string tag = "s=" + std::to_string(s) + " t=" + std::to_string(t);
            bool stable = false;
            try {
                stable = distinct_triple_stability(s, t);
            } catch (const std::logic_error&) {
            }
            c.check(stable, [&] { return "stability check failed " + tag; });
            const int extra[] = {t};
            c.check(as_set(distinct_only(oracle::ab_cores_brute(s, s + 1, extra))) == base,
                    [&] { return "oracle D(s,s+1,t) differs " + tag; });
        }
    }
}

void suite_round_trips(Checker& c, const Context& ctx) {
    const int max_size = ctx.pick(12, 25);
    for (int t = 2; t <= 6; ++t) {
        for (const Partition& p : oracle::tcores_up_to(max_size, t)) {
            const std::string tag = "t=" + std::to_string(t) + " " + p.to_string();
            const ResidueCounts n = phi1(p, t);
            c.check(phi1_inv(n) == p, [&] { return "phi1 round trip " + tag; });
            c.equal(size_from_counts(n), p.size(), "size from counts " + tag);
            const ChargeCoordinates ch = nvec_to_charges(n);
            c.check(charges_to_nvec(ch) == n, [&] { return "charge round trip " + tag; });
            c.equal(size_from_charges(ch), p.size(), "size from charges " + tag);
            c.check(is_self_conjugate(ch) == (oracle::conjugate_of(p) == p), [&] { return "self-conjugacy " + tag; });
        }
    }
    const int max_n = ctx.pick(8, 12);
    for (int t = 2; t <= 5; ++t) {
        for (int n = 0; n <= max_n; ++n) {
            for (const Partition& p : oracle::partitions_of(n)) {
                const std::string tag = "t=" + std::to_string(t) + " " + p.to_string();
                const QuotientDecomposition q = quotient_decompose(p, t);
                c.check(quotient_compose(q.quotient, q.core, t) == p, [&] { return "quotient round trip " + tag; });
                std::int64_t weight = q.core.size();
                for (const Partition& part : q.quotient) weight += t * part.size();
                c.equal(weight, p.size(), "quotient weight " + tag);
                c.check(q.core == t_core_of(p, t), [&] { return "abacus core " + tag; });
            }
        }
    }
    for (auto [a, b] : coprime_pairs(ctx.pick(5, 8))) {
        for (const Partition& p : oracle::ab_cores_brute(a, b)) {
            const std::string tag = "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ") " + p.to_string();
            const ResidueCounts n = phi1(p, a);
            const ZCoords z = to_z(n, b);
            const YCoords y = to_y(z);
            c.check(in_Z(z), [&] { return "z outside Z " + tag; });
            c.check(z_from_y(y) == z, [&] { return "y to z " + tag; });
            c.check(from_y(y) == n, [&] { return "n to z to y to n " + tag; });
        }
    }
}

using SuiteFn = void (*)(Checker&, const Context&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites{
        {"eq1-vs-oracle", suite_eq1},
        {"three-route", suite_three_route},
        {"self-conjugate", suite_self_conjugate},
        {"counting-theorems", suite_counting},
        {"psi-bijection", suite_psi},
        {"anderson", suite_anderson},
        {"extremes", suite_extremes},
        {"cycle-lemma", suite_cycle},
        {"multi-cores", suite_multi},
        {"consecutive-recurrences", suite_consecutive},
        {"distinct-table", suite_distinct_table},
        {"fibonacci-power", suite_fibonacci_power},
        {"round-trips", suite_round_trips},
    };
    return suites;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

bool is_suite(const std::string& name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_suite(const std::string& name, Envelope envelope, int jobs) {
    const auto& suites = registry();
    const auto it = std::find_if(suites.begin(), suites.end(), [&](const auto& e) { return e.first == name; });
    if (it == suites.end()) throw std::invalid_argument("unknown suite: " + name);

    SuiteResult result;
    result.name = name;
    Checker checker(result);
    const auto start = std::chrono::steady_clock::now();
    try {
        it->second(checker, Context{envelope, jobs});
    } catch (const std::exception& e) {
        result.passed = false;
        result.failures.push_back(std::string("exception: ") + e.what());
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace coreparts
