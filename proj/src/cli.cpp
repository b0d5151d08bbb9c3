#include "coreparts/cli.hpp"

#include "coreparts/bijections.hpp"
#include "coreparts/counting.hpp"
#include "coreparts/distinct.hpp"
#include "coreparts/oracle.hpp"
#include "coreparts/qseries.hpp"
#include "coreparts/simultaneous.hpp"
#include "coreparts/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace coreparts {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    int jobs = 1;

    std::string family;
    std::map<std::string, std::optional<int>> ints;
    std::vector<int> extra;
    std::vector<int> lambda;
    std::string stat;
    bool check = false;
    std::string suite;
    std::string envelope = "full";
};

int need(const Options& o, const std::string& name) {
    const auto it = o.ints.find(name);
    if (it == o.ints.end() || !it->second) throw UsageError("missing required option --" + name);
    return *it->second;
}

std::string json_partitions(const std::vector<Partition>& list) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Partition& p : list) arr.push_back(p.vec());
    return arr.dump();
}

void print_partitions(std::ostream& out, const Options& o, const std::vector<Partition>& list) {
    if (o.format == "json") {
        out << json_partitions(list) << '\n';
        return;
    }
    for (const Partition& p : list) out << p.to_string() << '\n';
}

void print_value(std::ostream& out, const Options& o, const BigInt& v) {
    if (o.format == "json")
        out << "{\"family\":\"" << o.family << "\",\"value\":" << v << "}\n";
    else
        out << v << '\n';
}

BigInt consecutive_field(const ConsecutiveStats& st, const std::string& stat) {
    if (stat == "N") return st.N;
    if (stat == "M") return st.M;
    if (stat == "f") return st.f;
    if (stat == "g") return st.g;
    if (stat == "h") return st.h;
    if (stat == "T") return st.T;
    throw UsageError("--stat must be one of N, M, f, g, h, T");
}

int cmd_count(std::ostream& out, const Options& o) {
    const std::string& f = o.family;
    BigInt v;
    if (f == "tcore-parts")
        v = count_parts_exact(need(o, "t"), need(o, "l"));
    else if (f == "tcore-parts-at-most")
        v = count_parts_at_most(need(o, "t"), need(o, "l"));
    else if (f == "tcore-split")
        v = count_parts_split(need(o, "t"), need(o, "l"), need(o, "j"));
    else if (f == "tcore-smallest")
        v = count_smallest_part(need(o, "t"), need(o, "l"), need(o, "i"));
    else if (f == "tcore-largest")
        v = count_largest_part(need(o, "t"), need(o, "x"));
    else if (f == "tcore-largest-two")
        v = count_largest_two(need(o, "t"), need(o, "x"), need(o, "y"));
    else if (f == "tcore-largest-mult")
        v = count_largest_multiplicity(need(o, "t"), need(o, "x"), need(o, "i"));
    else if (f == "tcore-bounded")
        v = count_parts_and_bound(need(o, "t"), need(o, "l"), need(o, "x"));
    else if (f == "tcores") {
        const int n = need(o, "n");
        v = gen_tcores_product(need(o, "t"), n)[n];
    } else if (f == "divisible")
        v = count_divisible_parts(need(o, "t"), need(o, "d"), need(o, "k"), need(o, "l"));
    else if (f == "kreweras")
        v = kreweras_count(o.lambda);
    else if (f == "multi")
        v = count_multi_cores(need(o, "a"), need(o, "b"), o.extra);
    else if (f == "catalan")
        v = rational_catalan(need(o, "a"), need(o, "b"));
    else if (f == "consecutive") {
        if (o.stat.empty()) throw UsageError("missing required option --stat");
        v = consecutive_field(consecutive_stats(need(o, "s"), need(o, "r")), o.stat);
    } else if (f == "distinct-consecutive")
        v = count_distinct_consecutive(need(o, "s"));
    else if (f == "distinct-odd-pair")
        v = count_distinct_odd_pair(need(o, "s"));
    else if (f == "distinct-parts")
        v = count_distinct_exact_parts(need(o, "t"), need(o, "l"));
    else if (f == "distinct-largest")
        v = count_distinct_largest(need(o, "t"), need(o, "x"));
    else
        throw UsageError("unknown count family: " + f);
    print_value(out, o, v);
    return kOk;
}

int cmd_enumerate(std::ostream& out, const Options& o) {
    const std::string& f = o.family;
    std::vector<Partition> list;
    if (f == "tcores") {
        const int t = need(o, "t");
        const int n = need(o, "n");
        if (t < 1 || n < 0) throw std::domain_error("need t >= 1 and n >= 0");
        if (t == 1) {
            if (n == 0) list.emplace_back();
        } else {
            std::vector<ResidueCounts> found;
            for_each_tcore_up_to(t, n, [&](const ResidueCounts& c, std::int64_t size) {
                if (size == n) found.push_back(c);
            });
            for (const auto& c : found) list.push_back(phi1_inv(c));
            std::sort(list.begin(), list.end(), std::greater<>());
        }
    } else if (f == "tcore-parts") {
        const int t = need(o, "t");
        const int l = need(o, "l");
        if (t < 2 || l < 0) throw std::domain_error("need t >= 2 and l >= 0");
        // l parts ↔ residue counts summing to l with n₀ = 0
        std::vector<int> counts(static_cast<std::size_t>(t), 0);
        auto rec = [&](auto&& self, int j, int remaining) -> void {
            if (j == t - 1) {
                counts[static_cast<std::size_t>(j)] = remaining;
                list.push_back(phi1_inv(ResidueCounts(t, counts)));
                return;
            }
            for (int v = remaining; v >= 0; --v) {
                counts[static_cast<std::size_t>(j)] = v;
                self(self, j + 1, remaining - v);
            }
        };
        rec(rec, 1, l);
        std::sort(list.begin(), list.end(), std::greater<>());
    } else if (f == "ab-cores")
        list = enumerate_ab_cores(need(o, "a"), need(o, "b"));
    else if (f == "multi")
        list = enumerate_multi_cores(need(o, "a"), need(o, "b"), o.extra);
    else if (f == "distinct-consecutive")
        list = enumerate_distinct_consecutive(need(o, "s"));
    else if (f == "distinct-largest")
        list = oracle::distinct_with_largest(need(o, "t"), need(o, "x"));
    else if (f == "psi") {
        const int t = need(o, "t");
        const int l = need(o, "l");
        for (const Partition& p : oracle::tcores_with_parts(t, l)) list.push_back(psi_map(p, t, need(o, "d"), need(o, "k")));
    } else
        throw UsageError("unknown enumerate family: " + f);
    print_partitions(out, o, list);
    return kOk;
}

std::vector<BigInt> oracle_counts(const std::string& family, int t, int upto) {
    std::vector<BigInt> out;
    for (int n = 0; n <= upto; ++n) {
        long long count = 0;
        for (const Partition& p : oracle::tcores_of(n, t))
            if (family != "self-conjugate" || oracle::conjugate_of(p) == p) ++count;
        out.emplace_back(count);
    }
    return out;
}

int cmd_series(std::ostream& out, std::ostream& err, const Options& o) {
    const std::string& f = o.family;
    const int t = need(o, "t");
    const int order = need(o, "order");
    TruncatedSeries s(0);
    if (f == "tcores")
        s = gen_tcores_product(t, order);
    else if (f == "tcores-tree")
        s = gen_tcores_nsum(t, order);
    else if (f == "tcores-charge")
        s = gen_tcores_csum(t, order);
    else if (f == "self-conjugate")
        s = gen_self_conjugate(t, order);
    else
        throw UsageError("unknown series family: " + f);

    if (o.check) {
        std::vector<std::string> problems;
        if (f != "self-conjugate" && t >= 2) {
            const TruncatedSeries product = gen_tcores_product(t, order);
            if (product != gen_tcores_nsum(t, order)) problems.push_back("tree sum differs from product");
            if (product != gen_tcores_csum(t, order)) problems.push_back("charge sum differs from product");
        }
        const int upto = std::min(order, 30);
        const auto counts = oracle_counts(f == "self-conjugate" ? f : "tcores", t, upto);
        for (int n = 0; n <= upto; ++n)
            if (s[n] != counts[static_cast<std::size_t>(n)])
                problems.push_back("coefficient of q^" + std::to_string(n) + " differs from enumeration");
        if (problems.empty()) {
            out << "OK\n";
            return kOk;
        }
        for (const auto& p : problems) err << p << '\n';
        out << "MISMATCH\n";
        return kVerifyFailed;
    }

    if (o.format == "json") {
        out << '[';
        for (int n = 0; n <= order; ++n) out << (n ? "," : "") << s[n];
        out << "]\n";
    } else if (o.format == "csv") {
        out << "n,coefficient\n";
        for (int n = 0; n <= order; ++n) out << n << ',' << s[n] << '\n';
    } else {
        out << s.to_text();
    }
    return kOk;
}

int cmd_table(std::ostream& out, const Options& o) {
    if (o.family != "distinct") throw UsageError("unknown table: " + o.family);
    const int t_max = need(o, "tmax");
    const int x_max = need(o, "xmax");
    const auto table = distinct_table(t_max, x_max, o.jobs);
    if (o.format == "json") {
        out << '[';
        for (std::size_t r = 0; r < table.size(); ++r) {
            out << (r ? "," : "") << '[';
            for (std::size_t x = 0; x < table[r].size(); ++x) out << (x ? "," : "") << table[r][x];
            out << ']';
        }
        out << "]\n";
        return kOk;
    }
    out << 't';
    for (int x = 0; x <= x_max; ++x) out << ',' << x;
    out << '\n';
    for (std::size_t r = 0; r < table.size(); ++r) {
        out << r + 2;
        for (const BigInt& v : table[r]) out << ',' << v;
        out << '\n';
    }
    return kOk;
}

int cmd_verify(std::ostream& out, const Options& o) {
    Envelope env;
    if (o.envelope == "small")
        env = Envelope::Small;
    else if (o.envelope == "full")
        env = Envelope::Full;
    else
        throw UsageError("--envelope must be small or full");
    std::vector<std::string> names;
    if (o.suite == "all")
        names = suite_names();
    else if (is_suite(o.suite))
        names.push_back(o.suite);
    else
        throw UsageError("unknown suite: " + o.suite);

    bool all_passed = true;
    for (const auto& name : names) {
        const SuiteResult r = run_suite(name, env, o.jobs);
        all_passed = all_passed && r.passed;
        out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)\n";
        for (const auto& f : r.failures) out << "  " << f << '\n';
    }
    return all_passed ? kOk : kVerifyFailed;
}

void add_int(CLI::App* cmd, Options& o, const std::string& name, const std::string& help) {
    cmd->add_option("--" + name, o.ints[name], help);
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Core partition counts, enumerations, series and checks", "coreparts"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* count = app.add_subcommand("count", "Print an exact count");
    count->add_option("family", o.family, "Counting family")->required();
    for (const char* name : {"t", "l", "j", "i", "x", "y", "d", "k", "a", "b", "s", "r", "n"})
        add_int(count, o, name, "integer parameter");
    count->add_option("--extra", o.extra, "Additional moduli")->delimiter(',');
    count->add_option("--lambda", o.lambda, "Nonincreasing sequence")->delimiter(',');
    count->add_option("--stat", o.stat, "Statistic N|M|f|g|h|T");

    auto* enumerate = app.add_subcommand("enumerate", "List partitions, one per line");
    enumerate->add_option("family", o.family, "Enumeration family")->required();
    for (const char* name : {"t", "n", "l", "a", "b", "s", "x", "d", "k"}) add_int(enumerate, o, name, "integer parameter");
    enumerate->add_option("--extra", o.extra, "Additional moduli")->delimiter(',');

    auto* series = app.add_subcommand("series", "Print generating-function coefficients");
    series->add_option("family", o.family, "tcores|tcores-tree|tcores-charge|self-conjugate")->required();
    add_int(series, o, "t", "modulus");
    add_int(series, o, "order", "truncation order");
    series->add_flag("--check", o.check, "Recompute by an independent route and report agreement");

    auto* table = app.add_subcommand("table", "Print a table as CSV");
    table->add_option("name", o.family, "distinct")->required();
    add_int(table, o, "tmax", "largest t");
    add_int(table, o, "xmax", "largest x");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", o.suite, "Suite name or 'all'")->required();
    verify->add_option("--envelope", o.envelope, "small|full");

    for (auto* sub : {count, enumerate, series, table, verify}) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        if (count->parsed()) return cmd_count(out, o);
        if (enumerate->parsed()) return cmd_enumerate(out, o);
        if (series->parsed()) return cmd_series(out, err, o);
        if (table->parsed()) return cmd_table(out, o);
        return cmd_verify(out, o);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "invalid parameters: " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "invalid input: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace coreparts
