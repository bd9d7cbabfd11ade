// Command-line front end: count, check, oracle-compare, graph-table, series.
//
// Exit codes: 0 ok, 1 oracle disagreement, 2 usage, 3 precondition,
// 4 resource cap. Diagnostics go to stderr as one "error: <category>: ..." line.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "distinct_congruence/distinct_congruence.hpp"

namespace dc = distinct_congruence;
using json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kMaxSeriesOrder = 1000;

enum Exit : int { kOk = 0, kDisagree = 1, kUsage = 2, kPrecondition = 3, kResource = 4 };

struct GlobalFlags {
    bool json = false;
    bool no_timing = false;
    unsigned threads = 1;
};

dc::ExactInt parse_int(const std::string& text, const std::string& what) {
    static const std::regex pattern("^[+-]?[0-9]+$");
    if (!std::regex_match(text, pattern)) {
        throw dc::UsageError(what + " must be an integer, got '" + text + "'");
    }
    return dc::ExactInt(text[0] == '+' ? text.substr(1) : text);
}

std::vector<dc::ExactInt> parse_coeffs(const std::string& text) {
    std::vector<dc::ExactInt> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(item, "coefficient"));
    if (out.empty() || text.back() == ',') throw dc::UsageError("--coeffs needs a comma-separated list of integers");
    return out;
}

dc::Rational parse_rational(const std::string& text) {
    static const std::regex pattern("^([+-]?[0-9]+)(/([0-9]+))?$");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) {
        throw dc::UsageError("--beta must be an integer or fraction p/q, got '" + text + "'");
    }
    const auto num = parse_int(m[1].str(), "numerator");
    const dc::ExactInt den = m[3].matched ? dc::ExactInt(m[3].str()) : dc::ExactInt(1);
    if (den == 0) throw dc::UsageError("--beta has zero denominator");
    return {num, den};
}

json instance_json(const dc::CongruenceInstance& inst) {
    json coeffs = json::array();
    for (const auto& a : inst.coeffs()) coeffs.push_back(a.str());
    return {{"coeffs", coeffs}, {"b", inst.b().str()}, {"n", inst.n().str()}};
}

std::string subset_string(const std::vector<std::size_t>& subset) {
    std::string s = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(subset[i] + 1);
    }
    return s + "}";
}

json subset_json(const std::vector<std::size_t>& subset) {
    json arr = json::array();
    for (auto i : subset) arr.push_back(i + 1);
    return arr;
}

class Runner {
public:
    Runner(GlobalFlags flags, std::ostream& out, std::ostream& err)
        : flags_(flags), out_(out), err_(err), start_(std::chrono::steady_clock::now()) {}

    int count(const dc::CongruenceInstance& inst, const std::optional<std::string>& method_name) {
        dc::Method method;
        if (method_name) {
            auto m = dc::parse_method(*method_name);
            if (!m) throw dc::UsageError("unknown method '" + *method_name + "'");
            method = *m;
        } else {
            method = dc::Method::iep_partitions;
            try {
                if (dc::check_condition(inst).holds) method = dc::Method::formula;
            } catch (const dc::ResourceError&) {
            }
        }
        const auto value = dc::distinct_count(inst, method, oracle_options());
        if (flags_.json) {
            emit_json(instance_json(inst), dc::method_name(method), value.str(), {});
        } else {
            out_ << value.str() << "\n";
            err_ << "method: " << dc::method_name(method) << "\n";
        }
        return kOk;
    }

    int check(const dc::CongruenceInstance& inst, bool have_b) {
        const auto report = dc::check_condition(inst);
        if (flags_.json) {
            json inputs = instance_json(inst);
            if (!have_b) inputs.erase("b");
            json r = {{"holds", report.holds},
                      {"failing_subset", report.failing_subset ? subset_json(*report.failing_subset) : json(nullptr)},
                      {"full_sum_gcd", report.full_sum_gcd.str()}};
            if (have_b) r["divides_b"] = report.divides_b;
            emit_json(inputs, "check", nullptr, {{"report", r}});
        } else {
            out_ << "hypothesis: " << (report.holds ? "holds" : "fails") << "\n";
            if (report.failing_subset) out_ << "failing_subset: " << subset_string(*report.failing_subset) << "\n";
            out_ << "full_sum_gcd: " << report.full_sum_gcd.str() << "\n";
            if (have_b) out_ << "divides_b: " << (report.divides_b ? "true" : "false") << "\n";
        }
        return kOk;
    }

    int oracle_compare(const dc::CongruenceInstance& inst) {
        std::optional<dc::ExactCount> agreed;
        bool disagree = false;
        json results = json::array();
        std::ostringstream table;
        for (auto m : dc::kAllMethods) {
            const std::string name(dc::method_name(m));
            table << name << std::string(16 - name.size(), ' ');
            try {
                const auto v = dc::distinct_count(inst, m, oracle_options());
                if (agreed && *agreed != v) disagree = true;
                if (!agreed) agreed = v;
                table << v.str() << "\n";
                results.push_back({{"method", name}, {"count", v.str()}});
            } catch (const dc::PreconditionError& e) {
                table << "skipped (precondition)\n";
                results.push_back({{"method", name}, {"skipped", "precondition"}, {"reason", e.what()}});
            } catch (const dc::ResourceError& e) {
                table << "skipped (resource)\n";
                results.push_back({{"method", name}, {"skipped", "resource"}, {"reason", e.what()}});
            }
        }
        if (!agreed) throw dc::ResourceError("no counting method applies to this instance");
        if (flags_.json) {
            emit_json(instance_json(inst), "oracle-compare", disagree ? json(nullptr) : json(agreed->str()),
                      {{"agree", !disagree}, {"results", results}});
        } else {
            out_ << table.str() << "agree: " << (disagree ? "no" : "yes") << "\n";
        }
        if (disagree) {
            err_ << "error: disagreement: counting methods returned different values\n";
            return kDisagree;
        }
        return kOk;
    }

    int graph_table(int k_max, bool connected_only) {
        const auto table = connected_only ? dc::GraphCountTable::connected_counts(k_max)
                                          : dc::GraphCountTable::component_counts(k_max);
        json rows = json::array();
        for (int k = 1; k <= k_max; ++k) {
            const auto top = static_cast<std::int64_t>(dc::GraphCountTable::max_edges(k));
            if (connected_only) {
                for (std::int64_t e = 0; e <= top; ++e) {
                    const auto v = table.gprime(e, k);
                    if (v != 0) rows.push_back({{"e", e}, {"k", k}, {"count", v.str()}});
                }
            } else {
                for (int c = 1; c <= k; ++c)
                    for (std::int64_t e = 0; e <= top; ++e) {
                        const auto v = table.g(c, e, k);
                        if (v != 0) rows.push_back({{"c", c}, {"e", e}, {"k", k}, {"count", v.str()}});
                    }
            }
        }
        if (flags_.json) {
            emit_json({{"kmax", k_max}, {"connected", connected_only}}, "graph-table", nullptr, {{"rows", rows}});
        } else {
            for (const auto& r : rows) out_ << r.dump() << "\n";
        }
        return kOk;
    }

    int series(const dc::Rational& beta, std::size_t order) {
        if (order > kMaxSeriesOrder) {
            throw dc::ResourceError("--order " + std::to_string(order) + " exceeds cap " +
                                    std::to_string(kMaxSeriesOrder));
        }
        const auto f = dc::deformed_exp_truncated(beta, order);
        json coeffs = json::array();
        for (const auto& c : f.coeffs()) coeffs.push_back(dc::to_fraction_string(c));
        if (flags_.json) {
            emit_json({{"beta", dc::to_fraction_string(beta)}, {"order", order}}, "series", nullptr,
                      {{"coefficients", coeffs}});
        } else {
            for (const auto& c : coeffs) out_ << c.get<std::string>() << "\n";
        }
        return kOk;
    }

private:
    dc::OracleOptions oracle_options() const {
        dc::OracleOptions o;
        o.threads = flags_.threads;
        return o;
    }

    void emit_json(json inputs, std::string_view method, json count, json extra) {
        json doc = {{"inputs", std::move(inputs)}, {"method", method}, {"count", std::move(count)}};
        for (auto& [key, value] : extra.items()) doc[key] = value;
        if (!flags_.no_timing) {
            const auto elapsed = std::chrono::steady_clock::now() - start_;
            doc["elapsed_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
        }
        out_ << doc.dump() << "\n";
    }

    GlobalFlags flags_;
    std::ostream& out_;
    std::ostream& err_;
    std::chrono::steady_clock::time_point start_;
};

int fail(std::ostream& err, std::string_view category, const std::string& message, int code) {
    err << "error: " << category << ": " << message << "\n";
    return code;
}

int run(int argc, char** argv) {
    CLI::App app{"Count solutions of a1*x1 + ... + ak*xk = b (mod n) with pairwise distinct coordinates"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags flags;
    app.add_flag("--json", flags.json, "Emit one JSON document instead of text");
    app.add_flag("--no-timing", flags.no_timing, "Omit elapsed_ms from JSON output");
    app.add_option("--threads", flags.threads, "Worker threads for brute-force enumeration")
        ->check(CLI::Range(1U, 256U));

    std::string n_text, b_text, coeffs_text, method_text;

    auto* count = app.add_subcommand("count", "Count distinct-coordinate solutions");
    count->add_option("--n", n_text, "Modulus n >= 1")->required();
    count->add_option("--b", b_text, "Right-hand side b")->required();
    count->add_option("--coeffs", coeffs_text, "Comma-separated coefficients a1,...,ak")->required();
    count->add_option("--method", method_text, "formula | iep-edges | iep-partitions | brute");

    auto* check = app.add_subcommand("check", "Test the subset-sum gcd hypothesis");
    check->add_option("--n", n_text, "Modulus n >= 1")->required();
    check->add_option("--coeffs", coeffs_text, "Comma-separated coefficients")->required();
    auto* check_b = check->add_option("--b", b_text, "Right-hand side b (optional)");

    auto* compare = app.add_subcommand("oracle-compare", "Run every applicable method and compare");
    compare->add_option("--n", n_text, "Modulus n >= 1")->required();
    compare->add_option("--b", b_text, "Right-hand side b")->required();
    compare->add_option("--coeffs", coeffs_text, "Comma-separated coefficients")->required();

    int k_max = 0;
    bool connected_only = false;
    auto* graph = app.add_subcommand("graph-table", "Labeled graph counts as JSON lines");
    graph->add_option("--kmax", k_max, "Largest vertex count")->required();
    graph->add_flag("--connected", connected_only, "Only connected graphs g'(e,k)");

    std::string beta_text;
    std::size_t order = 0;
    auto* series = app.add_subcommand("series", "Truncated deformed exponential coefficients");
    series->add_option("--beta", beta_text, "beta as integer or p/q")->required();
    series->add_option("--order", order, "Highest power of alpha")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        for (auto& ch : msg)
            if (ch == '\n') ch = ' ';
        return fail(std::cerr, "usage", msg, kUsage);
    }

    Runner runner(flags, std::cout, std::cerr);
    try {
        if (graph->parsed()) return runner.graph_table(k_max, connected_only);
        if (series->parsed()) return runner.series(parse_rational(beta_text), order);

        const auto n = parse_int(n_text, "--n");
        const auto coeffs = parse_coeffs(coeffs_text);
        if (check->parsed()) {
            const bool have_b = check_b->count() > 0;
            const dc::ExactInt b = have_b ? parse_int(b_text, "--b") : dc::ExactInt(0);
            return runner.check(dc::CongruenceInstance(coeffs, b, n), have_b);
        }
        const dc::CongruenceInstance inst(coeffs, parse_int(b_text, "--b"), n);
        if (count->parsed()) {
            return runner.count(inst, method_text.empty() ? std::nullopt : std::optional(method_text));
        }
        return runner.oracle_compare(inst);
    } catch (const dc::HypothesisError& e) {
        const auto& r = e.report();
        return fail(std::cerr, e.category(),
                    std::string(e.what()) + " (failing subset " + subset_string(*r.failing_subset) + ")",
                    kPrecondition);
    } catch (const dc::PreconditionError& e) {
        return fail(std::cerr, e.category(), e.what(), kPrecondition);
    } catch (const dc::ResourceError& e) {
        return fail(std::cerr, e.category(), e.what(), kResource);
    } catch (const dc::Error& e) {
        return fail(std::cerr, "usage", e.what(), kUsage);
    }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
