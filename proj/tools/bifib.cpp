#include "bifib/grammar.hpp"
#include "bifib/identities.hpp"
#include "bifib/sequences.hpp"
#include "bifib/strategies.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace bifib;

enum class Format { text, json, csv };

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    throw DomainError("unknown format '" + name + "' (expected text, json or csv)");
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

struct SeqSpec {
    std::string seq = "F";
    std::string a0_text;
    std::string a1_text;
    bool has_a0 = false;
    bool has_a1 = false;

    SeqParams params() const {
        if (seq == "F") return SeqParams::fib();
        if (seq == "L") return SeqParams::lucas();
        if (seq == "H") {
            if (!has_a0 || !has_a1)
                throw DomainError("--seq H requires both --a0 and --a1");
            return {parse_poly(a0_text), parse_poly(a1_text)};
        }
        throw DomainError("unknown sequence '" + seq + "' (expected F, L or H)");
    }
};

int cmd_compute(const SeqSpec& spec, long long n, Format fmt) {
    MultiPoly p = h_n(spec.params(), n);
    std::string rendered = render_poly(p);
    switch (fmt) {
        case Format::text:
            std::cout << rendered << "\n";
            break;
        case Format::json: {
            nlohmann::json obj{{"command", "compute"}, {"seq", spec.seq}, {"n", n},
                               {"poly", rendered}};
            std::cout << obj.dump() << "\n";
            break;
        }
        case Format::csv:
            std::cout << "seq,n,poly\n"
                      << spec.seq << "," << n << "," << csv_escape(rendered) << "\n";
            break;
    }
    return 0;
}

int cmd_eval(const SeqSpec& spec, long long n, const std::string& x_text,
             const std::string& y_text, Format fmt) {
    RationalPoint pt{{Var::x, parse_rational(x_text)}, {Var::y, parse_rational(y_text)}};
    GaussianRational value = h_n(spec.params(), n).evaluate_exact(pt);
    std::string rendered = render_value(value);
    switch (fmt) {
        case Format::text:
            std::cout << rendered << "\n";
            break;
        case Format::json: {
            nlohmann::json obj{{"command", "eval"},  {"seq", spec.seq}, {"n", n},
                               {"x", x_text},        {"y", y_text},     {"value", rendered}};
            std::cout << obj.dump() << "\n";
            break;
        }
        case Format::csv:
            std::cout << "seq,n,x,y,value\n"
                      << spec.seq << "," << n << "," << csv_escape(x_text) << ","
                      << csv_escape(y_text) << "," << csv_escape(rendered) << "\n";
            break;
    }
    return 0;
}

int cmd_series(const SeqSpec& spec, long long terms, Format fmt) {
    if (terms < 1) throw DomainError("--terms must be >= 1");
    auto coeffs = series_coeffs(spec.params(), static_cast<std::size_t>(terms));
    switch (fmt) {
        case Format::text:
            for (const auto& c : coeffs) std::cout << render_poly(c) << "\n";
            break;
        case Format::json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& c : coeffs) arr.push_back(render_poly(c));
            nlohmann::json obj{{"command", "series"},
                               {"seq", spec.seq},
                               {"terms", terms},
                               {"coefficients", arr}};
            std::cout << obj.dump() << "\n";
            break;
        }
        case Format::csv:
            std::cout << "k,poly\n";
            for (std::size_t k = 0; k < coeffs.size(); ++k)
                std::cout << k << "," << csv_escape(render_poly(coeffs[k])) << "\n";
            break;
    }
    return 0;
}

std::string report_label(const IdentityReport& r) {
    std::string label(identity_name(r.id));
    if (r.params_label) label += "[" + *r.params_label + "]";
    label += " n=" + std::to_string(r.n);
    if (r.m) label += " m=" + std::to_string(*r.m);
    return label;
}

int cmd_verify(const std::string& suite, long long n_max, Format fmt, bool quiet) {
    std::vector<IdentityId> ids;
    if (suite == "all") {
        for (const auto& info : catalog()) ids.push_back(info.id);
    } else {
        for (const auto& name : split_list(suite)) {
            auto id = identity_from_name(name);
            if (!id) throw DomainError("unknown identity '" + name + "'");
            ids.push_back(*id);
        }
    }
    auto reports = run_suite(ids, n_max, SweepConfig::defaults());

    std::size_t fail_count = 0;
    std::size_t finding_count = 0;
    for (const auto& r : reports) {
        if (!r.pass) ++fail_count;
        finding_count += r.findings.size();
    }

    switch (fmt) {
        case Format::text:
            for (const auto& r : reports) {
                if (!r.pass) {
                    std::cout << "FAIL " << report_label(r);
                    const auto& f = r.failures.front();
                    if (!f.point.empty()) std::cout << " at " << f.point;
                    std::cout << "\n  lhs: " << f.lhs << "\n  rhs: " << f.rhs << "\n";
                } else if (!quiet) {
                    std::cout << "PASS " << report_label(r);
                    if (!r.findings.empty())
                        std::cout << " (" << r.findings.size() << " survey finding(s))";
                    std::cout << "\n";
                }
                if (!r.findings.empty() && !quiet) {
                    for (const auto& f : r.findings)
                        std::cout << "FLAG " << identity_name(r.id) << " at " << f.point
                                  << ": " << f.lhs << " outside " << f.rhs << "\n";
                }
            }
            break;
        case Format::json:
            std::cout << reports_to_json(reports) << "\n";
            break;
        case Format::csv: {
            std::cout << "id,n,m,params,status,lhs,rhs,point\n";
            for (const auto& r : reports) {
                std::string point =
                    r.failures.empty() ? "" : r.failures.front().point;
                std::cout << identity_name(r.id) << "," << r.n << ","
                          << (r.m ? std::to_string(*r.m) : "") << ","
                          << csv_escape(r.params_label.value_or("")) << ","
                          << (r.pass ? "pass" : "fail") << "," << csv_escape(r.lhs) << ","
                          << csv_escape(r.rhs) << "," << csv_escape(point) << "\n";
            }
            break;
        }
    }
    std::cerr << "verify: " << reports.size() << " checks, " << fail_count << " failure(s), "
              << finding_count << " survey finding(s)\n";
    return fail_count == 0 ? 0 : 1;
}

struct BenchRecord {
    Strategy strategy;
    long long n;
    double wall_ms;
    std::size_t term_count;
};

int cmd_bench(const std::string& n_list, const std::string& strategy_list, int repeats,
              const std::string& x_text, const std::string& y_text, Format fmt) {
    if (repeats < 1) throw DomainError("--repeats must be >= 1");
    std::vector<long long> ns;
    for (const auto& tok : split_list(n_list)) {
        long long n = 0;
        try {
            n = std::stoll(tok);
        } catch (const std::exception&) {
            throw DomainError("bad index '" + tok + "' in --n");
        }
        if (n < 1) throw DomainError("bench requires every n >= 1");
        ns.push_back(n);
    }
    if (ns.empty()) throw DomainError("--n must list at least one index");
    std::vector<Strategy> strategies;
    for (const auto& name : split_list(strategy_list)) {
        auto s = strategy_from_name(name);
        if (!s) throw DomainError("unknown strategy '" + name + "'");
        strategies.push_back(*s);
    }
    if (strategies.empty()) throw DomainError("--strategies must list at least one strategy");
    bool point_mode = !x_text.empty() || !y_text.empty();
    if (point_mode && (x_text.empty() || y_text.empty()))
        throw DomainError("bench point mode requires both --x and --y");

    std::vector<BenchRecord> records;
    for (long long n : ns) {
        // Correctness first: every strategy must agree before any time is
        // reported.
        if (point_mode) {
            RationalFibRing ring{parse_rational(x_text), parse_rational(y_text)};
            std::vector<Rat> values;
            for (Strategy s : strategies) values.push_back(run_strategy(s, ring, n));
            for (std::size_t i = 1; i < values.size(); ++i) {
                if (values[i] == values[0]) continue;
                std::cerr << "bench: strategy results disagree at n=" << n << "\n";
                return 1;
            }
            for (std::size_t i = 0; i < strategies.size(); ++i) {
                double best = 1e300;
                for (int r = 0; r < repeats; ++r) {
                    auto t0 = std::chrono::steady_clock::now();
                    auto v = run_strategy(strategies[i], ring, n);
                    auto t1 = std::chrono::steady_clock::now();
                    (void)v;
                    best = std::min(best,
                                    std::chrono::duration<double, std::milli>(t1 - t0).count());
                }
                records.push_back({strategies[i], n, best, 1});
            }
        } else {
            PolyFibRing ring;
            std::vector<MultiPoly> values;
            for (Strategy s : strategies) values.push_back(run_strategy(s, ring, n));
            for (std::size_t i = 1; i < values.size(); ++i) {
                if (values[i] == values[0]) continue;
                std::cerr << "bench: strategy results disagree at n=" << n << "\n";
                return 1;
            }
            for (std::size_t i = 0; i < strategies.size(); ++i) {
                double best = 1e300;
                for (int r = 0; r < repeats; ++r) {
                    auto t0 = std::chrono::steady_clock::now();
                    auto v = run_strategy(strategies[i], ring, n);
                    auto t1 = std::chrono::steady_clock::now();
                    (void)v;
                    best = std::min(best,
                                    std::chrono::duration<double, std::milli>(t1 - t0).count());
                }
                records.push_back({strategies[i], n, best, values[i].term_count()});
            }
        }
    }

    switch (fmt) {
        case Format::text:
            for (const auto& rec : records)
                std::cout << strategy_name(rec.strategy) << " n=" << rec.n << " "
                          << rec.wall_ms << " ms, " << rec.term_count << " term(s)\n";
            break;
        case Format::json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& rec : records)
                arr.push_back({{"strategy", std::string(strategy_name(rec.strategy))},
                               {"n", rec.n},
                               {"wall_ms", rec.wall_ms},
                               {"term_count", rec.term_count}});
            std::cout << arr.dump(2) << "\n";
            break;
        }
        case Format::csv:
            std::cout << "strategy,n,wall_time_ms,term_count\n";
            for (const auto& rec : records)
                std::cout << strategy_name(rec.strategy) << "," << rec.n << "," << rec.wall_ms
                          << "," << rec.term_count << "\n";
            break;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for generalized bivariate Fibonacci polynomials"};
    app.require_subcommand(1);

    std::string format = "text";
    long long n_max = 16;
    bool quiet = false;
    long long seed = 0;
    app.add_option("--format", format, "output format: text, json or csv")
        ->expected(1);
    app.add_option("--n-max", n_max, "largest index for verification sweeps");
    app.add_flag("--quiet", quiet, "suppress per-check output");
    app.add_option("--seed", seed, "reserved, unused");

    SeqSpec spec;
    long long n = 0;
    std::string x_text, y_text;
    long long terms = 0;
    std::string suite = "all";
    std::string bench_ns, bench_strategies = "naive,matrix_pow,doubling,closed_form";
    int repeats = 3;

    auto add_seq_opts = [&spec](CLI::App* sub, bool required_seq) {
        auto* opt = sub->add_option("--seq", spec.seq, "sequence: F, L or H");
        if (required_seq) opt->required();
        sub->add_option("--a0", spec.a0_text, "H_0 polynomial (for --seq H)")
            ->each([&spec](const std::string&) { spec.has_a0 = true; });
        sub->add_option("--a1", spec.a1_text, "H_1 polynomial (for --seq H)")
            ->each([&spec](const std::string&) { spec.has_a1 = true; });
    };

    CLI::App* compute = app.add_subcommand("compute", "render a sequence member");
    compute->fallthrough();
    add_seq_opts(compute, true);
    compute->add_option("--n", n, "index (any integer)")->required();

    CLI::App* eval = app.add_subcommand("eval", "evaluate a sequence member exactly");
    eval->fallthrough();
    add_seq_opts(eval, true);
    eval->add_option("--n", n, "index (any integer)")->required();
    eval->add_option("--x", x_text, "rational value for x, e.g. 2 or -1/3")->required();
    eval->add_option("--y", y_text, "rational value for y")->required();

    CLI::App* verify = app.add_subcommand("verify", "run the identity catalog");
    verify->fallthrough();
    verify->add_option("--suite", suite, "'all' or a comma-separated list of identity names");

    CLI::App* series = app.add_subcommand("series", "expand the generating function");
    series->fallthrough();
    add_seq_opts(series, true);
    series->add_option("--terms", terms, "number of coefficients")->required();

    CLI::App* bench = app.add_subcommand("bench", "time the computation strategies");
    bench->fallthrough();
    bench->add_option("--n", bench_ns, "comma-separated indices")->required();
    bench->add_option("--strategies", bench_strategies,
                      "comma-separated subset of naive, matrix_pow, doubling, closed_form");
    bench->add_option("--repeats", repeats, "timing repetitions per cell");
    bench->add_option("--x", x_text, "optional rational x: evaluate instead of staying symbolic");
    bench->add_option("--y", y_text, "optional rational y");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        Format fmt = parse_format(format);
        if (compute->parsed()) return cmd_compute(spec, n, fmt);
        if (eval->parsed()) return cmd_eval(spec, n, x_text, y_text, fmt);
        if (verify->parsed()) return cmd_verify(suite, n_max, fmt, quiet);
        if (series->parsed()) return cmd_series(spec, terms, fmt);
        if (bench->parsed())
            return cmd_bench(bench_ns, bench_strategies, repeats, x_text, y_text, fmt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
