// Command-line front end: sequence dumps, peak sweeps, the verification
// suite, P/Q table emission, distribution reports, convergence tables and
// Reed-Muller parameter tables, as JSON / CSV / text.
//
// Exit codes: 0 all checks passed, 1 at least one verification
// counterexample (or a falsified built-in identity), 2 usage/scope error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wbs/wbs.hpp"

using json = nlohmann::ordered_json;
using namespace wbs;

namespace {

constexpr const char* kToolVersion = "1.0.0";

// ---------------------------------------------------------------------------
// range / list parsing: "lo:hi" (inclusive), single value, or comma list
// ---------------------------------------------------------------------------

long parse_long(const std::string& s) {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw CLI::ValidationError("not an integer: '" + s + "'");
    return v;
}

std::vector<long> parse_long_range(const std::string& text) {
    std::vector<long> out;
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        long lo = parse_long(text.substr(0, colon));
        long hi = parse_long(text.substr(colon + 1));
        if (lo > hi) throw CLI::ValidationError("empty range '" + text + "'");
        for (long v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_long(item));
    if (out.empty()) throw CLI::ValidationError("empty range '" + text + "'");
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(Rational::parse(item));
        } catch (const std::exception& e) {
            throw CLI::ValidationError(std::string("bad rational '") + item + "': " + e.what());
        }
    }
    if (out.empty()) throw CLI::ValidationError("empty list '" + text + "'");
    return out;
}

void guard_m(const std::vector<long>& ms) {
    for (long m : ms)
        if (m > kMaxSequenceM)
            throw scope_error("m=" + std::to_string(m) + " exceeds the exact-path guard of " +
                              std::to_string(kMaxSequenceM));
}

// ---------------------------------------------------------------------------
// output plumbing
// ---------------------------------------------------------------------------

struct OutputConfig {
    std::string format = "json"; // json | csv | text
    std::string path;            // empty = stdout
    unsigned precision = kDefaultPrecision;
    unsigned digits = 12;
};

void add_output_flags(CLI::App* cmd, OutputConfig& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--output,-o", out.path, "Write the report to a file instead of stdout");
    cmd->add_option("--precision", out.precision, "Float precision in bits")
        ->check(CLI::Range(16u, 16384u))
        ->capture_default_str();
    cmd->add_option("--digits", out.digits, "Decimal digits for CSV float rendering")
        ->check(CLI::Range(1u, 1000u))
        ->capture_default_str();
}

std::string iso8601_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

json make_metadata() {
    // timestamps live only here, never in the comparison payload
    return json{{"tool", "wbs"}, {"version", kToolVersion}, {"generated_at", iso8601_now()}};
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        quoted += c;
        if (c == '"') quoted += '"';
    }
    return quoted + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string line;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ",";
        line += csv_quote(fields[i]);
    }
    return line + "\n";
}

void write_out(const OutputConfig& out, const std::string& body) {
    if (out.path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream file(out.path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file '" + out.path + "'");
    file << body;
}

json counterexample_to_json(const Counterexample& ce) {
    json params = json::object();
    for (const auto& [key, value] : ce.params) params[key] = value;
    return json{{"params", params}, {"lhs", ce.lhs}, {"relation", ce.relation}, {"rhs", ce.rhs}};
}

json report_to_json(const VerificationReport& r) {
    json ces = json::array();
    for (const auto& ce : r.counterexamples) ces.push_back(counterexample_to_json(ce));
    return json{{"check_id", r.check_id},
                {"domain", r.domain},
                {"passed", r.passed},
                {"instances", r.instances},
                {"counterexamples", ces}};
}

std::string render_reports(const OutputConfig& out, const json& config_echo,
                           const std::vector<VerificationReport>& reports) {
    bool all_passed = true;
    for (const auto& r : reports) all_passed = all_passed && r.passed;
    if (out.format == "json") {
        json doc{{"metadata", make_metadata()}, {"config_echo", config_echo}};
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        doc["passed"] = all_passed;
        doc["reports"] = arr;
        return doc.dump(2) + "\n";
    }
    if (out.format == "csv") {
        std::string body = csv_line({"check_id", "domain", "passed", "instances",
                                     "counterexamples"});
        for (const auto& r : reports) {
            std::string ces;
            for (const auto& ce : r.counterexamples) {
                if (!ces.empty()) ces += "; ";
                for (const auto& [key, value] : ce.params) ces += key + "=" + value + " ";
                ces += ce.lhs + " " + ce.relation + " " + ce.rhs;
            }
            body += csv_line({r.check_id, r.domain, r.passed ? "true" : "false",
                              std::to_string(r.instances), ces});
        }
        return body;
    }
    std::string body;
    for (const auto& r : reports) {
        body += (r.passed ? "[PASS] " : "[FAIL] ") + r.check_id + "  " + r.domain + "  (" +
                std::to_string(r.instances) + " instances)\n";
        for (const auto& ce : r.counterexamples) {
            body += "       counterexample:";
            for (const auto& [key, value] : ce.params) body += " " + key + "=" + value;
            body += "  " + ce.lhs + " " + ce.relation + " " + ce.rhs + " is false\n";
        }
    }
    body += all_passed ? "all checks passed\n" : "FAILURES PRESENT\n";
    return body;
}

int exit_code_for(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed) return 1;
    return 0;
}

// ---------------------------------------------------------------------------
// subcommand payloads
// ---------------------------------------------------------------------------

int run_seq(long m, const std::string& a_text, const OutputConfig& out) {
    Rational a = Rational::parse(a_text);
    guard_m({m});
    auto seq = f_sequence(SeqSpec(m, a));
    json config{{"command", "seq"}, {"m", m}, {"a", a.to_fraction_string()}};
    if (out.format == "json") {
        json rows = json::array();
        for (long r = 0; r <= m; ++r)
            rows.push_back(json{{"r", r}, {"value", seq.values[r].to_fraction_string()}});
        json doc{{"metadata", make_metadata()}, {"config_echo", config}, {"rows", rows}};
        write_out(out, doc.dump(2) + "\n");
    } else if (out.format == "csv") {
        std::string body = csv_line({"r", "value", "decimal"});
        for (long r = 0; r <= m; ++r)
            body += csv_line({std::to_string(r), seq.values[r].to_fraction_string(),
                              seq.values[r].to_decimal_string(out.digits)});
        write_out(out, body);
    } else {
        std::string body = "f-sequence m=" + std::to_string(m) + " a=" + a.to_fraction_string() +
                           "\n";
        for (long r = 0; r <= m; ++r)
            body += "  r=" + std::to_string(r) + "  " + seq.values[r].to_fraction_string() + "\n";
        write_out(out, body);
    }
    return 0;
}

int run_peak(const std::string& a_text, const std::string& m_text, const OutputConfig& out) {
    long a = parse_long(a_text);
    if (a < 1) throw scope_error("peak: requires integer a >= 1");
    auto ms = parse_long_range(m_text);
    guard_m(ms);
    json rows = json::array();
    bool all_ok = true;
    for (long m : ms) {
        if (m < 2) throw scope_error("peak: every m must be >= 2");
        auto peak = observed_peak(f_sequence(SeqSpec(m, Rational(a))));
        long predicted = predicted_peak(m, a);
        bool exceptional = is_exceptional_m(m, a);
        long discrepancy = predicted - peak.argmax_min;
        bool ok = exceptional ? (discrepancy == 0 || discrepancy == 1)
                              : (peak.tie_indices == std::vector<long>{predicted});
        all_ok = all_ok && ok;
        json ties = json::array();
        for (long t : peak.tie_indices) ties.push_back(t);
        rows.push_back(json{{"m", m},
                            {"a", a},
                            {"predicted", predicted},
                            {"argmax_min", peak.argmax_min},
                            {"ties", ties},
                            {"peak_value", peak.peak_value.to_fraction_string()},
                            {"exceptional", exceptional},
                            {"discrepancy", discrepancy},
                            {"ok", ok}});
    }
    json config{{"command", "peak"}, {"a", a}, {"m", m_text}};
    if (out.format == "json") {
        json doc{{"metadata", make_metadata()},
                 {"config_echo", config},
                 {"passed", all_ok},
                 {"rows", rows}};
        write_out(out, doc.dump(2) + "\n");
    } else if (out.format == "csv") {
        std::string body = csv_line({"m", "a", "predicted", "argmax_min", "peak_value",
                                     "exceptional", "discrepancy", "ok"});
        for (const auto& row : rows)
            body += csv_line({std::to_string(row["m"].get<long>()), std::to_string(a),
                              std::to_string(row["predicted"].get<long>()),
                              std::to_string(row["argmax_min"].get<long>()),
                              row["peak_value"].get<std::string>(),
                              row["exceptional"].get<bool>() ? "true" : "false",
                              std::to_string(row["discrepancy"].get<long>()),
                              row["ok"].get<bool>() ? "true" : "false"});
        write_out(out, body);
    } else {
        std::string body;
        for (const auto& row : rows) {
            body += "m=" + std::to_string(row["m"].get<long>()) +
                    " predicted=" + std::to_string(row["predicted"].get<long>()) +
                    " observed=" + std::to_string(row["argmax_min"].get<long>());
            if (row["exceptional"].get<bool>())
                body += " [exceptional, discrepancy " +
                        std::to_string(row["discrepancy"].get<long>()) + "]";
            body += row["ok"].get<bool>() ? "  ok\n" : "  MISMATCH\n";
        }
        write_out(out, body);
    }
    return all_ok ? 0 : 1;
}

int run_pq(long n_max, const OutputConfig& out) {
    if (n_max < 0 || n_max > 200) throw scope_error("pq: n-max must be in [0, 200]");
    auto pairs = build_pq(n_max);
    auto poly_to_json = [](const LPoly& poly) {
        // coefficient arrays: outer index = power of l, inner = power of a
        json lp = json::array();
        for (long j = 0; j <= poly.degree(); ++j) {
            json ap = json::array();
            APoly c = poly.coeff(j);
            for (long e = 0; e <= c.degree(); ++e) ap.push_back(c.coefficient(e).get_str());
            lp.push_back(ap);
        }
        return lp;
    };
    json config{{"command", "pq"}, {"n_max", n_max}};
    if (out.format == "json") {
        json arr = json::array();
        for (const auto& pair : pairs)
            arr.push_back(json{{"n", pair.n},
                               {"P", poly_to_json(pair.P)},
                               {"Q", poly_to_json(pair.Q)},
                               {"P_string", pair.P.to_string()},
                               {"Q_string", pair.Q.to_string()}});
        json doc{{"metadata", make_metadata()}, {"config_echo", config}, {"pairs", arr}};
        write_out(out, doc.dump(2) + "\n");
    } else if (out.format == "csv") {
        std::string body = csv_line({"n", "P", "Q"});
        for (const auto& pair : pairs)
            body += csv_line({std::to_string(pair.n), pair.P.to_string(), pair.Q.to_string()});
        write_out(out, body);
    } else {
        std::string body;
        for (const auto& pair : pairs)
            body += "n=" + std::to_string(pair.n) + "\n  P = " + pair.P.to_string() +
                    "\n  Q = " + pair.Q.to_string() + "\n";
        write_out(out, body);
    }
    return 0;
}

int run_dist(long m, const std::string& a_text, const OutputConfig& out) {
    Rational a = Rational::parse(a_text);
    guard_m({m});
    auto dist = pmf(m, a);
    Rational mean = mean_direct(m, a); // dual-route checked inside
    Rational asym = asymptotic_mean(m, a);
    json config{{"command", "dist"}, {"m", m}, {"a", a.to_fraction_string()}};
    bool integral_a = a.is_integer() && a >= Rational(1) && m >= 2;
    if (out.format == "json") {
        json rows = json::array();
        for (long r = 0; r <= m; ++r)
            rows.push_back(json{{"r", r}, {"p", dist.pmf[r].to_fraction_string()}});
        json doc{{"metadata", make_metadata()},
                 {"config_echo", config},
                 {"normalizer", dist.normalizer.to_fraction_string()},
                 {"mean", mean.to_fraction_string()},
                 {"asymptotic_mean", asym.to_fraction_string()},
                 {"pmf", rows}};
        if (integral_a) {
            long mode = predicted_peak(m, parse_long(a.num().get_str()));
            doc["mode"] = mode;
            doc["mode_vs_mean_gap"] = (mean - Rational(mode)).to_fraction_string();
        }
        write_out(out, doc.dump(2) + "\n");
    } else if (out.format == "csv") {
        std::string body = csv_line({"r", "p", "p_decimal"});
        for (long r = 0; r <= m; ++r)
            body += csv_line({std::to_string(r), dist.pmf[r].to_fraction_string(),
                              dist.pmf[r].to_decimal_string(out.digits)});
        write_out(out, body);
    } else {
        std::string body = "normalizer = " + dist.normalizer.to_fraction_string() +
                           "\nmean = " + mean.to_fraction_string() + " (~" +
                           mean.to_decimal_string(6) + ")\nasymptotic mean = " +
                           asym.to_fraction_string() + "\n";
        for (long r = 0; r <= m; ++r)
            body += "  P(X=" + std::to_string(r) + ") = " + dist.pmf[r].to_fraction_string() +
                    "\n";
        write_out(out, body);
    }
    return 0;
}

int run_asym(const std::string& a_text, const std::string& schedule_text,
             const OutputConfig& out) {
    long a = parse_long(a_text);
    auto schedule = parse_long_range(schedule_text);
    guard_m(schedule);
    auto rows = convergence_table(a, schedule, out.precision);
    json config{{"command", "asym"},
                {"a", a},
                {"schedule", schedule_text},
                {"precision", out.precision}};
    if (out.format == "json") {
        json arr = json::array();
        for (const auto& row : rows)
            arr.push_back(json{{"m", row.m},
                               {"scaled", row.scaled.to_string()},
                               {"limit", row.limit.to_string()},
                               {"rel_err", row.rel_err.to_string()}});
        json doc{{"metadata", make_metadata()}, {"config_echo", config}, {"rows", arr}};
        write_out(out, doc.dump(2) + "\n");
    } else if (out.format == "csv") {
        // decimal strings at the full requested precision
        std::string body = csv_line({"m", "scaled", "limit", "rel_err"});
        for (const auto& row : rows)
            body += csv_line({std::to_string(row.m), row.scaled.to_string(),
                              row.limit.to_string(), row.rel_err.to_string()});
        write_out(out, body);
    } else {
        std::string body;
        for (const auto& row : rows)
            body += "m=" + std::to_string(row.m) + "  scaled=" + row.scaled.to_string(20) +
                    "  limit=" + row.limit.to_string(20) +
                    "  rel_err=" + row.rel_err.to_string(8) + "\n";
        write_out(out, body);
    }
    return 0;
}

int run_rm(const std::string& m_text, const OutputConfig& out) {
    auto ms = parse_long_range(m_text);
    for (long m : ms)
        if (m < 0 || m > 512) throw scope_error("rm: m must be in [0, 512]");
    json rows = json::array();
    for (long m : ms)
        for (long r = 0; r <= m; ++r) {
            auto p = rm_params(r, m);
            Rational merit = m <= kMaxSequenceM ? rate_distance_product(r, m)
                                                : Rational(p.k * p.d, p.n);
            rows.push_back(json{{"m", m},
                                {"r", r},
                                {"n", p.n.get_str()},
                                {"k", p.k.get_str()},
                                {"d", p.d.get_str()},
                                {"kd_n", merit.to_fraction_string()}});
        }
    json config{{"command", "rm"}, {"m", m_text}};
    if (out.format == "json") {
        json doc{{"metadata", make_metadata()}, {"config_echo", config}, {"rows", rows}};
        write_out(out, doc.dump(2) + "\n");
    } else if (out.format == "csv") {
        std::string body = csv_line({"m", "r", "n", "k", "d", "kd_n"});
        for (const auto& row : rows)
            body += csv_line({std::to_string(row["m"].get<long>()),
                              std::to_string(row["r"].get<long>()),
                              row["n"].get<std::string>(), row["k"].get<std::string>(),
                              row["d"].get<std::string>(), row["kd_n"].get<std::string>()});
        write_out(out, body);
    } else {
        std::string body;
        for (const auto& row : rows)
            body += "RM(" + std::to_string(row["r"].get<long>()) + "," +
                    std::to_string(row["m"].get<long>()) + ") = [" +
                    row["n"].get<std::string>() + "," + row["k"].get<std::string>() + "," +
                    row["d"].get<std::string>() + "]  kd/n = " +
                    row["kd_n"].get<std::string>() + "\n";
        write_out(out, body);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify: named checks over swept ranges
// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string check_id;
    std::string a_text; // integer range or rational list, check-dependent
    std::string m_text;
    std::string l_text;
    std::string n_text;
    std::string k_text;
    bool probe = false;
};

// translates a library-thrown identity violation into a failed report so the
// sweep still emits structured output (and exit code 1)
template <typename Fn>
void run_guarded(std::vector<VerificationReport>& reports, const std::string& id,
                 const std::string& domain, Fn&& fn) {
    try {
        fn();
    } catch (const identity_violation& e) {
        VerificationReport r{id, domain};
        r.record_fail(Counterexample{{{"fatal", "identity violation"}}, e.what(), "", ""});
        reports.push_back(std::move(r));
    }
}

std::vector<VerificationReport> run_verify_checks(const VerifyArgs& args) {
    std::vector<VerificationReport> reports;
    const std::string& id = args.check_id;

    auto longs = [](const std::string& text, const char* fallback) {
        return parse_long_range(text.empty() ? fallback : text);
    };
    auto rationals = [](const std::string& text, const char* fallback) {
        return parse_rational_list(text.empty() ? fallback : text);
    };

    if (id == "log-concavity") {
        auto as = rationals(args.a_text, "1/2,1,2,7/3,5");
        auto ms = longs(args.m_text, "0:100");
        guard_m(ms);
        for (const Rational& a : as) {
            VerificationReport report{"log-concavity",
                                      "a=" + a.to_fraction_string() + " m swept"};
            for (long m : ms) {
                auto seq = f_sequence(SeqSpec(m, a));
                auto scan = is_log_concave(seq.values);
                if (scan.holds)
                    report.record_pass();
                else
                    report.record_fail(make_counterexample(
                        {{"m", std::to_string(m)},
                         {"a", a.to_fraction_string()},
                         {"k", std::to_string(*scan.first_violation)}},
                        scan.lhs, ">=", scan.rhs));
            }
            reports.push_back(std::move(report));
        }
    } else if (id == "prop31" || id == "prop32") {
        auto as = longs(args.a_text, "1:5");
        auto ms = longs(args.m_text, "2:300");
        guard_m(ms);
        for (long a : as) {
            VerificationReport agg{id, "a=" + std::to_string(a) + " m swept"};
            for (long m : ms) {
                if (m < 2) continue;
                if (id == "prop31") {
                    if (is_exceptional_m(m, a)) continue;
                    agg.merge(check_peak_rise(m, a));
                } else {
                    agg.merge(check_peak_fall(m, a));
                }
            }
            reports.push_back(std::move(agg));
        }
    } else if (id == "lemma33") {
        auto as = longs(args.a_text, "1:5");
        auto ms = longs(args.m_text, "4:300");
        guard_m(ms);
        for (long a : as) {
            VerificationReport agg{id, "a=" + std::to_string(a) + " m swept"};
            for (long m : ms) {
                if (m < 4 || m % (2 * a + 1) == 3 % (2 * a + 1)) continue;
                agg.merge(check_adjacent_pair_bound(m, a));
            }
            reports.push_back(std::move(agg));
        }
    } else if (id == "lemma35") {
        auto as = longs(args.a_text, "1:4");
        auto ks = longs(args.k_text, "3:12");
        for (long a : as) {
            VerificationReport agg{id, "a=" + std::to_string(a) + " k swept" +
                                           (args.probe ? " (probe)" : "")};
            for (long k : ks) {
                bool in_scope = (a >= 2 && k >= 3) || (a == 1 && k >= 4);
                if (args.probe)
                    agg.merge(probe_m3_class_rise(a, k));
                else if (in_scope)
                    agg.merge(check_m3_class_rise(a, k));
            }
            reports.push_back(std::move(agg));
        }
    } else if (id == "lemma38") {
        auto as = longs(args.a_text, "1:4");
        auto ls = longs(args.l_text, "0:15");
        for (long a : as) {
            VerificationReport agg{id, "a=" + std::to_string(a) + " l swept"};
            for (long l : ls) agg.merge(check_fall_base(a, l));
            reports.push_back(std::move(agg));
        }
    } else if (id == "prop41") {
        auto as = longs(args.a_text, "1:4");
        auto ls = longs(args.l_text, "0:12");
        long max_n = 0;
        for (long a : as)
            for (long l : ls) max_n = std::max(max_n, a * l + 2);
        auto pairs = build_pq(max_n);
        for (long a : as) {
            VerificationReport agg{id, "a=" + std::to_string(a) + " l,n swept"};
            for (long l : ls)
                for (long n = 0; n <= a * l + 2; ++n)
                    agg.merge(verify_remainder_identity(a, l, n, pairs));
            reports.push_back(std::move(agg));
        }
    } else if (id == "prop42" || id == "prop43") {
        auto ns = longs(args.n_text, "3:25");
        auto as = rationals(args.a_text, "1,3/2,2,5,10");
        long max_n = 0;
        for (long n : ns) max_n = std::max(max_n, n);
        auto pairs = build_pq(max_n);
        VerificationReport agg{id, "n swept, sampled a"};
        for (long n : ns) {
            if (n < 3) continue;
            agg.merge(id == "prop42" ? verify_subleading_bound(n, as, pairs)
                                     : verify_coefficient_dominance(n, as, pairs));
        }
        reports.push_back(std::move(agg));
    } else if (id == "prop51") {
        auto as = longs(args.a_text, "1:4");
        auto ms = longs(args.m_text, "2:300");
        guard_m(ms);
        for (long a : as) {
            VerificationReport agg{id, "a=" + std::to_string(a) + " m swept (m > 6(a+1))"};
            for (long m : ms)
                if (m > 6 * (a + 1)) agg.merge(check_peak_sandwich(m, a));
            reports.push_back(std::move(agg));
        }
    } else if (id == "prop71") {
        auto as = longs(args.a_text, "1:3");
        auto ls = longs(args.l_text, "0:12");
        auto ns = longs(args.n_text, "3:6");
        for (long a : as) {
            VerificationReport agg{id, "a=" + std::to_string(a) + " l,n swept (in-window)"};
            for (long n : ns)
                for (long l : ls) {
                    if (n < 3) continue;
                    bool in_window = a * l >= n - 3 &&
                                     Rational(l) <= tail_window_upper(n, Rational(a));
                    if (in_window) agg.merge(check_tail_window_rise(a, l, n));
                }
            reports.push_back(std::move(agg));
        }
    } else if (id == "chain") {
        auto as = longs(args.a_text, "1:5");
        auto ks = longs(args.k_text, "0:10");
        for (long a : as) {
            VerificationReport agg{id, "a=" + std::to_string(a) + " k swept"};
            for (long k : ks) agg.merge(check_block_chain(a, k));
            reports.push_back(std::move(agg));
        }
    } else if (id == "normalizer" || id == "mean") {
        auto as = rationals(args.a_text, "1,2,3,5/2");
        auto ms = longs(args.m_text, "0:120");
        guard_m(ms);
        for (const Rational& a : as) {
            VerificationReport agg{id, "a=" + a.to_fraction_string() + " m swept (dual route)"};
            for (long m : ms) {
                run_guarded(reports, id, "m=" + std::to_string(m), [&] {
                    if (id == "normalizer")
                        normalizer(m, a);
                    else
                        mean_direct(m, a);
                    agg.record_pass();
                });
            }
            reports.push_back(std::move(agg));
        }
    } else if (id == "rm-identity") {
        auto ms = longs(args.m_text, "0:64");
        VerificationReport agg{id, "m swept, all r"};
        for (long m : ms)
            for (long r = 0; r <= m; ++r) {
                run_guarded(reports, id,
                            "r=" + std::to_string(r) + " m=" + std::to_string(m), [&] {
                                rate_distance_product(r, m);
                                agg.record_pass();
                            });
            }
        reports.push_back(std::move(agg));
    } else {
        throw CLI::ValidationError("unknown check id '" + id + "'");
    }
    return reports;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of weighted binomial sums f(m,a,r): sequences, peaks, "
                 "inequality verification, P/Q polynomial tables, the induced distribution, "
                 "limit diagnostics and Reed-Muller parameter tables"};
    app.require_subcommand(1);

    OutputConfig out;

    // seq
    auto* seq = app.add_subcommand("seq", "Dump the exact sequence f(m,a,r) for r = 0..m");
    long seq_m = 0;
    std::string seq_a = "1";
    seq->add_option("--m", seq_m, "Sequence length parameter m")->required();
    seq->add_option("--a", seq_a, "Weight a > 0 (rational, e.g. 5/2)")->required();
    add_output_flags(seq, out);

    // peak
    auto* peak = app.add_subcommand("peak", "Observed versus predicted peak over an m-range");
    std::string peak_a = "1", peak_m = "2:300";
    peak->add_option("--a", peak_a, "Integer weight a >= 1")->required();
    peak->add_option("--m", peak_m, "Range of m, e.g. 2:300")->capture_default_str();
    add_output_flags(peak, out);

    // verify
    auto* verify =
        app.add_subcommand("verify", "Run a named exact check over swept parameter ranges");
    VerifyArgs vargs;
    verify
        ->add_option("check", vargs.check_id,
                     "One of: log-concavity, prop31, prop32, lemma33, lemma35, lemma38, "
                     "prop41, prop42, prop43, prop51, prop71, chain, normalizer, mean, "
                     "rm-identity")
        ->required();
    verify->add_option("--a", vargs.a_text, "a range (lo:hi) or rational list (1,3/2,...)");
    verify->add_option("--m", vargs.m_text, "m range");
    verify->add_option("--l", vargs.l_text, "l range");
    verify->add_option("--n", vargs.n_text, "n range");
    verify->add_option("--k", vargs.k_text, "k range");
    verify->add_flag("--probe", vargs.probe,
                     "lemma35 only: run outside the proven scope and report raw outcomes");
    add_output_flags(verify, out);

    // pq
    auto* pq = app.add_subcommand("pq", "Emit the P/Q polynomial table");
    long pq_n_max = 6;
    pq->add_option("--n-max", pq_n_max, "Largest index to build")->capture_default_str();
    add_output_flags(pq, out);

    // dist
    auto* dist = app.add_subcommand("dist", "Probability distribution report (pmf + moments)");
    long dist_m = 0;
    std::string dist_a = "1";
    dist->add_option("--m", dist_m, "m")->required();
    dist->add_option("--a", dist_a, "Weight a > 0 (rational)")->required();
    add_output_flags(dist, out);

    // asym
    auto* asym = app.add_subcommand("asym", "Convergence table for the scaled peak value");
    std::string asym_a = "1", asym_schedule = "1001,2003,4001,8003";
    asym->add_option("--a", asym_a, "Integer weight a >= 1")->capture_default_str();
    asym->add_option("--schedule", asym_schedule, "Comma list or lo:hi range of m values")
        ->capture_default_str();
    add_output_flags(asym, out);

    // rm
    auto* rm = app.add_subcommand("rm", "Reed-Muller [n,k,d] and kd/n table");
    std::string rm_m = "3";
    rm->add_option("--m", rm_m, "m range")->capture_default_str();
    add_output_flags(rm, out);

    try {
        app.parse(argc, argv);
        if (seq->parsed()) return run_seq(seq_m, seq_a, out);
        if (peak->parsed()) return run_peak(peak_a, peak_m, out);
        if (verify->parsed()) {
            auto reports = run_verify_checks(vargs);
            json config{{"command", "verify"}, {"check", vargs.check_id}};
            if (!vargs.a_text.empty()) config["a"] = vargs.a_text;
            if (!vargs.m_text.empty()) config["m"] = vargs.m_text;
            if (!vargs.l_text.empty()) config["l"] = vargs.l_text;
            if (!vargs.n_text.empty()) config["n"] = vargs.n_text;
            if (!vargs.k_text.empty()) config["k"] = vargs.k_text;
            if (vargs.probe) config["probe"] = true;
            write_out(out, render_reports(out, config, reports));
            return exit_code_for(reports);
        }
        if (pq->parsed()) return run_pq(pq_n_max, out);
        if (dist->parsed()) return run_dist(dist_m, dist_a, out);
        if (asym->parsed()) return run_asym(asym_a, asym_schedule, out);
        if (rm->parsed()) return run_rm(rm_m, out);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const identity_violation& e) {
        std::cerr << "FATAL (identity violated): " << e.what() << "\n";
        return 1;
    } catch (const scope_error& e) {
        std::cerr << "scope error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
