#include "pgamma/cli.hpp"

#include "pgamma/cmcheck.hpp"
#include "pgamma/errors.hpp"
#include "pgamma/kernel.hpp"
#include "pgamma/limit.hpp"
#include "pgamma/quad.hpp"
#include "pgamma/report.hpp"
#include "pgamma/specfun.hpp"
#include "pgamma/theta.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace pgamma::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OutputOptions {
    std::string format = "human";
    std::string output;
};

void add_output_options(CLI::App& sub, OutputOptions& o)
{
    sub.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "human"}))
        ->capture_default_str();
    sub.add_option("--output", o.output, "Write results to this file instead of stdout");
}

std::filesystem::path resolve_output(const std::string& path)
{
    std::filesystem::path p(path);
    if (p.is_relative())
        if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir)
            p = std::filesystem::path(dir) / p;
    return p;
}

void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    const std::filesystem::path target = resolve_output(path);
    std::ofstream file(target, std::ios::binary);
    if (!file)
        throw UsageError("cannot open output file " + target.string());
    file << text;
}

PIndex to_pindex(std::int64_t p, const char* flag)
{
    if (p < 1)
        throw UsageError(fmt::format("{}: p must be a positive integer, got {}", flag, p));
    return PIndex(p);
}

// ---------------------------------------------------------------------------
// config file: `key = value` lines, `#` comments; keys are long flag names

std::map<std::string, std::string> read_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("--config: cannot read " + path);
    std::map<std::string, std::string> entries;
    std::string line;
    int lineno = 0;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(fmt::format("--config: {}:{}: expected key = value", path, lineno));
        entries[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return entries;
}

// Config entries become trailing `--key=value` arguments, skipped for any key already given on the command line.
std::vector<std::string> merge_config(std::vector<std::string> args)
{
    std::string config_path;
    bool seen = false;
    for (std::size_t i = 0; i < args.size();) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size())
                throw UsageError("--config: missing file name");
            config_path = args[i + 1];
            seen = true;
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        } else if (args[i].rfind("--config=", 0) == 0) {
            config_path = args[i].substr(9);
            seen = true;
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    if (!seen)
        return args;

    auto given = [&args](const std::string& key) {
        const std::string flag = "--" + key;
        return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
    };
    // appended last so list options cannot swallow a positional
    for (const auto& [key, value] : read_config(config_path))
        if (key != "config" && !given(key))
            args.push_back("--" + key + "=" + value);
    return args;
}

// ---------------------------------------------------------------------------
// eval

struct EvalConfig {
    std::string function;
    std::int64_t p = 1;
    double alpha = 1.0;
    int n = 1;
    std::vector<double> points;
    OutputOptions output;
};

const std::vector<std::string> kEvalFunctions = {
    "gamma_p", "ln_gamma_p", "psi_p", "psi_p_nth", "digamma", "phi", "phi_prime",
    "density", "bracket", "bracket_nth", "theta", "theta_nth", "ratio"};

double evaluate(const EvalConfig& c, double point)
{
    const PIndex p = to_pindex(c.p, "--p");
    const std::string& f = c.function;
    if (f == "gamma_p") return gamma_p(p, point);
    if (f == "ln_gamma_p") return ln_gamma_p(p, point);
    if (f == "psi_p") return psi_p(p, point);
    if (f == "psi_p_nth") return psi_p_nth(p, c.n, point);
    if (f == "digamma") return digamma_ref(point);
    if (f == "phi") return phi(point);
    if (f == "phi_prime") return phi_prime(point);
    if (f == "density") return bernstein_density(p, point);
    if (f == "bracket") return bracket(p, point);
    if (f == "bracket_nth") return bracket_nth(p, c.n, point);
    if (f == "theta") return theta(ThetaParams(p, c.alpha), point);
    if (f == "theta_nth") return theta_nth(ThetaParams(p, c.alpha), c.n, point);
    if (f == "ratio") return necessity_ratio(p, point);
    throw UsageError("unknown function " + f);
}

int run_eval(const EvalConfig& c, std::ostream& out)
{
    if ((c.function == "psi_p_nth" || c.function == "bracket_nth") && c.n < 1)
        throw UsageError("--n: " + c.function + " needs n >= 1");
    to_pindex(c.p, "--p");

    std::vector<double> values;
    values.reserve(c.points.size());
    for (double pt : c.points)
        values.push_back(evaluate(c, pt));

    std::ostringstream text;
    if (c.output.format == "csv") {
        text << "function,p,alpha,n,point,value\n";
        for (std::size_t i = 0; i < values.size(); ++i)
            text << c.function << ',' << c.p << ',' << format_real(c.alpha) << ',' << c.n << ','
                 << format_real(c.points[i]) << ',' << format_real(values[i]) << '\n';
    } else if (c.output.format == "json") {
        json arr = json::array();
        for (std::size_t i = 0; i < values.size(); ++i)
            arr.push_back({{"function", c.function},
                           {"p", c.p},
                           {"alpha", c.alpha},
                           {"n", c.n},
                           {"point", c.points[i]},
                           {"value", values[i]}});
        text << arr.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < values.size(); ++i)
            fmt::print(text, "{}(p={}, alpha={}, n={}) at {:.17g} = {:.17g}\n", c.function, c.p,
                       c.alpha, c.n, c.points[i], values[i]);
    }
    emit(text.str(), c.output.output, out);
    return kSuccess;
}

// ---------------------------------------------------------------------------
// scan-cm

struct ScanConfig {
    std::string family = "theta";
    std::int64_t p = 1;
    double alpha = 1.0;
    double x_min = 0.01;
    double x_max = 100.0;
    int points = 64;
    int order = 10;
    double tol = 1e-9;
    bool expect_violation = false;
    std::string samples;
    OutputOptions output;
};

int run_scan(const ScanConfig& c, std::ostream& out, std::ostream& err)
{
    const PIndex p = to_pindex(c.p, "--p");
    if (!(c.x_max >= c.x_min))
        throw UsageError("--x-max must not be below --x-min");
    const FunctionFamily family = c.family == "psi_p_prime"
                                      ? FunctionFamily::psi_p_prime(p)
                                      : FunctionFamily::theta(ThetaParams(p, c.alpha));
    if (c.order > family.max_order())
        throw UsageError(fmt::format("--order: {} exceeds {} for {}", c.order, family.max_order(),
                                     family.id()));

    const CMScanReport report = cm_scan(family, LogGrid{c.x_min, c.x_max, c.points}, c.order, c.tol);

    std::ostringstream text;
    if (c.output.format == "csv")
        write_samples_csv(text, report);
    else if (c.output.format == "json")
        text << summary_json(report).dump(2) << '\n';
    else
        write_summary_human(text, report);
    emit(text.str(), c.output.output, out);

    if (!c.samples.empty()) {
        std::ostringstream csv;
        write_samples_csv(csv, report);
        emit(csv.str(), c.samples, out);
    }

    const bool violated = report.verdict == Verdict::violated;
    if (c.expect_violation) {
        if (!violated)
            err << "expected a violation but the scan is consistent\n";
        return violated ? kSuccess : kVerificationFailure;
    }
    return violated ? kVerificationFailure : kSuccess;
}

// ---------------------------------------------------------------------------
// verify-identities

struct IdentityConfig {
    std::uint64_t seed = 20250101;
    int draws = 100;
    double rel_tol = 1e-13;
    double abs_tol = 1e-15;
    int max_subdivisions = 4000;
    double check_tol = 1e-8;
    OutputOptions output;
};

struct IdentityRow {
    std::string identity;
    std::string parameters;
    double reference;
    double residual; // absolute; NaN when the quadrature failed
    bool pass;
    std::string note;
};

// Uniform double in [lo, hi) from the top 53 bits; independent of the
// standard library's distribution implementation.
double uniform(std::mt19937_64& rng, double lo, double hi)
{
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

int run_identities(const IdentityConfig& c, std::ostream& out, std::ostream& err)
{
    if (c.draws < 1)
        throw UsageError("--draws must be at least 1");
    QuadratureSpec spec;
    spec.rel_tol = c.rel_tol;
    spec.abs_tol = c.abs_tol;
    spec.max_subdivisions = c.max_subdivisions;
    try {
        spec.validate();
    } catch (const ArgumentError& e) {
        throw UsageError(e.what());
    }

    std::vector<IdentityRow> rows;
    auto check = [&](std::string identity, std::string params, double reference, auto&& residual_fn) {
        IdentityRow row{std::move(identity), std::move(params), reference, 0.0, false, {}};
        try {
            row.residual = residual_fn();
            row.pass = row.residual <= c.check_tol * std::max(1.0, std::abs(reference));
        } catch (const ConvergenceError& e) {
            row.residual = std::nan("");
            row.note = e.what();
        }
        rows.push_back(std::move(row));
    };

    std::mt19937_64 rng(c.seed);
    for (int i = 0; i < c.draws; ++i) {
        const double a = uniform(rng, 0.1, 10.0);
        const double b = uniform(rng, 0.1, 10.0);
        check("log", fmt::format("a={:.17g};b={:.17g}", a, b), std::log(b / a),
              [&] { return verify_log_identity(a, b, spec); });
    }
    for (int i = 0; i < c.draws; ++i) {
        const double omega = uniform(rng, 0.3, 5.0);
        const double x = uniform(rng, 0.2, 10.0);
        check("power", fmt::format("omega={:.17g};x={:.17g}", omega, x), std::pow(x, -omega),
              [&] { return verify_power_identity(omega, x, spec); });
    }
    for (std::int64_t pv : {1, 2, 5, 10, 50})
        for (double x : {0.1, 0.5, 1.0, 2.0, 10.0, 100.0}) {
            const PIndex p(pv);
            const double ref = psi_p(p, x);
            check("psi_p_integral", fmt::format("p={};x={:.17g}", pv, x), ref,
                  [&] { return std::abs(psi_p_via_integral(p, x, spec) - ref); });
        }
    for (std::int64_t pv : {1, 2, 5, 10})
        for (double x : {0.1, 0.5, 1.0, 2.0, 10.0}) {
            const PIndex p(pv);
            const double ref = theta(ThetaParams(p, 1.0), x);
            check("theta1_integral", fmt::format("p={};x={:.17g}", pv, x), ref,
                  [&] { return std::abs(theta1_via_integral(p, x, spec) - ref); });
            check("theta1_density", fmt::format("p={};x={:.17g}", pv, x), ref,
                  [&] { return std::abs(theta1_via_density(p, x, spec) - ref); });
        }

    std::ostringstream text;
    if (c.output.format == "csv") {
        text << "identity,parameters,reference,residual,pass\n";
        for (const IdentityRow& r : rows)
            text << r.identity << ',' << r.parameters << ',' << format_real(r.reference) << ','
                 << format_real(r.residual) << ',' << (r.pass ? "true" : "false") << '\n';
    } else if (c.output.format == "json") {
        json arr = json::array();
        for (const IdentityRow& r : rows) {
            json row = {{"identity", r.identity},
                        {"parameters", r.parameters},
                        {"reference", r.reference}};
            row["residual"] = std::isnan(r.residual) ? json(nullptr) : json(r.residual);
            row["pass"] = r.pass;
            arr.push_back(std::move(row));
        }
        text << json{{"seed", c.seed}, {"check_tol", c.check_tol}, {"rows", arr}}.dump(2) << '\n';
    } else {
        std::map<std::string, std::pair<double, int>> worst; // identity -> (max residual, failures)
        std::vector<std::string> order;
        for (const IdentityRow& r : rows) {
            auto [it, fresh] = worst.try_emplace(r.identity, 0.0, 0);
            if (fresh)
                order.push_back(r.identity);
            if (!std::isnan(r.residual))
                it->second.first = std::max(it->second.first, r.residual);
            if (!r.pass)
                ++it->second.second;
        }
        fmt::print(text, "{:<18} {:>24} {:>9}\n", "identity", "worst residual", "failures");
        for (const std::string& id : order)
            fmt::print(text, "{:<18} {:>24.17g} {:>9}\n", id, worst[id].first, worst[id].second);
    }
    emit(text.str(), c.output.output, out);

    int failures = 0;
    for (const IdentityRow& r : rows)
        if (!r.pass) {
            ++failures;
            err << "FAIL " << r.identity << ' ' << r.parameters << " residual "
                << format_real(r.residual) << (r.note.empty() ? "" : " (" + r.note + ")") << '\n';
        }
    return failures == 0 ? kSuccess : kVerificationFailure;
}

// ---------------------------------------------------------------------------
// limit-study

struct LimitConfig {
    std::vector<double> x_list = {0.5, 1.0, 2.0, 10.0};
    std::vector<std::int64_t> p_list = {1000, 10000, 100000, 1000000};
    std::vector<std::int64_t> ratio_p_list = {1, 5, 20};
    std::vector<double> ratio_x_list = {1e2, 1e3, 1e4, 1e5, 1e6};
    OutputOptions output;
};

int run_limit(const LimitConfig& c, std::ostream& out)
{
    if (c.x_list.empty())
        throw UsageError("--x-list must not be empty");
    if (c.p_list.empty())
        throw UsageError("--p-list must not be empty");
    if (c.ratio_p_list.empty() || c.ratio_x_list.empty())
        throw UsageError("--ratio-p-list and --ratio-x-list must not be empty");
    for (std::int64_t p : c.p_list)
        to_pindex(p, "--p-list");
    for (std::int64_t p : c.ratio_p_list)
        to_pindex(p, "--ratio-p-list");

    struct ErrRow { double x; std::int64_t p; double value; double reference; };
    struct OrderRow { double x; double order; };
    struct RatioRow { std::int64_t p; double x; double ratio; };
    std::vector<ErrRow> errs;
    std::vector<OrderRow> orders;
    std::vector<RatioRow> ratios;

    for (double x : c.x_list) {
        const double ref = digamma_ref(x);
        std::vector<double> ps, es;
        for (std::int64_t p : c.p_list) {
            const double v = psi_p(PIndex(p), x);
            errs.push_back({x, p, v, ref});
            ps.push_back(static_cast<double>(p));
            es.push_back(std::abs(v - ref));
        }
        double order = std::nan("");
        if (ps.size() > 1 && std::all_of(es.begin(), es.end(), [](double e) { return e > 0.0; }))
            order = fitted_order(ps, es);
        orders.push_back({x, order});
    }
    for (std::int64_t p : c.ratio_p_list)
        for (double x : c.ratio_x_list)
            ratios.push_back({p, x, necessity_ratio(PIndex(p), x)});

    std::ostringstream text;
    if (c.output.format == "csv") {
        text << "table,p,x,value,reference,abs_error\n";
        for (const ErrRow& r : errs)
            text << "psi_error," << r.p << ',' << format_real(r.x) << ',' << format_real(r.value)
                 << ',' << format_real(r.reference) << ','
                 << format_real(std::abs(r.value - r.reference)) << '\n';
        for (const OrderRow& r : orders)
            text << "order,," << format_real(r.x) << ',' << format_real(r.order) << ",,\n";
        for (const RatioRow& r : ratios)
            text << "ratio," << r.p << ',' << format_real(r.x) << ',' << format_real(r.ratio)
                 << ",,\n";
    } else if (c.output.format == "json") {
        json j;
        j["psi_error"] = json::array();
        for (const ErrRow& r : errs)
            j["psi_error"].push_back({{"p", r.p},
                                      {"x", r.x},
                                      {"psi_p", r.value},
                                      {"digamma", r.reference},
                                      {"abs_error", std::abs(r.value - r.reference)}});
        j["order"] = json::array();
        for (const OrderRow& r : orders)
            j["order"].push_back({{"x", r.x}, {"fitted_order", r.order}});
        j["ratio"] = json::array();
        for (const RatioRow& r : ratios)
            j["ratio"].push_back({{"p", r.p}, {"x", r.x}, {"ratio", r.ratio}});
        text << j.dump(2) << '\n';
    } else {
        fmt::print(text, "{:>8} {:>10} {:>24} {:>24} {:>12}\n", "x", "p", "psi_p", "digamma",
                   "abs error");
        for (const ErrRow& r : errs)
            fmt::print(text, "{:>8} {:>10} {:>24.17g} {:>24.17g} {:>12.4e}\n", r.x, r.p, r.value,
                       r.reference, std::abs(r.value - r.reference));
        fmt::print(text, "\n{:>8} {:>14}\n", "x", "fitted order");
        for (const OrderRow& r : orders)
            fmt::print(text, "{:>8} {:>14.6f}\n", r.x, r.order);
        fmt::print(text, "\n{:>6} {:>10} {:>24}\n", "p", "x", "necessity ratio");
        for (const RatioRow& r : ratios)
            fmt::print(text, "{:>6} {:>10} {:>24.17g}\n", r.p, r.x, r.ratio);
    }
    emit(text.str(), c.output.output, out);
    return kSuccess;
}

// ---------------------------------------------------------------------------
// find-violation

struct ViolationConfig {
    std::int64_t p = 1;
    double alpha = 2.0;
    ViolationSearch search;
    OutputOptions output;
};

int run_violation(const ViolationConfig& c, std::ostream& out, std::ostream& err)
{
    const PIndex p = to_pindex(c.p, "--p");
    if (!(c.alpha > 1.0))
        throw UsageError(fmt::format("--alpha: {} <= 1 admits no violation", c.alpha));
    const auto witness = find_cm_violation(ThetaParams(p, c.alpha), c.search);

    std::ostringstream text;
    if (c.output.format == "csv") {
        text << "p,alpha,found,n,x,value\n";
        text << c.p << ',' << format_real(c.alpha) << ',' << (witness ? "true" : "false");
        if (witness)
            text << ',' << witness->n << ',' << format_real(witness->x) << ','
                 << format_real(witness->value);
        else
            text << ",,,";
        text << '\n';
    } else if (c.output.format == "json") {
        json j{{"p", c.p}, {"alpha", c.alpha}};
        if (witness)
            j["witness"] = {{"n", witness->n}, {"x", witness->x}, {"value", witness->value}};
        else
            j["witness"] = nullptr;
        text << j.dump(2) << '\n';
    } else if (witness) {
        fmt::print(text, "theta(p={}, alpha={}) violates complete monotonicity\n", c.p, c.alpha);
        fmt::print(text, "  n = {}\n  x = {:.17g}\n  (-1)^n theta^(n)(x) = {:.17g}\n", witness->n,
                   witness->x, witness->value);
    } else {
        fmt::print(text, "no violation found for theta(p={}, alpha={}) on the search grid\n", c.p,
                   c.alpha);
    }
    emit(text.str(), c.output.output, out);
    if (!witness)
        err << "search grid exhausted without a witness\n";
    return witness ? kSuccess : kVerificationFailure;
}

} // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"p-psi function family and complete-monotonicity checks", "pgamma"};
    app.require_subcommand(1);
    std::string config_file;
    app.add_option("--config", config_file, "key = value file; command-line flags take precedence");

    EvalConfig eval;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a function at one or more points");
    eval_cmd->add_option("function", eval.function, "Function to evaluate")
        ->required()
        ->check(CLI::IsMember(kEvalFunctions));
    eval_cmd->add_option("--p", eval.p, "Index p >= 1")->capture_default_str();
    eval_cmd->add_option("--alpha", eval.alpha, "Exponent alpha")->capture_default_str();
    eval_cmd->add_option("--n", eval.n, "Derivative order")
        ->check(CLI::Range(0, kMaxDerivOrder))
        ->capture_default_str();
    eval_cmd->add_option("--x,--t", eval.points, "Evaluation points (comma separated)")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    add_output_options(*eval_cmd, eval.output);

    ScanConfig scan;
    auto* scan_cmd = app.add_subcommand("scan-cm", "Scan (-1)^n f^(n)(x) over an (n, x) grid");
    scan_cmd->add_option("--family", scan.family)
        ->check(CLI::IsMember({"theta", "psi_p_prime"}))
        ->capture_default_str();
    scan_cmd->add_option("--p", scan.p, "Index p >= 1")->capture_default_str();
    scan_cmd->add_option("--alpha", scan.alpha)->capture_default_str();
    scan_cmd->add_option("--x-min", scan.x_min)->check(CLI::PositiveNumber)->capture_default_str();
    scan_cmd->add_option("--x-max", scan.x_max)->check(CLI::PositiveNumber)->capture_default_str();
    scan_cmd->add_option("--points", scan.points)->check(CLI::Range(1, 1000000))->capture_default_str();
    scan_cmd->add_option("--order", scan.order)
        ->check(CLI::Range(0, kMaxDerivOrder))
        ->capture_default_str();
    scan_cmd->add_option("--tol", scan.tol)->check(CLI::NonNegativeNumber)->capture_default_str();
    scan_cmd->add_flag("--expect-violation", scan.expect_violation,
                       "Succeed only if a violation is found");
    scan_cmd->add_option("--samples", scan.samples, "Also write per-sample CSV to this file");
    add_output_options(*scan_cmd, scan.output);

    IdentityConfig ident;
    auto* ident_cmd = app.add_subcommand("verify-identities", "Check the integral identities");
    ident_cmd->add_option("--seed", ident.seed)->capture_default_str();
    ident_cmd->add_option("--draws", ident.draws)->check(CLI::PositiveNumber)->capture_default_str();
    ident_cmd->add_option("--rel-tol", ident.rel_tol)->check(CLI::PositiveNumber)->capture_default_str();
    ident_cmd->add_option("--abs-tol", ident.abs_tol)->check(CLI::PositiveNumber)->capture_default_str();
    ident_cmd->add_option("--max-subdivisions", ident.max_subdivisions)
        ->check(CLI::Range(10, 1000000))
        ->capture_default_str();
    ident_cmd->add_option("--check-tol", ident.check_tol)
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_output_options(*ident_cmd, ident.output);

    LimitConfig limit;
    auto* limit_cmd = app.add_subcommand("limit-study", "psi_p -> digamma and the necessity ratio");
    limit_cmd->add_option("--x-list", limit.x_list)->delimiter(',')->check(CLI::PositiveNumber);
    limit_cmd->add_option("--p-list", limit.p_list)->delimiter(',');
    limit_cmd->add_option("--ratio-p-list", limit.ratio_p_list)->delimiter(',');
    limit_cmd->add_option("--ratio-x-list", limit.ratio_x_list)
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    add_output_options(*limit_cmd, limit.output);

    ViolationConfig viol;
    auto* viol_cmd = app.add_subcommand("find-violation", "Locate a point where theta' > 0 (alpha > 1)");
    viol_cmd->add_option("--p", viol.p)->capture_default_str();
    viol_cmd->add_option("--alpha", viol.alpha)->capture_default_str();
    viol_cmd->add_option("--x-start", viol.search.start)->check(CLI::PositiveNumber)->capture_default_str();
    viol_cmd->add_option("--growth", viol.search.growth)->capture_default_str();
    viol_cmd->add_option("--x-max", viol.search.x_max)->check(CLI::PositiveNumber)->capture_default_str();
    viol_cmd->add_option("--x-min", viol.search.x_min)->check(CLI::PositiveNumber)->capture_default_str();
    viol_cmd->add_option("--tol", viol.search.tol)->check(CLI::NonNegativeNumber)->capture_default_str();
    add_output_options(*viol_cmd, viol.output);

    try {
        std::vector<std::string> args = merge_config(raw_args);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (*eval_cmd)
            return run_eval(eval, out);
        if (*scan_cmd)
            return run_scan(scan, out, err);
        if (*ident_cmd)
            return run_identities(ident, out, err);
        if (*limit_cmd)
            return run_limit(limit, out);
        if (*viol_cmd)
            return run_violation(viol, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    }
    return kUsageError;
}

} // namespace pgamma::cli
