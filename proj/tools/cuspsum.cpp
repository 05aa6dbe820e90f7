// Command-line front end: builds sieve and coefficient tables, runs the
// summatory / envelope / series / exponent checks, and emits CSV or JSON for
// offline plotting. Runs are deterministic for a fixed flag set (and seed); all
// output is buffered and written once at the end. Exit codes: 0 = checks pass,
// 1 = a mathematical check failed, 2 = usage or configuration error.

#include "cuspsum/dirichlet.hpp"
#include "cuspsum/envelope.hpp"
#include "cuspsum/exponents.hpp"
#include "cuspsum/main_term.hpp"
#include "cuspsum/satake.hpp"
#include "cuspsum/sieve.hpp"
#include "cuspsum/summatory.hpp"
#include "cuspsum/tau.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using nlohmann::ordered_json;
using namespace cuspsum;

namespace {

struct GridSpec {
    Real start = 0;
    Real stop = 0;
    unsigned points = 0;
    bool log_spaced = true;
};

Real parse_real(const std::string& s, const char* what) {
    char* end = nullptr;
    Real v = std::strtold(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw std::invalid_argument(std::string(what) + ": not a number: '" + s + "'");
    return v;
}

// start:stop:points[:log|lin]
GridSpec parse_grid(const std::string& spec) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : spec) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    if (parts.size() < 3 || parts.size() > 4)
        throw std::invalid_argument("grid spec must be start:stop:points[:log|lin]");
    GridSpec g;
    g.start = parse_real(parts[0], "grid start");
    g.stop = parse_real(parts[1], "grid stop");
    g.points = (unsigned)std::stoul(parts[2]);
    if (parts.size() == 4) {
        if (parts[3] == "log") g.log_spaced = true;
        else if (parts[3] == "lin") g.log_spaced = false;
        else throw std::invalid_argument("grid spacing must be 'log' or 'lin'");
    }
    if (!(g.start >= 1) || !(g.stop >= g.start))
        throw std::invalid_argument("grid needs 1 <= start <= stop");
    if (g.points < 1) throw std::invalid_argument("grid needs at least one point");
    return g;
}

std::vector<uint64_t> integer_grid(const GridSpec& g) {
    std::vector<uint64_t> xs;
    for (unsigned i = 0; i < g.points; ++i) {
        Real t = g.points == 1 ? 0.0L : (Real)i / (Real)(g.points - 1);
        Real v = g.log_spaced ? g.start * std::pow(g.stop / g.start, t)
                              : g.start + (g.stop - g.start) * t;
        xs.push_back((uint64_t)llroundl(v));
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

std::vector<uint64_t> default_decades(uint64_t limit) {
    std::vector<uint64_t> xs;
    for (uint64_t x = 10; x <= limit; x *= 10) xs.push_back(x);
    if (xs.empty() || xs.back() != limit) xs.push_back(limit);
    return xs;
}

int precision_from_env() {
    const char* e = std::getenv("CUSPSUM_PRECISION");
    if (!e || !*e) return 15;
    char* end = nullptr;
    long v = std::strtol(e, &end, 10);
    if (*end != '\0' || v < 1 || v > 36)
        throw std::invalid_argument("CUSPSUM_PRECISION must be an integer in [1, 36]");
    return (int)v;
}

void emit(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write output file: " + path);
    f << payload;
    f.flush();
    if (!f.good()) throw std::invalid_argument("failed while writing output file: " + path);
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (format == a) return;
    throw std::invalid_argument("unsupported format '" + format + "'");
}

// ---- sieve ----------------------------------------------------------------

int cmd_sieve(uint64_t limit, uint32_t segment, const std::string& format,
              const std::string& out, int /*digits*/) {
    require_format(format, {"csv", "json"});
    auto sv = build_sieves(limit);
    int64_t seg = mertens_segmented(limit, segment);
    bool agrees = seg == (int64_t)sv.mertens[limit];
    std::string payload;
    if (format == "csv") {
        std::ostringstream os;
        os << "n,mobius,mertens,divisors\n";
        for (uint64_t n = 1; n <= limit; ++n)
            os << n << ',' << (int)sv.mobius[n] << ',' << sv.mertens[n] << ','
               << sv.divisors[n] << '\n';
        payload = os.str();
    } else {
        ordered_json j;
        j["command"] = "sieve";
        j["limit"] = limit;
        j["segment_size"] = segment;
        j["segmented_mertens"] = seg;
        j["segmented_agrees"] = agrees;
        auto rows = ordered_json::array();
        for (uint64_t n = 1; n <= limit; ++n)
            rows.push_back({{"n", n},
                            {"mobius", (int)sv.mobius[n]},
                            {"mertens", sv.mertens[n]},
                            {"divisors", sv.divisors[n]}});
        j["rows"] = std::move(rows);
        payload = j.dump(2) + "\n";
    }
    emit(out, payload);
    if (!agrees) {
        std::cerr << "check failed: segmented Mertens " << seg << " != table "
                  << sv.mertens[limit] << "\n";
        return 1;
    }
    return 0;
}

// ---- shared system construction --------------------------------------------

struct ExactSystemBundle {
    SatakeSystem<BigInt> system;
    std::string name;
};

ExactSystemBundle make_exact_system(const std::string& spec, const SieveTables& sv,
                                    uint64_t limit, uint64_t tau_limit, uint64_t seed) {
    ExactSystemBundle b;
    b.name = spec;
    if (spec == "d") {
        b.system = divisor_system(sv, limit);
    } else if (spec == "tau") {
        auto tau = tau_table(std::max(tau_limit, limit));
        b.system = tau_prime_system(tau, sv);
    } else if (spec == "random") {
        b.system = random_system(sv, limit, seed);
    } else if (std::filesystem::exists(spec)) {
        b.system = load_system(spec);
    } else {
        throw std::invalid_argument("unknown system '" + spec +
                                    "' (expected d, tau, random, or a system file path)");
    }
    return b;
}

// ---- sum --------------------------------------------------------------------

int cmd_sum(const std::string& system_spec, uint64_t limit, uint64_t tau_limit,
            const std::string& grid_spec, uint64_t seed, const std::string& table_out,
            const std::string& save_system_path, const std::string& format,
            const std::string& out, int digits) {
    require_format(format, {"csv", "json"});
    std::vector<uint64_t> xs;
    if (!grid_spec.empty()) {
        xs = integer_grid(parse_grid(grid_spec));
        if (limit == 0) limit = xs.back();
    } else {
        if (limit == 0) limit = 10000;
        xs = default_decades(limit);
    }
    if (xs.back() > limit)
        throw std::invalid_argument("grid reaches " + std::to_string(xs.back()) +
                                    " but --limit is " + std::to_string(limit));
    auto sv = build_sieves(limit);
    auto bundle = make_exact_system(system_spec, sv, limit, tau_limit, seed);
    auto tables = build_summatory(bundle.system, limit, sv);

    std::vector<HyperbolaReport<BigInt>> reports;
    reports.reserve(xs.size());
    bool all_equal = true;
    for (uint64_t x : xs) {
        reports.push_back(hyperbola_decompose(tables, sv, x));
        all_equal = all_equal && reports.back().equal;
    }

    std::string payload;
    if (format == "csv") {
        std::ostringstream os;
        os << "x,sigma1,sigma2,direct,equal\n";
        for (const auto& r : reports)
            os << r.x << ',' << r.sigma1.get_str() << ',' << r.sigma2.get_str() << ','
               << r.direct.get_str() << ',' << bool_str(r.equal) << '\n';
        payload = os.str();
    } else {
        ordered_json j;
        j["command"] = "sum";
        j["system"] = bundle.name;
        j["label"] = bundle.system.label;
        j["kind"] = bundle.system.kind == HeckeKind::weighted ? "weighted" : "normalized";
        if (bundle.system.kind == HeckeKind::weighted) j["weight"] = bundle.system.weight;
        if (system_spec == "random") j["seed"] = seed;
        j["limit"] = limit;
        j["all_equal"] = all_equal;
        auto rows = ordered_json::array();
        for (const auto& r : reports)
            rows.push_back({{"x", r.x},
                            {"sigma1", r.sigma1.get_str()},
                            {"sigma2", r.sigma2.get_str()},
                            {"direct", r.direct.get_str()},
                            {"equal", r.equal}});
        j["reports"] = std::move(rows);
        payload = j.dump(2) + "\n";
    }

    if (!table_out.empty()) {
        std::ofstream tf(table_out, std::ios::binary);
        if (!tf) throw std::invalid_argument("cannot write table file: " + table_out);
        export_table_csv(tables.f, tf, digits);
    }
    if (!save_system_path.empty()) save_system(bundle.system, save_system_path);
    emit(out, payload);
    if (!all_equal) {
        std::cerr << "check failed: hyperbola decomposition disagrees with direct sum\n";
        return 1;
    }
    return 0;
}

// ---- envelope -----------------------------------------------------------------

std::vector<std::pair<Real, Real>> read_xy_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::vector<std::pair<Real, Real>> pts;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected 'x,value'");
        char* end = nullptr;
        std::string xs = line.substr(0, comma), fs = line.substr(comma + 1);
        Real x = std::strtold(xs.c_str(), &end);
        bool x_ok = end != xs.c_str() && *end == '\0';
        Real F = std::strtold(fs.c_str(), &end);
        bool f_ok = end != fs.c_str() && *end == '\0';
        if (!x_ok || !f_ok) {
            if (lineno == 1) continue; // header row
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": not numeric: '" + line + "'");
        }
        pts.emplace_back(x, F);
    }
    if (pts.empty()) throw std::invalid_argument(path + ": no data rows");
    return pts;
}

int cmd_envelope(const std::string& system_spec, const std::string& input,
                 std::optional<double> scale_opt, uint64_t limit, uint64_t tau_limit,
                 const std::string& grid_spec, uint64_t seed, const std::string& format,
                 const std::string& out, int digits) {
    require_format(format, {"csv", "json"});
    std::vector<std::pair<Real, Real>> pts;
    std::string source;
    Real scale;
    if (!input.empty()) {
        pts = read_xy_csv(input);
        source = "file:" + input;
        scale = scale_opt ? (Real)*scale_opt : 1.0L;
    } else {
        auto grid = integer_grid(parse_grid(grid_spec));
        if (limit == 0) limit = grid.back();
        if (grid.back() > limit)
            throw std::invalid_argument("grid reaches " + std::to_string(grid.back()) +
                                        " but --limit is " + std::to_string(limit));
        auto sv = build_sieves(limit);
        source = system_spec;
        if (system_spec == "tau-normalized") {
            auto tau = tau_table(std::max(tau_limit, limit));
            auto sys = tau_normalized_system(tau, sv);
            auto tables = build_summatory(sys, limit, sv);
            for (uint64_t x : grid)
                pts.emplace_back((Real)x, tables.direct_square_sum(x));
            scale = scale_opt ? (Real)*scale_opt : 1.0L;
        } else {
            auto bundle = make_exact_system(system_spec, sv, limit, tau_limit, seed);
            auto tables = build_summatory(bundle.system, limit, sv);
            for (uint64_t x : grid)
                pts.emplace_back((Real)x, to_real(tables.direct_square_sum(x)));
            Real default_scale = bundle.system.kind == HeckeKind::weighted
                                     ? (Real)bundle.system.weight
                                     : 1.0L;
            scale = scale_opt ? (Real)*scale_opt : default_scale;
        }
    }
    auto fit = envelope_fit(pts, scale);

    std::string payload;
    if (format == "csv") {
        std::ostringstream os;
        os << "x,abs_sum,eta,bound_ratio\n";
        for (const auto& p : fit.grid)
            os << format_real(p.x, digits) << ',' << format_real(p.abs_sum, digits) << ','
               << format_real(p.eta, digits) << ',' << format_real(p.bound_ratio, digits)
               << '\n';
        os << "# fitted_constant," << format_real(fit.fitted_constant, digits) << '\n';
        os << "# exponent_scale," << format_real(fit.exponent_scale, digits) << '\n';
        os << "# skipped_zero," << fit.skipped_zero << '\n';
        payload = os.str();
    } else {
        ordered_json j;
        j["command"] = "envelope";
        j["system"] = source;
        j["scale"] = (double)fit.exponent_scale;
        j["fitted_constant"] = (double)fit.fitted_constant;
        j["skipped_zero"] = fit.skipped_zero;
        auto rows = ordered_json::array();
        for (const auto& p : fit.grid)
            rows.push_back({{"x", (double)p.x},
                            {"abs_sum", (double)p.abs_sum},
                            {"eta", (double)p.eta},
                            {"bound_ratio", (double)p.bound_ratio}});
        j["grid"] = std::move(rows);
        payload = j.dump(2) + "\n";
    }
    emit(out, payload);
    return 0;
}

// ---- dirichlet ----------------------------------------------------------------

int cmd_dirichlet(const std::string& system_spec, double s_in, uint64_t limit,
                  uint32_t smooth_limit, uint64_t tau_limit, uint64_t seed,
                  const std::string& format, const std::string& out, int digits) {
    require_format(format, {"csv", "json"});
    Real s = (Real)s_in;
    SeriesCheck check;
    std::string check_name;
    unsigned kappa = 1;
    auto sv = build_sieves(limit);
    if (system_spec.empty()) {
        check = dsquare_identity_check(sv, s, limit);
        check_name = "dsquare";
    } else {
        check_name = "euler-product";
        if (system_spec == "tau") {
            auto tau = tau_table(std::max(tau_limit, limit));
            kappa = 12;
            check = euler_product_check(tau, kappa, s, smooth_limit, limit, sv);
        } else {
            auto bundle = make_exact_system(system_spec, sv, limit, tau_limit, seed);
            kappa = bundle.system.kind == HeckeKind::weighted ? bundle.system.weight : 1;
            auto table = hecke_expand(bundle.system, limit, sv);
            check = euler_product_check(table, kappa, s, smooth_limit, limit, sv);
        }
    }

    std::string payload;
    if (format == "csv") {
        std::ostringstream os;
        os << "s,N,partial,reference,abs_error,tail_bound,pass\n";
        os << format_real(check.s, digits) << ',' << check.terms << ','
           << format_real(check.partial, digits) << ',' << format_real(check.reference, digits)
           << ',' << format_real(check.abs_error, digits) << ','
           << format_real(check.tail_bound, digits) << ',' << bool_str(check.pass) << '\n';
        payload = os.str();
    } else {
        ordered_json j;
        j["command"] = "dirichlet";
        j["check"] = check_name;
        if (!system_spec.empty()) {
            j["system"] = system_spec;
            j["kappa"] = kappa;
            j["smooth_limit"] = smooth_limit;
        }
        j["s"] = (double)check.s;
        j["N"] = check.terms;
        j["partial"] = (double)check.partial;
        j["reference"] = (double)check.reference;
        j["abs_error"] = (double)check.abs_error;
        j["tail_bound"] = (double)check.tail_bound;
        j["pass"] = check.pass;
        payload = j.dump(2) + "\n";
    }
    emit(out, payload);
    if (!check.pass) {
        std::cerr << "check failed: partial sum differs from reference beyond the tail bound\n";
        return 1;
    }
    return 0;
}

// ---- exponents ------------------------------------------------------------------

int cmd_exponents(const std::string& alpha_str, const std::string& c_str,
                  const std::string& format, const std::string& out, int /*digits*/) {
    require_format(format, {"text", "json"});
    Rational alpha = parse_rational(alpha_str);
    Rational cm = c_max(alpha);
    std::vector<Rational> cs;
    for (int k = 1; k <= 7; ++k) cs.push_back(Rational(Rational(k) * cm / 8));
    if (!c_str.empty()) {
        Rational c = parse_rational(c_str);
        if (c <= 0) throw std::invalid_argument("--c must be positive");
        cs.push_back(c);
    }

    struct Row {
        Rational c;
        std::optional<Rational> beta;
        DominanceReport dom;
    };
    std::vector<Row> rows;
    bool all_equiv = true;
    for (const auto& c : cs) {
        Row r{c, std::nullopt, dominance_check(alpha, c)};
        if (c < 1 - alpha) r.beta = beta_of(alpha, c);
        all_equiv = all_equiv && r.dom.window_equivalence;
        rows.push_back(std::move(r));
    }

    std::string payload;
    if (format == "text") {
        std::ostringstream os;
        os << "alpha  " << alpha.get_str() << "\n";
        os << "c_max  " << cm.get_str() << "\n\n";
        os << std::left << std::setw(14) << "c" << std::setw(14) << "beta"
           << std::setw(13) << "scaled<1/2" << std::setw(11) << "growth<1"
           << std::setw(12) << "c<1-alpha" << std::setw(12) << "admissible"
           << "equivalence\n";
        for (const auto& r : rows)
            os << std::left << std::setw(14) << r.c.get_str() << std::setw(14)
               << (r.beta ? r.beta->get_str() : std::string("-")) << std::setw(13)
               << bool_str(r.dom.scaled_c_below_half) << std::setw(11)
               << bool_str(r.dom.growth_below_one) << std::setw(12)
               << bool_str(r.dom.c_below_complement) << std::setw(12)
               << bool_str(r.dom.c_admissible) << bool_str(r.dom.window_equivalence)
               << '\n';
        payload = os.str();
    } else {
        ordered_json j;
        j["command"] = "exponents";
        j["alpha"] = alpha.get_str();
        j["c_max"] = cm.get_str();
        auto jrows = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json row;
            row["c"] = r.c.get_str();
            if (r.beta) row["beta"] = r.beta->get_str();
            else row["beta"] = nullptr;
            row["scaled_c_below_half"] = r.dom.scaled_c_below_half;
            row["growth_below_one"] = r.dom.growth_below_one;
            row["c_below_complement"] = r.dom.c_below_complement;
            row["c_admissible"] = r.dom.c_admissible;
            row["window_equivalence"] = r.dom.window_equivalence;
            jrows.push_back(std::move(row));
        }
        j["rows"] = std::move(jrows);
        j["all_equivalences_hold"] = all_equiv;
        payload = j.dump(2) + "\n";
    }
    emit(out, payload);
    if (!all_equiv) {
        std::cerr << "check failed: window equivalence violated\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"summatory and series checks for multiplicative coefficient systems"};
    app.require_subcommand(1);

    int digits = 15;

    // sieve
    auto* sieve = app.add_subcommand("sieve", "emit Moebius / Mertens / divisor tables");
    uint64_t sieve_limit = 1000;
    uint32_t segment_size = 1u << 20;
    std::string sieve_format = "csv", sieve_out;
    sieve->add_option("--limit", sieve_limit, "table limit");
    sieve->add_option("--segment-size", segment_size, "window size for the segmented recheck");
    sieve->add_option("--format", sieve_format, "csv or json");
    sieve->add_option("--out", sieve_out, "output path (default stdout)");

    // sum
    auto* sum = app.add_subcommand("sum", "hyperbola decomposition against the direct sum");
    std::string sum_system = "d", sum_grid, sum_table_out, sum_save_system;
    std::string sum_format = "csv", sum_out;
    uint64_t sum_limit = 0, sum_tau_limit = 0, sum_seed = 1;
    sum->add_option("--system", sum_system, "d, tau, random, or a system file path");
    sum->add_option("--limit", sum_limit, "table limit (default: grid stop)");
    sum->add_option("--tau-limit", sum_tau_limit, "series cutoff for the tau table");
    sum->add_option("--grid", sum_grid, "x grid as start:stop:points[:log|lin]");
    sum->add_option("--seed", sum_seed, "seed for the random system");
    sum->add_option("--table-out", sum_table_out, "also export the coefficient table (n,value)");
    sum->add_option("--save-system", sum_save_system, "write the system's prime data to a file");
    sum->add_option("--format", sum_format, "csv or json");
    sum->add_option("--out", sum_out, "output path (default stdout)");

    // envelope
    auto* env = app.add_subcommand("envelope", "decay-envelope fit of |F(x)|");
    std::string env_system = "tau-normalized", env_input, env_grid = "100:100000:4:log";
    std::string env_format = "csv", env_out;
    std::optional<double> env_scale;
    uint64_t env_limit = 0, env_tau_limit = 0, env_seed = 1;
    env->add_option("--system", env_system, "tau-normalized, d, tau, random, or a system file");
    env->add_option("--input", env_input, "read (x, F) pairs from a CSV file instead");
    env->add_option("--scale", env_scale, "scale exponent (default 1; 12 for exact tau)");
    env->add_option("--limit", env_limit, "table limit (default: grid stop)");
    env->add_option("--tau-limit", env_tau_limit, "series cutoff for the tau table");
    env->add_option("--grid", env_grid, "x grid as start:stop:points[:log|lin]");
    env->add_option("--seed", env_seed, "seed for the random system");
    env->add_option("--format", env_format, "csv or json");
    env->add_option("--out", env_out, "output path (default stdout)");

    // dirichlet
    auto* dir = app.add_subcommand("dirichlet", "partial-sum checks against closed forms");
    std::string dir_system, dir_format = "csv", dir_out;
    double dir_s = 2.0;
    uint64_t dir_limit = 100000, dir_tau_limit = 0, dir_seed = 1;
    uint32_t dir_smooth = 100;
    dir->add_option("--system", dir_system,
                    "Euler-product check for d, tau, random, or a system file "
                    "(default: the d(n^2) identity)");
    dir->add_option("--s", dir_s, "evaluation point of the series");
    dir->add_option("--limit", dir_limit, "number of series terms");
    dir->add_option("--smooth-limit", dir_smooth, "largest prime in the Euler product");
    dir->add_option("--tau-limit", dir_tau_limit, "series cutoff for the tau table");
    dir->add_option("--seed", dir_seed, "seed for the random system");
    dir->add_option("--format", dir_format, "csv or json");
    dir->add_option("--out", dir_out, "output path (default stdout)");

    // exponents
    auto* exp = app.add_subcommand("exponents", "exact rational exponent ledger");
    std::string exp_alpha, exp_c, exp_format = "text", exp_out;
    exp->add_option("--alpha", exp_alpha, "growth exponent as a rational, e.g. 5/28")
        ->required();
    exp->add_option("--c", exp_c, "window exponent to include in the ledger");
    exp->add_option("--format", exp_format, "text or json");
    exp->add_option("--out", exp_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        digits = precision_from_env();
        if (sieve->parsed())
            return cmd_sieve(sieve_limit, segment_size, sieve_format, sieve_out, digits);
        if (sum->parsed())
            return cmd_sum(sum_system, sum_limit, sum_tau_limit, sum_grid, sum_seed,
                           sum_table_out, sum_save_system, sum_format, sum_out, digits);
        if (env->parsed())
            return cmd_envelope(env_system, env_input, env_scale, env_limit, env_tau_limit,
                                env_grid, env_seed, env_format, env_out, digits);
        if (dir->parsed())
            return cmd_dirichlet(dir_system, dir_s, dir_limit, dir_smooth, dir_tau_limit,
                                 dir_seed, dir_format, dir_out, digits);
        if (exp->parsed())
            return cmd_exponents(exp_alpha, exp_c, exp_format, exp_out, digits);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
