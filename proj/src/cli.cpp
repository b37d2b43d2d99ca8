#include "fermat/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "fermat/ed_formulas.hpp"
#include "fermat/errors.hpp"
#include "fermat/expcyclo.hpp"
#include "fermat/homotopy.hpp"
#include "fermat/real_experiments.hpp"
#include "fermat/serialization.hpp"
#include "fermat/vanishing_sums.hpp"

namespace fermat::cli {

namespace {

const std::string kNumber = R"((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";

std::string format_double(double x, int digits = 10) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

struct Globals {
    std::string format = "text";
    std::optional<std::uint64_t> seed;
    std::optional<double> tol;
    std::optional<std::uint64_t> work_cap;
};

/// What a command produces; run() picks the representation.
struct Emission {
    Json parameters = Json::object();
    Json result;
    Json tolerances_and_seeds = Json::object();
    std::string text;
    std::optional<std::string> csv;
};

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string breakdown_text(const EDBreakdown& b) {
    std::ostringstream os;
    os << "kind: " << to_string(b.kind) << "\n";
    os << "n: " << b.n << "\n";
    os << "d: " << b.d << "\n";
    os << "general_bound: " << b.general_bound << "\n";
    const unsigned top = b.kind == HypersurfaceKind::Projective ? b.n + 1 : b.n;
    for (const auto& t : b.delta_terms) {
        if (b.kind == HypersurfaceKind::Scaled) {
            os << "term: I={" << join(t.subset) << "} delta(" << t.m << "," << b.d - 2 << ",a_I) = " << t.delta
               << "\n";
        } else {
            os << "term: C(" << top << "," << t.m + 1 << ") * delta(" << t.m << "," << b.d - 2 << ") = " << t.weight
               << " * " << t.delta << " = " << BigInt(t.weight * t.delta) << "\n";
        }
    }
    os << "epsilon: " << b.epsilon << "\n";
    if (b.system_degree && b.origin_multiplicity) {
        os << "system_degree: " << *b.system_degree << "\n";
        os << "origin_multiplicity: " << *b.origin_multiplicity << "\n";
        os << "identity: " << *b.system_degree << " - " << *b.origin_multiplicity << " - " << b.epsilon << " = "
           << BigInt(*b.system_degree - *b.origin_multiplicity - b.epsilon) << "\n";
    }
    os << "ed_degree: " << b.ed_degree << "\n";
    return os.str();
}

std::string table_row_csv(const EDBreakdown& b) {
    return std::to_string(b.n) + "," + std::to_string(b.d) + "," + b.general_bound.get_str() + "," +
           b.epsilon.get_str() + "," + b.ed_degree.get_str() + "\n";
}

const char* kTableHeader = "n,d,general_bound,epsilon,ed_degree\n";

Json complex_list_json(const std::vector<Complex>& v) {
    Json out = Json::array();
    for (const auto& z : v) out.push_back(complex_to_json(z));
    return out;
}

std::string complex_list_text(const std::vector<Complex>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_complex(v[i]);
    return s;
}

DeltaOptions delta_options(const Globals& g) {
    DeltaOptions o;
    if (g.work_cap) o.work_cap = *g.work_cap;
    return o;
}

void record_work_cap(Emission& e, std::uint64_t cap) { e.tolerances_and_seeds["work_cap"] = cap; }

struct EddegArgs {
    unsigned n = 0, d = 0;
    std::string a;
};

Emission cmd_eddeg(HypersurfaceKind kind, const EddegArgs& args, const Globals& g) {
    Emission e;
    const DeltaOptions opts = delta_options(g);
    e.parameters = {{"kind", to_string(kind)}, {"n", args.n}, {"d", args.d}};
    record_work_cap(e, opts.work_cap);
    EDBreakdown b;
    if (kind == HypersurfaceKind::Scaled) {
        const ScalingVector a(parse_complex_list(args.a));
        if (a.size() != args.n + 1) throw std::invalid_argument("--a must have n+1 entries");
        const double tol = g.tol.value_or(1e-9);
        e.parameters["a"] = complex_list_json(a.entries());
        e.tolerances_and_seeds["tol"] = tol;
        b = eddeg_scaled(args.n, args.d, a, tol, opts);
    } else if (kind == HypersurfaceKind::Affine) {
        b = eddeg_affine(args.n, args.d, opts);
    } else {
        b = eddeg_projective(args.n, args.d, opts);
    }
    e.result = b;
    e.text = breakdown_text(b);
    e.csv = std::string("kind,") + kTableHeader + to_string(kind) + "," + table_row_csv(b);
    return e;
}

struct DeltaArgs {
    unsigned m = 0;
    std::uint64_t p = 0;
    std::string a;
    bool closed_form = false;
};

Emission cmd_delta(const DeltaArgs& args, const Globals& g) {
    Emission e;
    e.parameters = {{"m", args.m}, {"p", args.p}};
    std::uint64_t value = 0;
    std::string method;
    if (!args.a.empty()) {
        if (args.closed_form) throw std::invalid_argument("--closed-form and --a are exclusive");
        const ScalingVector a(parse_complex_list(args.a));
        if (a.size() != args.m + 1) throw std::invalid_argument("--a must have m+1 entries");
        const double tol = g.tol.value_or(1e-9);
        const DeltaOptions opts = delta_options(g);
        e.parameters["a"] = complex_list_json(a.entries());
        e.tolerances_and_seeds["tol"] = tol;
        record_work_cap(e, opts.work_cap);
        value = delta_scaled(args.m, args.p, a, tol, opts);
        method = "scaled";
    } else if (args.closed_form) {
        value = delta_closed_form(args.m, args.p);
        method = "closed_form";
    } else {
        const DeltaOptions opts = delta_options(g);
        record_work_cap(e, opts.work_cap);
        value = delta(args.m, args.p, opts);
        method = "enumeration";
    }
    e.parameters["method"] = method;
    e.result = {{"m", args.m}, {"p", args.p}, {"delta", value}, {"method", method}};
    e.text = std::to_string(value) + "\n";
    e.csv = "m,p,delta\n" + std::to_string(args.m) + "," + std::to_string(args.p) + "," + std::to_string(value) + "\n";
    return e;
}

struct QArgs {
    unsigned m = 0;
    std::uint64_t p = 0;
    std::uint64_t factor_cap = ExpCycloOptions{}.factor_cap;
    std::string point;
    std::string a;
};

Emission cmd_qpoly(const QArgs& args, const Globals& g) {
    Emission e;
    ExpCycloOptions opts;
    opts.factor_cap = args.factor_cap;
    if (g.work_cap) opts.expansion_budget = *g.work_cap;
    e.parameters = {{"m", args.m}, {"p", args.p}};
    e.tolerances_and_seeds = {{"factor_cap", opts.factor_cap}, {"work_cap", opts.expansion_budget}};
    const SparseIntegerPolynomial q = build_Q(args.m, args.p, opts);
    e.result = {{"m", args.m},
                {"p", args.p},
                {"num_vars", q.num_vars()},
                {"num_terms", q.size()},
                {"degree", q.degree()},
                {"polynomial", polynomial_to_json(q)}};
    e.text = q.to_string() + "\n";
    return e;
}

Emission cmd_qeval(const QArgs& args, const Globals& g) {
    Emission e;
    ExpCycloOptions opts;
    if (g.work_cap) opts.evaluation_cap = *g.work_cap;
    const std::vector<Complex> point = parse_complex_list(args.point);
    if (point.size() != args.m + 1) throw std::invalid_argument("--point must have m+1 entries");
    e.parameters = {{"m", args.m}, {"p", args.p}, {"point", complex_list_json(point)}};
    record_work_cap(e, opts.evaluation_cap);
    const ProductEvaluation v = evaluate_Q_product(args.m, args.p, point, opts);
    e.result = {{"value", complex_to_json(v.value)},
                {"log_abs", std::isinf(v.log_abs) ? Json(nullptr) : Json(v.log_abs)},
                {"log_scale", v.log_scale},
                {"min_relative_factor", v.min_relative_factor},
                {"factors", v.factors}};
    e.text = format_complex(v.value) + "\n";
    return e;
}

Emission cmd_scaled_vanishing(const QArgs& args, const Globals& g) {
    Emission e;
    ExpCycloOptions opts;
    if (g.work_cap) opts.evaluation_cap = *g.work_cap;
    const ScalingVector a(parse_complex_list(args.a));
    if (a.size() != args.m + 1) throw std::invalid_argument("--a must have m+1 entries");
    const double tol = g.tol.value_or(1e-6);
    e.parameters = {{"m", args.m}, {"p", args.p}, {"a", complex_list_json(a.entries())}};
    e.tolerances_and_seeds = {{"tol", tol}};
    record_work_cap(e, opts.evaluation_cap);
    const ScaledVanishingResult r = scaled_vanishing_detail(args.m, args.p, a, tol, opts);
    e.result = scaled_vanishing_to_json(r);
    std::ostringstream os;
    os << "vanishing: " << (r.vanishing ? "true" : "false") << "\n"
       << "q_order: " << r.q_order << "\n"
       << "q_point: " << complex_list_text(r.q_point) << "\n"
       << "min_relative_factor: " << format_double(r.evaluation.min_relative_factor) << "\n";
    e.text = os.str();
    return e;
}

struct VerifyArgs {
    unsigned n = 0, d = 0;
    std::uint64_t trials = 100;
    TrackingOptions tracking;
    double imag_tol = RealCountOptions{}.imag_tol;
    double borderline_tol = RealCountOptions{}.borderline_tol;
};

Emission cmd_verify(VerifyArgs args, const Globals& g) {
    Emission e;
    if (g.tol) args.tracking.residual_tol = *g.tol;
    if (g.work_cap) args.tracking.path_cap = *g.work_cap;
    const std::uint64_t seed = g.seed.value_or(1);
    e.parameters = {{"n", args.n}, {"d", args.d}};
    e.tolerances_and_seeds = {{"seed", seed}, {"tracking", args.tracking}};
    const VerificationReport r = verify_eddeg(args.n, args.d, seed, args.tracking);
    e.result = r;
    std::ostringstream os;
    os << "n: " << r.n << "\n"
       << "d: " << r.d << "\n"
       << "seed: " << r.seed << "\n"
       << "total_paths: " << r.total_paths << "\n"
       << "finite_paths: " << r.counts.finite << "\n"
       << "origin_paths: " << r.counts.origin << "\n"
       << "infinity_paths: " << r.counts.infinity << "\n"
       << "failed_paths: " << r.counts.failed << "\n"
       << "distinct_finite: " << r.finite_deduplicated << "\n"
       << "formula_value: " << r.formula_value << "\n"
       << "agree: " << (r.agree ? "true" : "false") << "\n";
    e.text = os.str();
    return e;
}

Emission cmd_real_scan(VerifyArgs args, const Globals& g) {
    Emission e;
    RealCountOptions opts;
    opts.tracking = args.tracking;
    opts.imag_tol = g.tol.value_or(args.imag_tol);
    opts.borderline_tol = args.borderline_tol;
    if (g.work_cap) opts.tracking.path_cap = *g.work_cap;
    const std::uint64_t seed = g.seed.value_or(1);
    e.parameters = {{"n", args.n}, {"d", args.d}, {"trials", args.trials}};
    e.tolerances_and_seeds = {{"seed", seed},
                              {"imag_tol", opts.imag_tol},
                              {"borderline_tol", opts.borderline_tol},
                              {"tracking", opts.tracking}};
    const RealScanReport r = conjecture_scan(args.n, args.d, args.trials, seed, opts);
    e.result = r;
    std::ostringstream os, csv;
    csv << "count,frequency\n";
    os << "n: " << r.n << "\n"
       << "d: " << r.d << "\n"
       << "trials: " << r.trials << "\n"
       << "seed: " << r.seed << "\n";
    for (const auto& [count, frequency] : r.histogram) {
        os << "real_count " << count << ": " << frequency << "\n";
        csv << count << "," << frequency << "\n";
    }
    os << "max_observed: " << r.max_observed << "\n"
       << "conjecture_bound: " << r.conjecture_bound << "\n"
       << "fewnomial_bound: " << r.fewnomial_bound << "\n"
       << "counterexample_candidates: " << join({r.counterexample_candidates.begin(), r.counterexample_candidates.end()})
       << "\n"
       << "borderline_trials: " << join({r.borderline_trials.begin(), r.borderline_trials.end()}) << "\n"
       << "incomplete_trials: " << join({r.incomplete_trials.begin(), r.incomplete_trials.end()}) << "\n";
    e.text = os.str();
    e.csv = csv.str();
    return e;
}

struct BoundsArgs {
    unsigned n = 0;
    unsigned d = 0;
};

Emission cmd_bounds(const BoundsArgs& args, const Globals& g) {
    Emission e;
    if (args.n == 0) throw std::invalid_argument("n must be positive");
    e.parameters = {{"n", args.n}};
    Json r = {{"n", args.n},
              {"fewnomial_bound", fewnomial_bound(args.n).get_str()},
              {"fewnomial_bound_orthant_form", fewnomial_bound_orthant_form(args.n).get_str()},
              {"conjecture_bound", 2 * args.n - 1}};
    std::ostringstream os;
    os << "n: " << args.n << "\n"
       << "fewnomial_bound: " << r["fewnomial_bound"].get<std::string>() << "\n"
       << "conjecture_bound: " << 2 * args.n - 1 << "\n";
    if (args.d != 0) {
        const DeltaOptions opts = delta_options(g);
        record_work_cap(e, opts.work_cap);
        e.parameters["d"] = args.d;
        BigInt bezout = 1;
        for (unsigned i = 0; i <= args.n; ++i) bezout *= args.d;
        const EDBreakdown b = eddeg_projective(args.n, args.d, opts);
        r["d"] = args.d;
        r["bezout_number"] = bezout.get_str();
        r["general_bound"] = b.general_bound.get_str();
        r["system_degree"] = b.system_degree->get_str();
        r["origin_multiplicity"] = b.origin_multiplicity->get_str();
        r["epsilon"] = b.epsilon.get_str();
        r["ed_degree"] = b.ed_degree.get_str();
        os << "d: " << args.d << "\n"
           << "bezout_number: " << bezout << "\n"
           << "general_bound: " << b.general_bound << "\n"
           << "system_degree: " << *b.system_degree << "\n"
           << "origin_multiplicity: " << *b.origin_multiplicity << "\n"
           << "epsilon: " << b.epsilon << "\n"
           << "ed_degree: " << b.ed_degree << "\n";
    }
    e.result = r;
    e.text = os.str();
    return e;
}

struct TableArgs {
    unsigned n = 0;
    unsigned d_min = 3;
    unsigned d_max = 0;
    bool affine = false;
};

Emission cmd_table(const TableArgs& args, const Globals& g) {
    Emission e;
    const DeltaOptions opts = delta_options(g);
    const HypersurfaceKind kind = args.affine ? HypersurfaceKind::Affine : HypersurfaceKind::Projective;
    e.parameters = {{"n", args.n}, {"d_min", args.d_min}, {"d_max", args.d_max}, {"kind", to_string(kind)}};
    record_work_cap(e, opts.work_cap);
    std::vector<EDBreakdown> rows;
    if (args.affine) {
        for (unsigned d = args.d_min; d <= args.d_max; ++d) rows.push_back(eddeg_affine(args.n, d, opts));
    } else {
        rows = eddeg_table(args.n, args.d_min, args.d_max, opts);
    }
    Json jrows = Json::array();
    std::string csv = kTableHeader;
    std::ostringstream os;
    char line[160];
    std::snprintf(line, sizeof line, "%4s %4s %16s %10s %16s\n", "n", "d", "general_bound", "epsilon", "ed_degree");
    os << line;
    for (const auto& b : rows) {
        jrows.push_back({{"n", b.n},
                         {"d", b.d},
                         {"general_bound", b.general_bound.get_str()},
                         {"epsilon", b.epsilon.get_str()},
                         {"ed_degree", b.ed_degree.get_str()}});
        csv += table_row_csv(b);
        std::snprintf(line, sizeof line, "%4u %4u %16s %10s %16s\n", b.n, b.d, b.general_bound.get_str().c_str(),
                      b.epsilon.get_str().c_str(), b.ed_degree.get_str().c_str());
        os << line;
    }
    e.result = {{"kind", to_string(kind)}, {"rows", jrows}};
    e.text = os.str();
    e.csv = csv;
    return e;
}

void emit(const std::string& command, const Emission& e, const std::string& format, std::ostream& out) {
    if (format == "json") {
        Json envelope = {{"command", command},
                         {"parameters", e.parameters},
                         {"result", e.result},
                         {"tolerances_and_seeds", e.tolerances_and_seeds},
                         {"version", kVersion}};
        out << envelope.dump(2) << "\n";
    } else if (format == "csv") {
        if (!e.csv) throw std::invalid_argument("csv output is not available for '" + command + "'");
        out << *e.csv;
    } else {
        out << e.text;
    }
}

void add_tracking_flags(CLI::App* sub, TrackingOptions& t) {
    sub->add_option("--path-cap", t.path_cap, "maximum number of homotopy paths")->capture_default_str();
    sub->add_option("--dedup-tol", t.dedup_tol, "relative distance for merging endpoints")->capture_default_str();
    sub->add_option("--origin-radius", t.origin_radius, "endpoints below this norm count as the origin")
        ->capture_default_str();
    sub->add_option("--infinity-radius", t.infinity_radius, "paths above this norm count as diverging")
        ->capture_default_str();
    sub->add_option("--residual-tol", t.residual_tol, "normalized residual accepted for a finite endpoint")
        ->capture_default_str();
    sub->add_option("--min-step", t.min_step, "smallest step before a path is abandoned")->capture_default_str();
    sub->add_option("--max-step", t.max_step, "largest homotopy step")->capture_default_str();
}

}  // namespace

std::complex<double> parse_complex(const std::string& text) {
    static const std::regex real_re("^\\s*([+-]?" + kNumber + ")\\s*$");
    static const std::regex imag_re("^\\s*([+-]?)(" + kNumber + ")?i\\s*$");
    static const std::regex full_re("^\\s*([+-]?" + kNumber + ")\\s*([+-])\\s*(" + kNumber + ")?i\\s*$");
    std::smatch m;
    if (std::regex_match(text, m, real_re)) return {std::stod(m[1]), 0.0};
    if (std::regex_match(text, m, imag_re)) {
        const double mag = m[2].matched ? std::stod(m[2]) : 1.0;
        return {0.0, m[1] == "-" ? -mag : mag};
    }
    if (std::regex_match(text, m, full_re)) {
        const double mag = m[3].matched ? std::stod(m[3]) : 1.0;
        return {std::stod(m[1]), m[2] == "-" ? -mag : mag};
    }
    throw std::invalid_argument("malformed complex number '" + text + "'");
}

std::vector<std::complex<double>> parse_complex_list(const std::string& text) {
    std::vector<std::complex<double>> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) out.push_back(parse_complex(item));
    if (out.empty() || text.back() == ',') throw std::invalid_argument("malformed complex list '" + text + "'");
    return out;
}

std::string format_complex(std::complex<double> z) {
    std::string re = format_double(z.real(), 17);
    std::string im = format_double(std::abs(z.imag()), 17);
    return re + (std::signbit(z.imag()) ? "-" : "+") + im + "i";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Euclidean distance degrees of Fermat hypersurfaces", "fermat-ed"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Globals g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--seed", g.seed, "random seed for verify and real-scan (default 1)");
    app.add_option("--tol", g.tol, "numerical tolerance of the command");
    app.add_option("--work-cap", g.work_cap, "work cap of the command");

    std::string command;
    std::function<Emission()> action;

    EddegArgs ed;
    auto* eddeg = app.add_subcommand("eddeg", "ED-degree with its breakdown")->require_subcommand(1);
    for (auto kind : {HypersurfaceKind::Projective, HypersurfaceKind::Affine, HypersurfaceKind::Scaled}) {
        auto* sub = eddeg->add_subcommand(to_string(kind), "ED-degree of the " + to_string(kind) + " hypersurface");
        sub->add_option("-n", ed.n, "number of variables minus one")->required();
        sub->add_option("-d", ed.d, "degree")->required();
        if (kind == HypersurfaceKind::Scaled)
            sub->add_option("--a", ed.a, "scaling vector a_0..a_n, e.g. 1+0i,0+1i,2+0i")->required();
        sub->callback([&, kind] {
            command = "eddeg " + to_string(kind);
            action = [&, kind] { return cmd_eddeg(kind, ed, g); };
        });
    }

    DeltaArgs da;
    auto* dsub = app.add_subcommand("delta", "count vanishing sums 1 + sum zeta^(2 t_i)");
    dsub->add_option("-m", da.m, "number of roots")->required();
    dsub->add_option("-p", da.p, "root order")->required();
    dsub->add_option("--a", da.a, "scaling vector a_0..a_m for the scaled count");
    dsub->add_flag("--closed-form", da.closed_form, "use the closed form (m <= 3)");
    dsub->callback([&] {
        command = "delta";
        action = [&] { return cmd_delta(da, g); };
    });

    QArgs qa;
    auto* qpoly = app.add_subcommand("qpoly", "expand Q_{m,p}");
    qpoly->add_option("-m", qa.m)->required();
    qpoly->add_option("-p", qa.p)->required();
    qpoly->add_option("--factor-cap", qa.factor_cap, "maximum number of linear factors")->capture_default_str();
    qpoly->callback([&] {
        command = "qpoly";
        action = [&] { return cmd_qpoly(qa, g); };
    });

    auto* qeval = app.add_subcommand("qeval", "evaluate Q_{m,p} at a point");
    qeval->add_option("-m", qa.m)->required();
    qeval->add_option("-p", qa.p)->required();
    qeval->add_option("--point", qa.point, "x_0..x_m, e.g. 1+0i,0+1i")->required();
    qeval->callback([&] {
        command = "qeval";
        action = [&] { return cmd_qeval(qa, g); };
    });

    auto* sv = app.add_subcommand("scaled-vanishing", "resultant test for a scaled vanishing sum");
    sv->add_option("-m", qa.m)->required();
    sv->add_option("-p", qa.p)->required();
    sv->add_option("--a", qa.a, "scaling vector a_0..a_m")->required();
    sv->callback([&] {
        command = "scaled-vanishing";
        action = [&] { return cmd_scaled_vanishing(qa, g); };
    });

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check the ED-degree by homotopy continuation");
    verify->add_option("-n", va.n)->required();
    verify->add_option("-d", va.d)->required();
    add_tracking_flags(verify, va.tracking);
    verify->callback([&] {
        command = "verify";
        action = [&] { return cmd_verify(va, g); };
    });

    auto* scan = app.add_subcommand("real-scan", "histogram of real critical point counts");
    scan->add_option("-n", va.n)->required();
    scan->add_option("-d", va.d, "odd degree")->required();
    scan->add_option("--trials", va.trials)->capture_default_str();
    scan->add_option("--imag-tol", va.imag_tol, "imaginary part accepted as real")->capture_default_str();
    scan->add_option("--borderline-tol", va.borderline_tol, "imaginary parts up to this are reported")
        ->capture_default_str();
    add_tracking_flags(scan, va.tracking);
    scan->callback([&] {
        command = "real-scan";
        action = [&] { return cmd_real_scan(va, g); };
    });

    BoundsArgs ba;
    auto* bounds = app.add_subcommand("bounds", "real-count bounds and degree data");
    bounds->add_option("-n", ba.n)->required();
    bounds->add_option("-d", ba.d, "degree for the ED data");
    bounds->callback([&] {
        command = "bounds";
        action = [&] { return cmd_bounds(ba, g); };
    });

    TableArgs ta;
    auto* table = app.add_subcommand("table", "ED-degrees for a range of degrees");
    table->add_option("-n", ta.n)->required();
    table->add_option("--d-min", ta.d_min)->capture_default_str();
    table->add_option("--d-max", ta.d_max)->required();
    table->add_flag("--affine", ta.affine, "affine instead of projective");
    table->callback([&] {
        command = "table";
        action = [&] { return cmd_table(ta, g); };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsageError;
    }

    try {
        emit(command, action(), g.format, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const WorkCapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kComputationalError;
    } catch (const InconclusiveVerification& e) {
        err << "error: " << e.what() << "\n";
        return kComputationalError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kComputationalError;
    }
    return kSuccess;
}

}  // namespace fermat::cli
