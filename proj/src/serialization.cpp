#include "fermat/serialization.hpp"

#include <cmath>
#include <stdexcept>

namespace fermat {

namespace {

Json big_to_json(const BigInt& x) { return x.get_str(); }
BigInt big_from_json(const Json& j) { return BigInt(j.get<std::string>()); }

Json complex_list(const std::vector<Complex>& v) {
    Json out = Json::array();
    for (const auto& z : v) out.push_back(complex_to_json(z));
    return out;
}

std::vector<Complex> complex_list_from(const Json& j) {
    std::vector<Complex> out;
    for (const auto& z : j) out.push_back(complex_from_json(z));
    return out;
}

}  // namespace

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex number must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

void to_json(Json& j, const DeltaTerm& t) {
    j = Json{{"m", t.m}, {"weight", big_to_json(t.weight)}, {"delta", t.delta}, {"subset", t.subset}};
}

void from_json(const Json& j, DeltaTerm& t) {
    t.m = j.at("m").get<unsigned>();
    t.weight = big_from_json(j.at("weight"));
    t.delta = j.at("delta").get<std::uint64_t>();
    t.subset = j.at("subset").get<std::vector<std::size_t>>();
}

void to_json(Json& j, const EDBreakdown& b) {
    j = Json{{"kind", to_string(b.kind)},
             {"n", b.n},
             {"d", b.d},
             {"general_bound", big_to_json(b.general_bound)},
             {"delta_terms", b.delta_terms},
             {"epsilon", big_to_json(b.epsilon)},
             {"origin_multiplicity", b.origin_multiplicity ? big_to_json(*b.origin_multiplicity) : Json(nullptr)},
             {"system_degree", b.system_degree ? big_to_json(*b.system_degree) : Json(nullptr)},
             {"ed_degree", big_to_json(b.ed_degree)}};
}

void from_json(const Json& j, EDBreakdown& b) {
    b.kind = hypersurface_kind_from_string(j.at("kind").get<std::string>());
    b.n = j.at("n").get<unsigned>();
    b.d = j.at("d").get<unsigned>();
    b.general_bound = big_from_json(j.at("general_bound"));
    b.delta_terms = j.at("delta_terms").get<std::vector<DeltaTerm>>();
    b.epsilon = big_from_json(j.at("epsilon"));
    const auto& om = j.at("origin_multiplicity");
    b.origin_multiplicity = om.is_null() ? std::nullopt : std::optional<BigInt>(big_from_json(om));
    const auto& sd = j.at("system_degree");
    b.system_degree = sd.is_null() ? std::nullopt : std::optional<BigInt>(big_from_json(sd));
    b.ed_degree = big_from_json(j.at("ed_degree"));
}

void to_json(Json& j, const TrackingOptions& o) {
    j = Json{{"infinity_radius", o.infinity_radius},
             {"origin_radius", o.origin_radius},
             {"residual_tol", o.residual_tol},
             {"initial_step", o.initial_step},
             {"max_step", o.max_step},
             {"min_step", o.min_step},
             {"corrector_tol", o.corrector_tol},
             {"max_corrector_iterations", o.max_corrector_iterations},
             {"successes_before_doubling", o.successes_before_doubling},
             {"max_steps", o.max_steps},
             {"polish_iterations", o.polish_iterations},
             {"dedup_tol", o.dedup_tol},
             {"path_cap", o.path_cap},
             {"max_failed_fraction", o.max_failed_fraction}};
}

void from_json(const Json& j, TrackingOptions& o) {
    j.at("infinity_radius").get_to(o.infinity_radius);
    j.at("origin_radius").get_to(o.origin_radius);
    j.at("residual_tol").get_to(o.residual_tol);
    j.at("initial_step").get_to(o.initial_step);
    j.at("max_step").get_to(o.max_step);
    j.at("min_step").get_to(o.min_step);
    j.at("corrector_tol").get_to(o.corrector_tol);
    j.at("max_corrector_iterations").get_to(o.max_corrector_iterations);
    j.at("successes_before_doubling").get_to(o.successes_before_doubling);
    j.at("max_steps").get_to(o.max_steps);
    j.at("polish_iterations").get_to(o.polish_iterations);
    j.at("dedup_tol").get_to(o.dedup_tol);
    j.at("path_cap").get_to(o.path_cap);
    j.at("max_failed_fraction").get_to(o.max_failed_fraction);
}

void to_json(Json& j, const EndpointCounts& c) {
    j = Json{{"finite", c.finite}, {"origin", c.origin}, {"infinity", c.infinity}, {"failed", c.failed}};
}

void from_json(const Json& j, EndpointCounts& c) {
    j.at("finite").get_to(c.finite);
    j.at("origin").get_to(c.origin);
    j.at("infinity").get_to(c.infinity);
    j.at("failed").get_to(c.failed);
}

void to_json(Json& j, const VerificationReport& r) {
    Json solutions = Json::array();
    for (const auto& x : r.finite_solutions) solutions.push_back(complex_list(x));
    j = Json{{"n", r.n},
             {"d", r.d},
             {"seed", r.seed},
             {"u", complex_list(r.u)},
             {"gamma", complex_to_json(r.gamma)},
             {"total_paths", r.total_paths},
             {"counts", r.counts},
             {"finite_deduplicated", r.finite_deduplicated},
             {"formula_value", r.formula_value},
             {"agree", r.agree},
             {"finite_solutions", solutions},
             {"options", r.options}};
}

void from_json(const Json& j, VerificationReport& r) {
    j.at("n").get_to(r.n);
    j.at("d").get_to(r.d);
    j.at("seed").get_to(r.seed);
    r.u = complex_list_from(j.at("u"));
    r.gamma = complex_from_json(j.at("gamma"));
    j.at("total_paths").get_to(r.total_paths);
    j.at("counts").get_to(r.counts);
    j.at("finite_deduplicated").get_to(r.finite_deduplicated);
    j.at("formula_value").get_to(r.formula_value);
    j.at("agree").get_to(r.agree);
    r.finite_solutions.clear();
    for (const auto& x : j.at("finite_solutions")) r.finite_solutions.push_back(complex_list_from(x));
    j.at("options").get_to(r.options);
}

void to_json(Json& j, const RealScanReport& r) {
    Json histogram = Json::array();
    for (const auto& [count, frequency] : r.histogram)
        histogram.push_back(Json{{"count", count}, {"frequency", frequency}});
    j = Json{{"n", r.n},
             {"d", r.d},
             {"trials", r.trials},
             {"seed", r.seed},
             {"histogram", histogram},
             {"max_observed", r.max_observed},
             {"conjecture_bound", r.conjecture_bound},
             {"fewnomial_bound", big_to_json(r.fewnomial_bound)},
             {"counterexample_candidates", r.counterexample_candidates},
             {"borderline_trials", r.borderline_trials},
             {"incomplete_trials", r.incomplete_trials},
             {"imag_tol", r.imag_tol}};
}

void from_json(const Json& j, RealScanReport& r) {
    j.at("n").get_to(r.n);
    j.at("d").get_to(r.d);
    j.at("trials").get_to(r.trials);
    j.at("seed").get_to(r.seed);
    r.histogram.clear();
    for (const auto& e : j.at("histogram"))
        r.histogram[e.at("count").get<std::uint64_t>()] = e.at("frequency").get<std::uint64_t>();
    j.at("max_observed").get_to(r.max_observed);
    j.at("conjecture_bound").get_to(r.conjecture_bound);
    r.fewnomial_bound = big_from_json(j.at("fewnomial_bound"));
    j.at("counterexample_candidates").get_to(r.counterexample_candidates);
    j.at("borderline_trials").get_to(r.borderline_trials);
    j.at("incomplete_trials").get_to(r.incomplete_trials);
    j.at("imag_tol").get_to(r.imag_tol);
}

Json polynomial_to_json(const SparseIntegerPolynomial& f) {
    Json out = Json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
        out.push_back(Json{{"exponents", it->first}, {"coefficient", big_to_json(it->second)}});
    return out;
}

SparseIntegerPolynomial polynomial_from_json(const Json& j, std::optional<std::size_t> num_vars) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be a term list");
    if (!num_vars) {
        if (j.empty()) throw std::invalid_argument("polynomial JSON: empty list needs an explicit variable count");
        num_vars = j.front().at("exponents").size();
    }
    SparseIntegerPolynomial f(*num_vars);
    for (const auto& term : j) {
        auto e = term.at("exponents").get<Exponent>();
        if (e.size() != f.num_vars()) throw std::invalid_argument("polynomial JSON: exponent length mismatch");
        f.add_term(e, big_from_json(term.at("coefficient")));
    }
    return f;
}

Json scaled_vanishing_to_json(const ScaledVanishingResult& r) {
    const auto& e = r.evaluation;
    return Json{{"vanishing", r.vanishing},
                {"q_order", r.q_order},
                {"q_point", complex_list(r.q_point)},
                {"value", complex_to_json(e.value)},
                {"log_abs", std::isinf(e.log_abs) ? Json(nullptr) : Json(e.log_abs)},
                {"log_scale", e.log_scale},
                {"min_relative_factor", e.min_relative_factor},
                {"factors", e.factors}};
}

}  // namespace fermat
