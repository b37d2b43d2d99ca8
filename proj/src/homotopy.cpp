#include "fermat/homotopy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "fermat/ed_formulas.hpp"
#include "fermat/errors.hpp"

namespace fermat {

namespace {

Complex ipow(Complex z, unsigned e) {
    Complex r(1.0, 0.0);
    while (e) {
        if (e & 1u) r *= z;
        z *= z;
        e >>= 1;
    }
    return r;
}

bool all_finite(const ComplexVector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) return false;
    return true;
}

// Derived streams so that the data, gamma and start constants never share draws.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

Complex random_unit(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    return std::polar(1.0, angle(rng));
}

}  // namespace

void ComplexPolynomial::add_term(Complex coeff, std::vector<unsigned> exponents) {
    if (exponents.size() != num_vars_)
        throw std::invalid_argument("ComplexPolynomial: exponent vector has wrong length");
    terms_.push_back({coeff, std::move(exponents)});
}

unsigned ComplexPolynomial::degree() const {
    unsigned deg = 0;
    for (const auto& t : terms_) {
        unsigned s = 0;
        for (unsigned e : t.exponents) s += e;
        deg = std::max(deg, s);
    }
    return deg;
}

Complex ComplexPolynomial::evaluate(const ComplexVector& x) const {
    Complex sum = 0;
    for (const auto& t : terms_) {
        Complex term = t.coeff;
        for (std::size_t i = 0; i < num_vars_; ++i)
            if (t.exponents[i]) term *= ipow(x[static_cast<Eigen::Index>(i)], t.exponents[i]);
        sum += term;
    }
    return sum;
}

double ComplexPolynomial::magnitude(const ComplexVector& x) const {
    double sum = 0;
    for (const auto& t : terms_) {
        double term = std::abs(t.coeff);
        for (std::size_t i = 0; i < num_vars_; ++i)
            if (t.exponents[i]) term *= std::pow(std::abs(x[static_cast<Eigen::Index>(i)]), t.exponents[i]);
        sum += term;
    }
    return sum;
}

ComplexVector ComplexPolynomial::gradient(const ComplexVector& x) const {
    ComplexVector g = ComplexVector::Zero(static_cast<Eigen::Index>(num_vars_));
    for (const auto& t : terms_) {
        for (std::size_t k = 0; k < num_vars_; ++k) {
            if (t.exponents[k] == 0) continue;
            Complex term = t.coeff * static_cast<double>(t.exponents[k]);
            for (std::size_t i = 0; i < num_vars_; ++i) {
                const unsigned e = i == k ? t.exponents[i] - 1 : t.exponents[i];
                if (e) term *= ipow(x[static_cast<Eigen::Index>(i)], e);
            }
            g[static_cast<Eigen::Index>(k)] += term;
        }
    }
    return g;
}

PolynomialSystem::PolynomialSystem(std::size_t num_vars, std::vector<ComplexPolynomial> equations)
    : num_vars_(num_vars), equations_(std::move(equations)) {
    if (equations_.size() != num_vars_)
        throw std::invalid_argument("PolynomialSystem: " + std::to_string(equations_.size()) + " equations in " +
                                    std::to_string(num_vars_) + " unknowns is not square");
    for (const auto& eq : equations_) {
        if (eq.num_vars() != num_vars_) throw std::invalid_argument("PolynomialSystem: equation arity mismatch");
        degrees_.push_back(eq.degree());
    }
}

std::uint64_t PolynomialSystem::bezout_number() const {
    std::uint64_t b = 1;
    for (unsigned d : degrees_) b *= d;
    return b;
}

ComplexVector PolynomialSystem::evaluate(const ComplexVector& x) const {
    ComplexVector f(static_cast<Eigen::Index>(equations_.size()));
    for (std::size_t j = 0; j < equations_.size(); ++j) f[static_cast<Eigen::Index>(j)] = equations_[j].evaluate(x);
    return f;
}

ComplexMatrix PolynomialSystem::jacobian(const ComplexVector& x) const {
    const auto rows = static_cast<Eigen::Index>(equations_.size());
    ComplexMatrix J(rows, static_cast<Eigen::Index>(num_vars_));
    for (Eigen::Index j = 0; j < rows; ++j) J.row(j) = equations_[static_cast<std::size_t>(j)].gradient(x).transpose();
    return J;
}

double PolynomialSystem::normalized_residual(const ComplexVector& x) const {
    double worst = 0;
    for (const auto& eq : equations_) worst = std::max(worst, std::abs(eq.evaluate(x)) / (1.0 + eq.magnitude(x)));
    return worst;
}

ComplexMatrix jacobian(const PolynomialSystem& system, const ComplexVector& x) { return system.jacobian(x); }

PolynomialSystem build_critical_system(unsigned n, unsigned d, const ComplexVector& u) {
    if (n < 1) throw std::invalid_argument("build_critical_system: n must be >= 1");
    if (d < 3) throw std::invalid_argument("build_critical_system: d must be >= 3");
    if (u.size() != static_cast<Eigen::Index>(n + 1))
        throw std::invalid_argument("build_critical_system: u must have n + 1 entries");
    for (Eigen::Index i = 0; i < u.size(); ++i)
        if (u[i] == Complex(0)) throw std::invalid_argument("build_critical_system: u has a zero entry");

    const std::size_t vars = n + 1;
    auto mono = [vars](std::initializer_list<std::pair<std::size_t, unsigned>> powers) {
        std::vector<unsigned> e(vars, 0);
        for (auto [i, k] : powers) e[i] += k;
        return e;
    };

    std::vector<ComplexPolynomial> eqs;
    ComplexPolynomial fermat(vars);
    for (std::size_t i = 0; i < vars; ++i) fermat.add_term(1.0, mono({{i, d}}));
    eqs.push_back(std::move(fermat));

    // x_0^(d-1) (x_i - u_i) - x_i^(d-1) (x_0 - u_0)
    for (std::size_t i = 1; i < vars; ++i) {
        ComplexPolynomial minor(vars);
        minor.add_term(1.0, mono({{0, d - 1}, {i, 1}}));
        minor.add_term(-u[static_cast<Eigen::Index>(i)], mono({{0, d - 1}}));
        minor.add_term(-1.0, mono({{i, d - 1}, {0, 1}}));
        minor.add_term(u[0], mono({{i, d - 1}}));
        eqs.push_back(std::move(minor));
    }
    return PolynomialSystem(vars, std::move(eqs));
}

double full_critical_residual(unsigned n, unsigned d, const ComplexVector& u, const ComplexVector& x) {
    double worst = 0;
    Complex fsum = 0;
    double fscale = 0;
    for (unsigned i = 0; i <= n; ++i) {
        const Complex t = ipow(x[i], d);
        fsum += t;
        fscale += std::abs(t);
    }
    worst = std::abs(fsum) / (1.0 + fscale);
    for (unsigned i = 0; i <= n; ++i) {
        for (unsigned j = i + 1; j <= n; ++j) {
            const Complex a = ipow(x[i], d - 1) * (x[j] - u[j]);
            const Complex b = ipow(x[j], d - 1) * (x[i] - u[i]);
            worst = std::max(worst, std::abs(a - b) / (1.0 + std::abs(a) + std::abs(b)));
        }
    }
    return worst;
}

StartSystem start_system(const std::vector<unsigned>& degrees, std::uint64_t seed) {
    const std::size_t vars = degrees.size();
    std::mt19937_64 rng(seed);
    StartSystem out;
    std::vector<ComplexPolynomial> eqs;
    std::vector<std::vector<Complex>> roots(vars);
    for (std::size_t i = 0; i < vars; ++i) {
        if (degrees[i] == 0) throw std::invalid_argument("start_system: degrees must be positive");
        const Complex r = random_unit(rng);
        out.constants.push_back(r);
        ComplexPolynomial eq(vars);
        std::vector<unsigned> e(vars, 0);
        e[i] = degrees[i];
        eq.add_term(1.0, e);
        eq.add_term(-r, std::vector<unsigned>(vars, 0));
        eqs.push_back(std::move(eq));

        const double base = std::arg(r) / degrees[i];
        for (unsigned k = 0; k < degrees[i]; ++k)
            roots[i].push_back(std::polar(1.0, base + 2.0 * std::numbers::pi * k / degrees[i]));
    }
    out.system = PolynomialSystem(vars, std::move(eqs));

    // Odometer over all root combinations, last coordinate fastest.
    std::vector<unsigned> idx(vars, 0);
    while (true) {
        ComplexVector x(static_cast<Eigen::Index>(vars));
        for (std::size_t i = 0; i < vars; ++i) x[static_cast<Eigen::Index>(i)] = roots[i][idx[i]];
        out.points.push_back(std::move(x));
        std::size_t k = vars;
        while (k > 0) {
            --k;
            if (++idx[k] < degrees[k]) break;
            idx[k] = 0;
            if (k == 0) return out;
        }
        if (vars == 0) return out;
    }
}

std::string to_string(EndpointClass c) {
    switch (c) {
        case EndpointClass::Finite: return "finite";
        case EndpointClass::Origin: return "origin";
        case EndpointClass::Infinity: return "infinity";
        case EndpointClass::Failed: return "failed";
    }
    return "failed";
}

EndpointClass endpoint_class_from_string(const std::string& name) {
    if (name == "finite") return EndpointClass::Finite;
    if (name == "origin") return EndpointClass::Origin;
    if (name == "infinity") return EndpointClass::Infinity;
    if (name == "failed") return EndpointClass::Failed;
    throw std::invalid_argument("unknown endpoint class: " + name);
}

namespace {

// Newton on the target from the tracked endpoint. Singular endpoints (the
// origin, points at infinity) converge only linearly, so the iterate is
// followed until its norm leaves [origin_radius, infinity_radius] or the
// update becomes negligible.
PathEndpoint polish(const PolynomialSystem& target, ComplexVector x, std::uint64_t steps,
                    const TrackingOptions& options) {
    PathEndpoint end;
    end.steps = steps;
    for (unsigned it = 0; it <= options.polish_iterations; ++it) {
        const double norm = x.norm();
        if (norm > options.infinity_radius) {
            end.classification = EndpointClass::Infinity;
            break;
        }
        if (norm < options.origin_radius) {
            end.classification = EndpointClass::Origin;
            break;
        }
        if (it == options.polish_iterations) break;
        const ComplexVector delta = target.jacobian(x).partialPivLu().solve(target.evaluate(x));
        if (!all_finite(delta)) break;
        x -= delta;
        if (delta.norm() <= 1e-11 * x.norm() && x.norm() >= options.origin_radius &&
            x.norm() <= options.infinity_radius && target.normalized_residual(x) < options.residual_tol) {
            end.classification = EndpointClass::Finite;
            break;
        }
    }
    end.point = x;
    end.newton_residual = target.normalized_residual(x);
    return end;
}

}  // namespace

PathEndpoint track_path(const PolynomialSystem& target, const PolynomialSystem& start, Complex gamma,
                        const ComplexVector& x0, const TrackingOptions& options) {
    if (target.num_vars() != start.num_vars() || x0.size() != static_cast<Eigen::Index>(target.num_vars()))
        throw std::invalid_argument("track_path: dimension mismatch");

    auto H = [&](const ComplexVector& x, double s) -> ComplexVector {
        return (1.0 - s) * gamma * start.evaluate(x) + s * target.evaluate(x);
    };
    auto Hx = [&](const ComplexVector& x, double s) -> ComplexMatrix {
        return (1.0 - s) * gamma * start.jacobian(x) + s * target.jacobian(x);
    };

    ComplexVector x = x0;
    double s = 0.0;
    double h = options.initial_step;
    unsigned successes = 0;
    std::uint64_t steps = 0;
    // norm_at_decade[k]: |x| at the first accepted point with 1 - s < 10^-k
    std::array<double, 20> norm_at_decade{};

    while (s < 1.0) {
        if (steps >= options.max_steps) break;
        h = std::min(h, 1.0 - s);

        // Euler predictor on dx/ds = -Hx^{-1} Hs.
        const ComplexVector Hs = target.evaluate(x) - gamma * start.evaluate(x);
        const ComplexVector dx = -Hx(x, s).partialPivLu().solve(Hs);
        const double s1 = (1.0 - s <= h) ? 1.0 : s + h;
        ComplexVector xp = x + (s1 - s) * dx;

        bool converged = false;
        double previous = std::numeric_limits<double>::infinity();
        if (all_finite(xp)) {
            for (unsigned it = 0; it < options.max_corrector_iterations; ++it) {
                const ComplexVector delta = Hx(xp, s1).partialPivLu().solve(H(xp, s1));
                if (!all_finite(delta)) break;
                xp -= delta;
                const double dn = delta.norm();
                if (dn > 0.5 * previous) break;  // not contracting
                previous = dn;
                if (dn <= options.corrector_tol * (1.0 + xp.norm())) {
                    converged = true;
                    break;
                }
            }
        }

        if (converged) {
            x = xp;
            s = s1;
            ++steps;
            for (std::size_t k = 0; k < norm_at_decade.size(); ++k)
                if (norm_at_decade[k] == 0 && 1.0 - s < std::pow(10.0, -static_cast<double>(k)))
                    norm_at_decade[k] = x.norm();
            if (x.norm() > options.infinity_radius) {
                PathEndpoint end;
                end.point = x;
                end.classification = EndpointClass::Infinity;
                end.newton_residual = target.normalized_residual(x);
                end.steps = steps;
                return end;
            }
            if (++successes >= options.successes_before_doubling) {
                h = std::min(2.0 * h, options.max_step);
                successes = 0;
            }
        } else {
            h *= 0.5;
            successes = 0;
            if (h < options.min_step) break;
        }
    }
    // A stall with the norm still climbing is a path diverging to infinity.
    const int decade = s < 1.0 ? static_cast<int>(std::floor(-std::log10(1.0 - s))) : -1;
    if (decade >= 2 && decade < static_cast<int>(norm_at_decade.size()) && norm_at_decade[decade - 2] > 0 &&
        x.norm() > 1.0 && x.norm() > 2.0 * norm_at_decade[decade - 2]) {
        PathEndpoint end;
        end.point = x;
        end.classification = EndpointClass::Infinity;
        end.newton_residual = target.normalized_residual(x);
        end.steps = steps;
        return end;
    }
    // Out of steps, or stuck well before the target: polishing from here could land on an unrelated root.
    if (steps >= options.max_steps || 1.0 - s > 0.1) {
        PathEndpoint end;
        end.point = x;
        end.classification = EndpointClass::Failed;
        end.newton_residual = target.normalized_residual(x);
        end.steps = steps;
        return end;
    }
    return polish(target, x, steps, options);
}

std::vector<ComplexVector> deduplicate(std::vector<ComplexVector> points, double tol) {
    auto less = [](const ComplexVector& a, const ComplexVector& b) {
        for (Eigen::Index i = 0; i < std::min(a.size(), b.size()); ++i) {
            if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
            if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
        }
        return a.size() < b.size();
    };
    std::sort(points.begin(), points.end(), less);
    std::vector<ComplexVector> kept;
    for (auto& p : points) {
        const bool duplicate = std::any_of(kept.begin(), kept.end(), [&](const ComplexVector& q) {
            return (p - q).norm() < tol * std::max({1.0, p.norm(), q.norm()});
        });
        if (!duplicate) kept.push_back(std::move(p));
    }
    return kept;
}

CriticalPointSolve solve_critical_points(unsigned n, unsigned d, const ComplexVector& u, std::uint64_t seed,
                                         const TrackingOptions& options) {
    const PolynomialSystem target = build_critical_system(n, d, u);
    const std::uint64_t paths = target.bezout_number();
    if (paths > options.path_cap) throw WorkCapExceeded("homotopy path count", paths, options.path_cap);

    std::mt19937_64 gamma_rng(mix_seed(seed, 1));
    CriticalPointSolve out;
    out.gamma = random_unit(gamma_rng);
    const StartSystem start = start_system(target.degrees(), mix_seed(seed, 2));

    std::vector<ComplexVector> finite;
    for (const auto& x0 : start.points) {
        PathEndpoint end = track_path(target, start.system, out.gamma, x0, options);
        switch (end.classification) {
            case EndpointClass::Finite:
                ++out.counts.finite;
                finite.push_back(end.point);
                break;
            case EndpointClass::Origin: ++out.counts.origin; break;
            case EndpointClass::Infinity: ++out.counts.infinity; break;
            case EndpointClass::Failed: ++out.counts.failed; break;
        }
        out.endpoints.push_back(std::move(end));
    }
    out.finite_solutions = deduplicate(std::move(finite), options.dedup_tol);
    return out;
}

ComplexVector sample_complex_data(unsigned size, std::uint64_t seed) {
    std::mt19937_64 rng(mix_seed(seed, 0));
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexVector u(size);
    for (unsigned i = 0; i < size; ++i) {
        Complex z;
        do {
            const double re = normal(rng);
            const double im = normal(rng);
            z = Complex(re, im);
        } while (std::abs(z) < 0.1);
        u[i] = z;
    }
    return u;
}

bool operator==(const TrackingOptions& a, const TrackingOptions& b) {
    return a.infinity_radius == b.infinity_radius && a.origin_radius == b.origin_radius &&
           a.residual_tol == b.residual_tol && a.initial_step == b.initial_step && a.max_step == b.max_step &&
           a.min_step == b.min_step && a.corrector_tol == b.corrector_tol &&
           a.max_corrector_iterations == b.max_corrector_iterations &&
           a.successes_before_doubling == b.successes_before_doubling && a.max_steps == b.max_steps &&
           a.polish_iterations == b.polish_iterations && a.dedup_tol == b.dedup_tol && a.path_cap == b.path_cap &&
           a.max_failed_fraction == b.max_failed_fraction;
}

bool operator==(const VerificationReport& a, const VerificationReport& b) {
    return a.n == b.n && a.d == b.d && a.seed == b.seed && a.u == b.u && a.gamma == b.gamma &&
           a.total_paths == b.total_paths && a.counts == b.counts && a.finite_deduplicated == b.finite_deduplicated &&
           a.formula_value == b.formula_value && a.agree == b.agree && a.finite_solutions == b.finite_solutions &&
           a.options == b.options;
}

VerificationReport verify_eddeg(unsigned n, unsigned d, std::uint64_t seed, const TrackingOptions& options) {
    if (n < 1) throw std::invalid_argument("verify_eddeg: n must be >= 1");
    if (d < 3) throw std::invalid_argument("verify_eddeg: d must be >= 3");
    const ComplexVector u = sample_complex_data(n + 1, seed);
    const CriticalPointSolve solve = solve_critical_points(n, d, u, seed, options);

    VerificationReport r;
    r.n = n;
    r.d = d;
    r.seed = seed;
    r.u.assign(u.data(), u.data() + u.size());
    r.gamma = solve.gamma;
    r.total_paths = solve.endpoints.size();
    r.counts = solve.counts;
    r.finite_deduplicated = solve.finite_solutions.size();
    const BigInt formula = eddeg_projective(n, d).ed_degree;
    r.formula_value = formula.get_str();
    r.agree = BigInt(static_cast<unsigned long>(r.finite_deduplicated)) == formula;
    for (const auto& x : solve.finite_solutions) r.finite_solutions.emplace_back(x.data(), x.data() + x.size());
    r.options = options;

    if (static_cast<double>(r.counts.failed) > options.max_failed_fraction * static_cast<double>(r.total_paths))
        throw InconclusiveVerification("verify_eddeg: " + std::to_string(r.counts.failed) + " of " +
                                       std::to_string(r.total_paths) +
                                       " paths failed; rerun with a different seed");
    return r;
}

}  // namespace fermat
