/**
 * @file homotopy.hpp
 * @brief Total-degree homotopy continuation for the critical-point system
 *        of the squared distance to a Fermat cone, used as an independent
 *        numerical check of the closed-form ED-degree.
 */
#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace fermat {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

struct PolynomialTerm {
    Complex coeff;
    std::vector<unsigned> exponents;
};

/// Sparse polynomial with complex coefficients.
class ComplexPolynomial {
public:
    explicit ComplexPolynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

    void add_term(Complex coeff, std::vector<unsigned> exponents);

    std::size_t num_vars() const noexcept { return num_vars_; }
    const std::vector<PolynomialTerm>& terms() const noexcept { return terms_; }
    unsigned degree() const;

    Complex evaluate(const ComplexVector& x) const;
    /// sum |c| |x^e|, the scale against which residuals are measured.
    double magnitude(const ComplexVector& x) const;
    ComplexVector gradient(const ComplexVector& x) const;

private:
    std::size_t num_vars_;
    std::vector<PolynomialTerm> terms_;
};

class PolynomialSystem {
public:
    PolynomialSystem() = default;
    /// Throws std::invalid_argument unless the system is square.
    PolynomialSystem(std::size_t num_vars, std::vector<ComplexPolynomial> equations);

    std::size_t num_vars() const noexcept { return num_vars_; }
    const std::vector<ComplexPolynomial>& equations() const noexcept { return equations_; }
    const std::vector<unsigned>& degrees() const noexcept { return degrees_; }
    /// Product of the degrees.
    std::uint64_t bezout_number() const;

    ComplexVector evaluate(const ComplexVector& x) const;
    ComplexMatrix jacobian(const ComplexVector& x) const;
    /// max_j |f_j(x)| / (1 + magnitude_j(x))
    double normalized_residual(const ComplexVector& x) const;

private:
    std::size_t num_vars_ = 0;
    std::vector<ComplexPolynomial> equations_;
    std::vector<unsigned> degrees_;
};

ComplexMatrix jacobian(const PolynomialSystem& system, const ComplexVector& x);

/**
 * sum x_i^d = 0 together with x_0^(d-1)(x_i - u_i) - x_i^(d-1)(x_0 - u_0) = 0
 * for i = 1..n. Requires every u_i nonzero.
 */
PolynomialSystem build_critical_system(unsigned n, unsigned d, const ComplexVector& u);

/// Largest normalized residual of sum x^d and of every minor i < j.
double full_critical_residual(unsigned n, unsigned d, const ComplexVector& u, const ComplexVector& x);

struct StartSystem {
    PolynomialSystem system;
    /// x_i^(d_i) = constants[i], |constants[i]| = 1
    std::vector<Complex> constants;
    std::vector<ComplexVector> points;
};

StartSystem start_system(const std::vector<unsigned>& degrees, std::uint64_t seed);

struct TrackingOptions {
    double infinity_radius = 1e8;
    double origin_radius = 1e-6;
    /// Normalized residual required for a finite endpoint.
    double residual_tol = 1e-10;
    double initial_step = 0.01;
    double max_step = 0.05;
    double min_step = 1e-14;
    /// Newton updates must fall below this, relative to 1 + |x|.
    double corrector_tol = 1e-9;
    unsigned max_corrector_iterations = 3;
    unsigned successes_before_doubling = 5;
    std::uint64_t max_steps = 200000;
    unsigned polish_iterations = 400;
    /// Relative distance under which finite endpoints are merged.
    double dedup_tol = 1e-6;
    std::uint64_t path_cap = 2000;
    double max_failed_fraction = 0.02;
};

enum class EndpointClass { Finite, Origin, Infinity, Failed };

std::string to_string(EndpointClass c);
EndpointClass endpoint_class_from_string(const std::string& name);

struct PathEndpoint {
    ComplexVector point;
    EndpointClass classification = EndpointClass::Failed;
    double newton_residual = 0.0;
    std::uint64_t steps = 0;
};

/// Tracks H(x, s) = (1 - s) gamma start + s target from s = 0 to s = 1.
PathEndpoint track_path(const PolynomialSystem& target, const PolynomialSystem& start, Complex gamma,
                        const ComplexVector& x0, const TrackingOptions& options = {});

struct EndpointCounts {
    std::uint64_t finite = 0;
    std::uint64_t origin = 0;
    std::uint64_t infinity = 0;
    std::uint64_t failed = 0;

    std::uint64_t total() const noexcept { return finite + origin + infinity + failed; }
    friend bool operator==(const EndpointCounts&, const EndpointCounts&) = default;
};

struct CriticalPointSolve {
    Complex gamma;
    std::vector<PathEndpoint> endpoints;
    EndpointCounts counts;
    /// Finite endpoints after canonical sorting and merging.
    std::vector<ComplexVector> finite_solutions;
};

/// Sorts lexicographically by (re, im) per coordinate, then merges points
/// closer than tol * max(1, |x|, |y|).
std::vector<ComplexVector> deduplicate(std::vector<ComplexVector> points, double tol);

/// Solves the critical system for the given data by tracking all d^(n+1) paths.
CriticalPointSolve solve_critical_points(unsigned n, unsigned d, const ComplexVector& u, std::uint64_t seed,
                                         const TrackingOptions& options = {});

/// Complex Gaussian entries; entries with modulus below 0.1 are redrawn.
ComplexVector sample_complex_data(unsigned size, std::uint64_t seed);

struct VerificationReport {
    unsigned n = 0;
    unsigned d = 0;
    std::uint64_t seed = 0;
    std::vector<Complex> u;
    Complex gamma;
    std::uint64_t total_paths = 0;
    EndpointCounts counts;
    std::uint64_t finite_deduplicated = 0;
    std::string formula_value;
    bool agree = false;
    std::vector<std::vector<Complex>> finite_solutions;
    TrackingOptions options;
};

bool operator==(const TrackingOptions& a, const TrackingOptions& b);
bool operator==(const VerificationReport& a, const VerificationReport& b);

/**
 * Samples u from the seed, solves the critical system and compares the
 * number of distinct finite nonzero solutions with eddeg_projective(n, d).
 *
 * Throws WorkCapExceeded when d^(n+1) > options.path_cap and
 * InconclusiveVerification when more than max_failed_fraction of the paths fail.
 */
VerificationReport verify_eddeg(unsigned n, unsigned d, std::uint64_t seed, const TrackingOptions& options = {});

}  // namespace fermat
