/**
 * @file ed_formulas.hpp
 * @brief Closed-form ED-degree counts for projective, affine and scaled
 *        Fermat hypersurfaces, with the full term breakdown.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fermat/cyclotomic.hpp"
#include "fermat/vanishing_sums.hpp"

namespace fermat {

enum class HypersurfaceKind { Projective, Affine, Scaled };

std::string to_string(HypersurfaceKind kind);
HypersurfaceKind hypersurface_kind_from_string(const std::string& name);

/// One correction term weight * delta(m, d - 2). For scaled hypersurfaces the
/// weight is 1 and `subset` names the coordinates the term comes from.
struct DeltaTerm {
    unsigned m = 0;
    BigInt weight;
    std::uint64_t delta = 0;
    std::vector<std::size_t> subset;

    friend bool operator==(const DeltaTerm&, const DeltaTerm&) = default;
};

struct EDBreakdown {
    HypersurfaceKind kind = HypersurfaceKind::Projective;
    unsigned n = 0;
    unsigned d = 0;
    BigInt general_bound;
    std::vector<DeltaTerm> delta_terms;
    /// Sum of weight * delta over delta_terms.
    BigInt epsilon;
    /// Present for the projective case only.
    std::optional<BigInt> origin_multiplicity;
    std::optional<BigInt> system_degree;
    BigInt ed_degree;

    friend bool operator==(const EDBreakdown&, const EDBreakdown&) = default;
};

BigInt binomial(unsigned n, unsigned k);

/// d * sum_{i<n} (d-1)^i. Requires n >= 1, d >= 2.
BigInt generic_bound_projective(unsigned n, unsigned d);

/// sum_{m=1}^{n} C(n+1, m+1) delta(m, d-2). Requires d >= 3.
BigInt epsilon(unsigned n, unsigned d, const DeltaOptions& options = {});

/// d (d-1)^n
BigInt origin_multiplicity(unsigned n, unsigned d);

/// d * sum_{i<=n} (d-1)^i
BigInt system_degree(unsigned n, unsigned d);

EDBreakdown eddeg_projective(unsigned n, unsigned d, const DeltaOptions& options = {});
EDBreakdown eddeg_affine(unsigned n, unsigned d, const DeltaOptions& options = {});

/// Subtracts delta_scaled(|I|-1, d-2, a_I) for every I with |I| >= 2.
EDBreakdown eddeg_scaled(unsigned n, unsigned d, const ScalingVector& a, double tol = 1e-9,
                         const DeltaOptions& options = {});

/// eddeg_projective for d = d_min..d_max, ascending; empty when d_min > d_max.
std::vector<EDBreakdown> eddeg_table(unsigned n, unsigned d_min, unsigned d_max,
                                     const DeltaOptions& options = {});

}  // namespace fermat
