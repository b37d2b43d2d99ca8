#include "fermat/ed_formulas.hpp"

#include <stdexcept>

namespace fermat {

namespace {

void require_n(unsigned n, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

// d = 2 would need delta(m, 0); the counting argument divides by c^(d-2).
void require_degree(unsigned d, const char* what) {
    if (d < 3)
        throw std::invalid_argument(std::string(what) + ": unsupported degree d = " + std::to_string(d) +
                                    " (the formula needs d >= 3)");
}

BigInt power(unsigned base, unsigned exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

// d * sum_{i=0}^{top} (d-1)^i
BigInt geometric_times_d(unsigned d, unsigned top) {
    BigInt sum = 0;
    for (unsigned i = 0; i <= top; ++i) sum += power(d - 1, i);
    return sum * d;
}

BigInt sum_terms(const std::vector<DeltaTerm>& terms) {
    BigInt s = 0;
    for (const auto& t : terms) s += t.weight * BigInt(static_cast<unsigned long>(t.delta));
    return s;
}

std::vector<DeltaTerm> binomial_terms(unsigned top_m, unsigned choose_from, unsigned d,
                                      const DeltaOptions& options) {
    std::vector<DeltaTerm> terms;
    for (unsigned m = 1; m <= top_m; ++m) {
        DeltaTerm t;
        t.m = m;
        t.weight = binomial(choose_from, m + 1);
        t.delta = delta_fast(m, d - 2, options);
        terms.push_back(std::move(t));
    }
    return terms;
}

}  // namespace

std::string to_string(HypersurfaceKind kind) {
    switch (kind) {
        case HypersurfaceKind::Projective: return "projective";
        case HypersurfaceKind::Affine: return "affine";
        case HypersurfaceKind::Scaled: return "scaled";
    }
    return "unknown";
}

HypersurfaceKind hypersurface_kind_from_string(const std::string& name) {
    if (name == "projective") return HypersurfaceKind::Projective;
    if (name == "affine") return HypersurfaceKind::Affine;
    if (name == "scaled") return HypersurfaceKind::Scaled;
    throw std::invalid_argument("unknown hypersurface kind: " + name);
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt generic_bound_projective(unsigned n, unsigned d) {
    require_n(n, "generic_bound_projective");
    if (d < 2) throw std::invalid_argument("generic_bound_projective: d must be >= 2");
    return geometric_times_d(d, n - 1);
}

BigInt epsilon(unsigned n, unsigned d, const DeltaOptions& options) {
    require_n(n, "epsilon");
    require_degree(d, "epsilon");
    return sum_terms(binomial_terms(n, n + 1, d, options));
}

BigInt origin_multiplicity(unsigned n, unsigned d) {
    require_n(n, "origin_multiplicity");
    require_degree(d, "origin_multiplicity");
    return power(d - 1, n) * d;
}

BigInt system_degree(unsigned n, unsigned d) {
    require_n(n, "system_degree");
    require_degree(d, "system_degree");
    return geometric_times_d(d, n);
}

EDBreakdown eddeg_projective(unsigned n, unsigned d, const DeltaOptions& options) {
    require_n(n, "eddeg_projective");
    require_degree(d, "eddeg_projective");
    EDBreakdown b;
    b.kind = HypersurfaceKind::Projective;
    b.n = n;
    b.d = d;
    b.general_bound = generic_bound_projective(n, d);
    b.delta_terms = binomial_terms(n, n + 1, d, options);
    b.epsilon = sum_terms(b.delta_terms);
    b.origin_multiplicity = origin_multiplicity(n, d);
    b.system_degree = system_degree(n, d);
    b.ed_degree = b.general_bound - b.epsilon;
    return b;
}

EDBreakdown eddeg_affine(unsigned n, unsigned d, const DeltaOptions& options) {
    require_n(n, "eddeg_affine");
    require_degree(d, "eddeg_affine");
    EDBreakdown b;
    b.kind = HypersurfaceKind::Affine;
    b.n = n;
    b.d = d;
    b.general_bound = generic_bound_projective(n, d);
    b.delta_terms = binomial_terms(n - 1, n, d, options);
    b.epsilon = sum_terms(b.delta_terms);
    b.ed_degree = b.general_bound - b.epsilon;
    return b;
}

EDBreakdown eddeg_scaled(unsigned n, unsigned d, const ScalingVector& a, double tol,
                         const DeltaOptions& options) {
    require_n(n, "eddeg_scaled");
    require_degree(d, "eddeg_scaled");
    if (a.size() != n + 1)
        throw std::invalid_argument("eddeg_scaled: scaling vector must have n + 1 = " + std::to_string(n + 1) +
                                    " entries, got " + std::to_string(a.size()));
    if (n + 1 >= 64) throw std::invalid_argument("eddeg_scaled: n too large for subset enumeration");

    EDBreakdown b;
    b.kind = HypersurfaceKind::Scaled;
    b.n = n;
    b.d = d;
    b.general_bound = generic_bound_projective(n, d);

    // Subsets in increasing size, then increasing bitmask, for a stable report.
    const std::uint64_t full = std::uint64_t{1} << (n + 1);
    for (unsigned size = 2; size <= n + 1; ++size) {
        for (std::uint64_t mask = 0; mask < full; ++mask) {
            if (static_cast<unsigned>(__builtin_popcountll(mask)) != size) continue;
            std::vector<std::size_t> subset;
            for (unsigned i = 0; i <= n; ++i)
                if (mask & (std::uint64_t{1} << i)) subset.push_back(i);
            DeltaTerm t;
            t.m = size - 1;
            t.weight = 1;
            t.delta = delta_scaled(t.m, d - 2, a.select(subset), tol, options);
            t.subset = std::move(subset);
            b.delta_terms.push_back(std::move(t));
        }
    }
    b.epsilon = sum_terms(b.delta_terms);
    b.ed_degree = b.general_bound - b.epsilon;
    return b;
}

std::vector<EDBreakdown> eddeg_table(unsigned n, unsigned d_min, unsigned d_max, const DeltaOptions& options) {
    std::vector<EDBreakdown> rows;
    for (unsigned d = d_min; d <= d_max && d_min <= d_max; ++d) rows.push_back(eddeg_projective(n, d, options));
    return rows;
}

}  // namespace fermat
