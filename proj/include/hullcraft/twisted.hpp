#ifndef HULLCRAFT_TWISTED_HPP
#define HULLCRAFT_TWISTED_HPP

#include "hullcraft/linear_code.hpp"
#include "hullcraft/rs_family.hpp"

namespace hullcraft {

/// Twisted RS parameters: evaluation at the order-n multiplicative subgroup,
/// twist 1 + eta x^k in the first basis polynomial.
struct TwistSpec {
    std::size_t n = 0; ///< subgroup order, n | q^2-1
    std::size_t k = 0; ///< 1 <= k <= n-1
    Elt eta = 0;       ///< nonzero

    void validate(const FieldTower& tw) const;
};

/// Evaluation code of span{1 + eta x^k, x, x^2, ..., x^{k-1}} at the subgroup;
/// dimension exactly k.
LinearCode twisted_code(TowerPtr tower, const TwistSpec& spec);

/// Evaluation code of span{1, x, ..., x^{n-k-2}, x^{n-k-1} - eta x^{n-1}}.
LinearCode twisted_dual_basis(TowerPtr tower, const TwistSpec& spec);

struct TwistedDualityReport {
    /// euclidean_dual(twisted_code) == U^{-1} . twisted_dual_basis(eta)
    /// (the displayed h-basis, which carries the minus sign already).
    bool displayed_ok = false;
    /// Same with eta replaced by -eta inside the h-basis formula; coincides
    /// with displayed_ok in characteristic 2.
    bool negated_ok = false;
};

/// Checks both sign placements of the dual description.
TwistedDualityReport twisted_duality_report(TowerPtr tower, const TwistSpec& spec);

/// True iff the displayed dual description matches exactly.
bool check_twisted_duality(TowerPtr tower, const TwistSpec& spec);

/// is_mds of the twisted code; when eta is outside the subgroup the result is
/// guaranteed true, otherwise it is merely reported.
bool is_twisted_mds(TowerPtr tower, const TwistSpec& spec,
                    std::uint64_t budget = kDefaultBudget);

struct TwistedResult {
    TwistSpec spec;
    LinearCode code;
    HullReport hull;
};

/// C = (U^{-1} . twisted_code)^q with hull report: claimed bound k(n-k-2)/q^2,
/// common-monomial count over [1..k]*q mod n against [1..n-k-2]. Requires
/// n/2 <= k <= n-1.
TwistedResult twisted_hull_candidate(TowerPtr tower, const TwistSpec& spec);

} // namespace hullcraft

#endif
