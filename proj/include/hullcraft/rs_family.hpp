#ifndef HULLCRAFT_RS_FAMILY_HPP
#define HULLCRAFT_RS_FAMILY_HPP

#include <string>
#include <vector>

#include "hullcraft/linear_code.hpp"

namespace hullcraft {

/// Inclusive exponent range [lo, hi]; empty when lo > hi.
struct ExpoRange {
    long lo = 0;
    long hi = -1;
    bool contains(long v) const { return lo <= v && v <= hi; }
};

enum class Family { Subgroup, Coset, PuncturedCoset };

std::string family_name(Family f);

/// Parameters of one constructed code family member.
struct FamilySpec {
    Family family = Family::Subgroup;
    std::uint32_t q = 0;
    std::size_t n = 0; ///< code length (after puncturing, for the punctured family)
    std::size_t k = 0;
    std::size_t n1 = 0;     ///< subgroup order (coset families)
    std::size_t v = 0;      ///< coset count
    std::vector<Elt> b;     ///< coset representatives in GF(q)*
    std::size_t t = 0;      ///< punctured position count
    std::size_t k1 = 0, k2 = 0; ///< base-q digits of k

    static FamilySpec subgroup(const FieldTower& tw, std::size_t n, std::size_t k);
    static FamilySpec coset(const FieldTower& tw, std::size_t n1, std::vector<Elt> b,
                            std::size_t k, std::size_t t = 0);

    /// Enforces the family invariants (divisibility, gcd(n1, q-1) = 1,
    /// distinct subfield representatives, t < n-k+1, k >= n/2).
    void validate(const FieldTower& tw) const;
};

/// u_i = prod_{j != i} (a_i - a_j) = h'(a_i) for h = prod (x - a_j).
/// Throws DuplicatePoint.
std::vector<Elt> multiplier_u(const FieldTower& t, const std::vector<Elt>& points);

/// Generalized RS evaluation code: rows (m_1 a_1^j, ..., m_n a_n^j),
/// j = 0..k-1. Empty multipliers mean all-ones. Throws BadDimension unless
/// 1 <= k <= n, ZeroScalar on a zero multiplier.
LinearCode rs_eval(TowerPtr tower, const std::vector<Elt>& points, std::size_t k,
                   const std::vector<Elt>& multipliers = {});

/// |{ j in expo_i : (j*q mod n) in expo_j }|, exponents reduced mod n (the
/// ranges are expected to lie within [0, n)).
long long count_common_monomials(std::uint32_t q, std::size_t n, ExpoRange expo_i,
                                 ExpoRange expo_j);

struct FamilyResult {
    FamilySpec spec;
    LinearCode code;
    HullReport hull;
};

/// The subgroup family: C = (U^{-1} RS(n,k))^q at the order-n subgroup.
/// Fills the hull report with the computed hull, the claimed bound
/// k(n-k-2)/q^2 and the common-monomial count. Requires n | q^2-1 and
/// n/2 <= k <= n-1.
FamilyResult subgroup_candidate(TowerPtr tower, std::size_t n, std::size_t k);

/// Union of cosets b_i * G for the order-n1 subgroup G; |A| = v * n1.
/// Throws CosetCollision when two cosets intersect.
std::vector<Elt> coset_points(const FieldTower& t, std::size_t n1, const std::vector<Elt>& b);

/// The coset-union family of Thm 3.3's proof: eta^{-q} * ((h1')^{-1} RS(n,k))^q
/// with h1'(x) = n1 x^{n1-1} and eta the norm preimages of the coset factors.
/// Claimed hull bound k1(n-k-2)/q.
FamilyResult coset_candidate(TowerPtr tower, const FamilySpec& spec);

/// Coset family punctured at the trailing t positions; claimed bound
/// k1(n-k-2)/q - t (clamped at zero).
FamilyResult punctured_candidate(TowerPtr tower, const FamilySpec& spec);

/// Dispatches on spec.family.
FamilyResult build_family(TowerPtr tower, const FamilySpec& spec);

} // namespace hullcraft

#endif
