#ifndef HULLCRAFT_EAQEC_HPP
#define HULLCRAFT_EAQEC_HPP

#include <nlohmann/json.hpp>

#include "hullcraft/hull_control.hpp"
#include "hullcraft/rs_family.hpp"
#include "hullcraft/twisted.hpp"

namespace hullcraft {

/// EAQEC parameter tuple [[n, k, d, c]]_q.
struct EaqecParams {
    std::uint32_t q = 0;
    long n = 0, k = 0, d = 0, c = 0;

    bool operator==(const EaqecParams&) const = default;
};

/// [[n, k-l, d, n-k-l]]_q from a classical [n,k,d] code used at hull level l.
EaqecParams css_primary(std::uint32_t q, long n, long k, long d, long l);
/// [[n, n-k-l, d_perp, k-l]]_q, the dual-side CSS form.
EaqecParams css_dual(std::uint32_t q, long n, long k, long d_perp, long l);

/// (n + c + 2) - (2d + k); zero iff the MDS EAQEC equality holds.
long defect(const EaqecParams& p);
/// defect == 0 and 2d <= n + 2.
bool is_mds_eaqec(const EaqecParams& p);

/// One sweep output row.
struct DiscoveryRecord {
    std::uint32_t q = 0;
    std::string family; ///< subgroup | coset | punctured-coset | twisted | generic
    nlohmann::ordered_json family_spec;
    long classical_n = 0, classical_k = 0, classical_d = 0;
    std::size_t hull_dim = 0;
    std::size_t level = 0;
    EaqecParams eaqec;
    long defect_value = 0;
    bool mds = false;
    ScalingPlan plan; ///< scaling that realizes this hull level (empty at level = hull_dim)
};

nlohmann::ordered_json family_spec_json(const FamilySpec& s);
nlohmann::ordered_json twist_spec_json(const TwistSpec& s, std::uint32_t q, std::size_t n);

/// Emits one record per hull level l = 0..min(h, n-k-1) for a constructed
/// classical code; every record satisfies the MDS EAQEC equality and carries
/// the oracle-verified scaling plan reaching its level.
std::vector<DiscoveryRecord> records_for_code(const LinearCode& code, std::uint32_t q,
                                              const std::string& family,
                                              nlohmann::ordered_json spec_json, long classical_d,
                                              std::size_t hull_dim);

/// RS code at the first n field elements in encoding order; n = q^2+1 appends
/// the projective column taking the top coefficient. MDS for every k.
LinearCode generic_grs_code(TowerPtr tower, std::size_t n, std::size_t k);

/// Theorem 3.1 pipeline: builds an [n, n-d+1, d] MDS code (subgroup or coset
/// family when the arithmetic conditions hold, generic GRS otherwise,
/// including the extended length n = q^2+1), then emits records per level.
/// Requires 2 <= n <= q^2+1 and 2 <= d <= (n+2)/2 (BadRange otherwise).
std::vector<DiscoveryRecord> enumerate_for_length_distance(TowerPtr tower, std::size_t n,
                                                           std::size_t d,
                                                           std::uint64_t budget = kDefaultBudget);

struct DistinctCount {
    long long count = 0;     ///< distinct nonzero c values over the level sweep
    Rational claimed{0};     ///< the corollary's rational bound
    std::size_t hull_dim = 0;
};

/// Level sweep over a constructed family member; count of distinct c values
/// among emitted MDS EAQEC records. The corollary postcondition is
/// count >= floor(claimed) + 1.
DistinctCount count_distinct_c(TowerPtr tower, const FamilySpec& spec);
/// Subgroup-family shorthand for (q, n, k).
DistinctCount count_distinct_c(TowerPtr tower, std::size_t n, std::size_t k);

} // namespace hullcraft

#endif
