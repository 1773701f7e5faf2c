#ifndef HULLCRAFT_LINEAR_CODE_HPP
#define HULLCRAFT_LINEAR_CODE_HPP

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "hullcraft/matrix.hpp"
#include "hullcraft/rational.hpp"

namespace hullcraft {

/// Default work budget for exhaustive computations (codeword evaluations or
/// column subsets). Keeps the q=3, k <= 6 sweeps under a minute.
constexpr std::uint64_t kDefaultBudget = 2'000'000;

/// Linear [n, k] code over GF(q^2), stored as the canonical RREF generator
/// matrix, so two codes are equal iff their generator matrices are identical.
class LinearCode {
  public:
    /// Canonicalizes an arbitrary spanning matrix (k = rank of rows).
    LinearCode(TowerPtr tower, const GfMatrix& spanning_rows);

    static LinearCode full_space(TowerPtr tower, std::size_t n);
    static LinearCode zero_code(TowerPtr tower, std::size_t n);

    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    const GfMatrix& gen() const { return gen_; }
    const TowerPtr& tower() const { return tower_; }

    bool operator==(const LinearCode& o) const { return n_ == o.n_ && gen_ == o.gen_; }
    bool operator!=(const LinearCode& o) const { return !(*this == o); }

    /// Code text format: field header line, `n k`, then the generator matrix
    /// in the matrix text format.
    std::string to_text() const;
    static LinearCode from_text(std::istream& in);

  private:
    TowerPtr tower_;
    std::size_t n_ = 0, k_ = 0;
    GfMatrix gen_;
};

/// Hull inspection result. bound_claimed / bound_count stay zero unless a
/// family constructor fills them; oracle_ok records whether the computed hull
/// dimension meets both.
struct HullReport {
    std::size_t hull_dim = 0;
    GfMatrix hull_basis;
    Rational bound_claimed{0};
    long long bound_count = 0;
    bool oracle_ok = true;
};

LinearCode euclidean_dual(const LinearCode& c);
/// C^{perp_H} = (C^perp)^q.
LinearCode hermitian_dual(const LinearCode& c);
/// Component-wise Frobenius image C^q.
LinearCode frobenius_code(const LinearCode& c);

/// C ∩ C^{perp_H}, with canonical basis.
HullReport hermitian_hull(const LinearCode& c);
/// Hull dimension only (rank arithmetic, no basis).
std::size_t hermitian_hull_dim(const LinearCode& c);

/// Column scaling by a Hamming-weight-n vector. Throws ZeroScalar.
LinearCode scale(const LinearCode& c, const std::vector<Elt>& v);

LinearCode puncture(const LinearCode& c, const std::set<std::size_t>& positions);
LinearCode shorten(const LinearCode& c, const std::set<std::size_t>& positions);

/// Exact minimum weight by exhaustive message enumeration; the work unit count
/// is (q^2)^k - 1. Throws BadDimension for k = 0, BudgetExceeded when the
/// enumeration does not fit.
long min_distance(const LinearCode& c, std::uint64_t budget = kDefaultBudget);

/// True iff every k-subset of generator columns is nonsingular (equivalently
/// min_distance = n-k+1). Uses the column-subset test when C(n,k) <= budget,
/// else the exhaustive distance test; BudgetExceeded when neither fits.
bool is_mds(const LinearCode& c, std::uint64_t budget = kDefaultBudget);

/// Dimension of the span of all coordinate-wise products of codeword pairs.
std::size_t schur_square_dim(const LinearCode& c);

/// Hermitian inner product sum_i x_i y_i^q.
Elt hermitian_ip(const FieldTower& t, const std::vector<Elt>& x, const std::vector<Elt>& y);

/// Component-wise v^{-1} and v^{-q} (scaling vectors for the dual identities).
std::vector<Elt> vec_inv(const FieldTower& t, const std::vector<Elt>& v);
std::vector<Elt> vec_inv_q(const FieldTower& t, const std::vector<Elt>& v);

/// C(n, k) capped at 2^62 to keep budget comparisons overflow-free.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k);
/// (q^2)^k - 1 capped likewise.
std::uint64_t message_count_capped(std::uint32_t q2, std::size_t k);

} // namespace hullcraft

#endif
