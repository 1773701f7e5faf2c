#ifndef HULLCRAFT_HULL_CONTROL_HPP
#define HULLCRAFT_HULL_CONTROL_HPP

#include <cstddef>
#include <vector>

#include "hullcraft/linear_code.hpp"

namespace hullcraft {

/// Generator matrix in the block shape [I_l 0 P; 0 I_{k-l} Q] after a column
/// permutation, with the first l rows spanning the Hermitian hull of the
/// permuted code. Such a presentation forces every hull vector to vanish on
/// the k-l middle columns, so it exists only when the hull misses enough
/// columns; standard_form throws NonOrthonormalizable otherwise.
struct StandardForm {
    LinearCode code;                ///< the permuted code
    std::vector<std::size_t> perm;  ///< perm[i] = original index of new column i
    std::size_t l = 0;              ///< hull dimension
    GfMatrix blocks;                ///< the k x n block generator (equals code.gen())

    GfMatrix p_block() const; ///< l x (n-k) right block of the hull rows
    GfMatrix q_block() const; ///< (k-l) x (n-k) right block of the complement rows
    /// P restricted to its first l / remaining n-k-l columns.
    GfMatrix p1() const;
    GfMatrix p2() const;
};

struct ScalingPlan {
    std::vector<std::size_t> positions; ///< coordinates scaled (original indexing)
    std::vector<Elt> lambdas;           ///< per-position scalars, norm_q != 1
    std::size_t l_target = 0;

    /// The full Hamming-weight-n vector this plan applies.
    std::vector<Elt> to_vector(const FieldTower& t, std::size_t n) const;
};

/// Attempts the proof's block presentation. Throws NonOrthonormalizable when
/// no column permutation supports it (hull support covers too many columns).
StandardForm standard_form(const LinearCode& c);

struct ReduceResult {
    LinearCode code;
    ScalingPlan plan;
};

/// Returns an equivalent code v . C with Hermitian hull dimension exactly
/// l_target <= hull_dim(C), scaling coordinates by scalars of non-unit norm.
/// The result is verified against the hull oracle before returning; n, k and
/// the weight distribution are unchanged. Throws TargetTooLarge,
/// UnsupportedField (q = 2) or ReductionFailed.
ReduceResult reduce_hull(const LinearCode& c, std::size_t l_target);

/// Smallest field element with norm_q != 1 (exists for q >= 3).
Elt smallest_non_unit_norm(const FieldTower& t);

} // namespace hullcraft

#endif
