#ifndef HULLCRAFT_MATRIX_HPP
#define HULLCRAFT_MATRIX_HPP

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "hullcraft/field.hpp"

namespace hullcraft {

/// Dense row-major matrix over GF(q^2). Immutable by convention: operations
/// return new values.
class GfMatrix {
  public:
    GfMatrix() = default;
    GfMatrix(TowerPtr tower, std::size_t rows, std::size_t cols)
        : tower_(std::move(tower)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    GfMatrix(TowerPtr tower, std::size_t rows, std::size_t cols, std::vector<Elt> entries);

    static GfMatrix identity(TowerPtr tower, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const TowerPtr& tower() const { return tower_; }

    Elt at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Elt& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const std::vector<Elt>& entries() const { return a_; }

    std::vector<Elt> row(std::size_t r) const;

    bool operator==(const GfMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const GfMatrix& o) const { return !(*this == o); }

    GfMatrix transpose() const;
    /// Entry-wise q-power Frobenius image.
    GfMatrix frobenius() const;

    /// Text format: first line `rows cols`, then one row per line of
    /// space-separated element encodings.
    std::string to_text() const;
    static GfMatrix from_text(TowerPtr tower, std::istream& in);

  private:
    TowerPtr tower_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elt> a_;
};

struct RrefResult {
    GfMatrix r;                      ///< full row echelon image, same shape as input
    std::size_t rank = 0;
    std::vector<std::size_t> pivots; ///< pivot column per nonzero row
};

/// Reduced row echelon form, leftmost-pivot topmost-row elimination.
RrefResult rref(const GfMatrix& m);

/// Row-reduces and drops zero rows: the canonical basis of the row space.
GfMatrix row_basis(const GfMatrix& m);

std::size_t rank(const GfMatrix& m);

/// Canonical (RREF) basis of {x : M x^T = 0}; rows() == cols(m) - rank(m).
GfMatrix nullspace(const GfMatrix& m);

/// Canonical basis of rowspace(a) ∩ rowspace(b), computed from the left kernel
/// of the stacked system [a; -b]. Throws DimensionMismatch unless the column
/// counts and towers agree.
GfMatrix rowspace_meet(const GfMatrix& a, const GfMatrix& b);

/// a on top of b. Throws DimensionMismatch on column/tower mismatch.
GfMatrix stack(const GfMatrix& a, const GfMatrix& b);

/// rank(a) + rank(b) - rank([a; b]), the meet dimension, without building a basis.
std::size_t meet_dim(const GfMatrix& a, const GfMatrix& b);

} // namespace hullcraft

#endif
