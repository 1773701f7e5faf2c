#include "hullcraft/matrix.hpp"

#include <istream>
#include <sstream>

namespace hullcraft {

GfMatrix::GfMatrix(TowerPtr tower, std::size_t rows, std::size_t cols, std::vector<Elt> entries)
    : tower_(std::move(tower)), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_) throw DimensionMismatch("entry count != rows*cols");
    for (Elt x : a_)
        if (x >= tower_->q2()) throw BadSpec("entry outside the field");
}

GfMatrix GfMatrix::identity(TowerPtr tower, std::size_t n) {
    GfMatrix m(std::move(tower), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Elt> GfMatrix::row(std::size_t r) const {
    return std::vector<Elt>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

GfMatrix GfMatrix::transpose() const {
    GfMatrix t(tower_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

GfMatrix GfMatrix::frobenius() const {
    GfMatrix f(tower_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) f.a_[i] = tower_->frobenius_q(a_[i]);
    return f;
}

std::string GfMatrix::to_text() const {
    std::ostringstream os;
    os << rows_ << ' ' << cols_ << '\n';
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ' ';
            os << at(r, c);
        }
        os << '\n';
    }
    return os.str();
}

GfMatrix GfMatrix::from_text(TowerPtr tower, std::istream& in) {
    std::size_t rows = 0, cols = 0;
    if (!(in >> rows >> cols)) throw ParseError("matrix header expected");
    std::vector<Elt> entries;
    entries.reserve(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) {
        std::uint64_t v;
        if (!(in >> v)) throw ParseError("matrix entries truncated");
        if (v >= tower->q2()) throw ParseError("matrix entry outside the field");
        entries.push_back(static_cast<Elt>(v));
    }
    return GfMatrix(std::move(tower), rows, cols, std::move(entries));
}

RrefResult rref(const GfMatrix& m) {
    const FieldTower& t = *m.tower();
    RrefResult res;
    res.r = m;
    GfMatrix& a = res.r;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a.at(pr, c) == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(a.at(r, j), a.at(pr, j));
        const Elt iv = t.inv(a.at(r, c));
        if (iv != 1)
            for (std::size_t j = c; j < cols; ++j) a.at(r, j) = t.mul(iv, a.at(r, j));
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Elt f = a.at(i, c);
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j)
                a.at(i, j) = t.sub(a.at(i, j), t.mul(f, a.at(r, j)));
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

GfMatrix row_basis(const GfMatrix& m) {
    RrefResult rr = rref(m);
    GfMatrix out(m.tower(), rr.rank, m.cols());
    for (std::size_t r = 0; r < rr.rank; ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = rr.r.at(r, c);
    return out;
}

std::size_t rank(const GfMatrix& m) { return rref(m).rank; }

GfMatrix nullspace(const GfMatrix& m) {
    const FieldTower& t = *m.tower();
    RrefResult rr = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : rr.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    GfMatrix basis(m.tower(), free_cols.size(), cols);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        const std::size_t fc = free_cols[i];
        basis.at(i, fc) = 1;
        for (std::size_t r = 0; r < rr.rank; ++r)
            basis.at(i, rr.pivots[r]) = t.neg(rr.r.at(r, fc));
    }
    return row_basis(basis); // canonical order
}

GfMatrix stack(const GfMatrix& a, const GfMatrix& b) {
    if (a.cols() != b.cols() || !a.tower()->same_field(*b.tower()))
        throw DimensionMismatch("stack: column counts or towers differ");
    GfMatrix s(a.tower(), a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) s.at(r, c) = a.at(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) s.at(a.rows() + r, c) = b.at(r, c);
    return s;
}

GfMatrix rowspace_meet(const GfMatrix& a, const GfMatrix& b) {
    if (a.cols() != b.cols() || !a.tower()->same_field(*b.tower()))
        throw DimensionMismatch("rowspace_meet: column counts or towers differ");
    const FieldTower& t = *a.tower();
    const std::size_t n = a.cols();
    // left kernel of [a; -b]: vectors (u, v) with u a = v b
    GfMatrix negb(a.tower(), b.rows(), n);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < n; ++c) negb.at(r, c) = t.neg(b.at(r, c));
    GfMatrix st = stack(a, negb);
    GfMatrix kern = nullspace(st.transpose());
    GfMatrix cand(a.tower(), kern.rows(), n);
    for (std::size_t i = 0; i < kern.rows(); ++i)
        for (std::size_t r = 0; r < a.rows(); ++r) {
            const Elt u = kern.at(i, r);
            if (u == 0) continue;
            for (std::size_t c = 0; c < n; ++c)
                cand.at(i, c) = t.add(cand.at(i, c), t.mul(u, a.at(r, c)));
        }
    return row_basis(cand);
}

std::size_t meet_dim(const GfMatrix& a, const GfMatrix& b) {
    const std::size_t ra = rank(a), rb = rank(b), rs = rank(stack(a, b));
    return ra + rb - rs;
}

} // namespace hullcraft
