#include "hullcraft/linear_code.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace hullcraft {

LinearCode::LinearCode(TowerPtr tower, const GfMatrix& spanning_rows)
    : tower_(std::move(tower)) {
    n_ = spanning_rows.cols();
    gen_ = row_basis(spanning_rows);
    k_ = gen_.rows();
}

LinearCode LinearCode::full_space(TowerPtr tower, std::size_t n) {
    GfMatrix id = GfMatrix::identity(tower, n);
    return LinearCode(tower, id);
}

LinearCode LinearCode::zero_code(TowerPtr tower, std::size_t n) {
    return LinearCode(tower, GfMatrix(tower, 0, n));
}

std::string LinearCode::to_text() const {
    std::ostringstream os;
    os << tower_->header() << '\n' << n_ << ' ' << k_ << '\n' << gen_.to_text();
    return os.str();
}

LinearCode LinearCode::from_text(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw ParseError("missing field header");
    TowerPtr t = FieldTower::parse_header(header);
    std::size_t n = 0, k = 0;
    if (!(in >> n >> k)) throw ParseError("missing n k line");
    GfMatrix g = GfMatrix::from_text(t, in);
    if (g.cols() != n) throw ParseError("generator column count != n");
    LinearCode c(t, g);
    if (c.k() != k) throw ParseError("generator rank != declared k");
    return c;
}

LinearCode euclidean_dual(const LinearCode& c) {
    return LinearCode(c.tower(), nullspace(c.gen()));
}

LinearCode hermitian_dual(const LinearCode& c) {
    return LinearCode(c.tower(), nullspace(c.gen()).frobenius());
}

LinearCode frobenius_code(const LinearCode& c) {
    return LinearCode(c.tower(), c.gen().frobenius());
}

HullReport hermitian_hull(const LinearCode& c) {
    HullReport rep;
    rep.hull_basis = rowspace_meet(c.gen(), hermitian_dual(c).gen());
    rep.hull_dim = rep.hull_basis.rows();
    return rep;
}

std::size_t hermitian_hull_dim(const LinearCode& c) {
    return meet_dim(c.gen(), hermitian_dual(c).gen());
}

LinearCode scale(const LinearCode& c, const std::vector<Elt>& v) {
    if (v.size() != c.n()) throw DimensionMismatch("scaling vector length != n");
    const FieldTower& t = *c.tower();
    for (Elt x : v)
        if (x == 0) throw ZeroScalar("scaling vector must have Hamming weight n");
    GfMatrix g = c.gen();
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t col = 0; col < g.cols(); ++col)
            g.at(r, col) = t.mul(g.at(r, col), v[col]);
    return LinearCode(c.tower(), g);
}

LinearCode puncture(const LinearCode& c, const std::set<std::size_t>& positions) {
    for (auto s : positions)
        if (s >= c.n()) throw DimensionMismatch("puncture position out of range");
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < c.n(); ++i)
        if (!positions.count(i)) keep.push_back(i);
    GfMatrix g(c.tower(), c.k(), keep.size());
    for (std::size_t r = 0; r < c.k(); ++r)
        for (std::size_t j = 0; j < keep.size(); ++j) g.at(r, j) = c.gen().at(r, keep[j]);
    return LinearCode(c.tower(), g);
}

LinearCode shorten(const LinearCode& c, const std::set<std::size_t>& positions) {
    for (auto s : positions)
        if (s >= c.n()) throw DimensionMismatch("shorten position out of range");
    if (positions.empty()) return c;
    const FieldTower& t = *c.tower();
    // messages m with (m G) zero on the shortened positions
    GfMatrix cols(c.tower(), c.k(), positions.size());
    std::size_t j = 0;
    for (auto s : positions) {
        for (std::size_t r = 0; r < c.k(); ++r) cols.at(r, j) = c.gen().at(r, s);
        ++j;
    }
    GfMatrix msgs = nullspace(cols.transpose());
    GfMatrix rows(c.tower(), msgs.rows(), c.n());
    for (std::size_t i = 0; i < msgs.rows(); ++i)
        for (std::size_t r = 0; r < c.k(); ++r) {
            const Elt m = msgs.at(i, r);
            if (m == 0) continue;
            for (std::size_t col = 0; col < c.n(); ++col)
                rows.at(i, col) = t.add(rows.at(i, col), t.mul(m, c.gen().at(r, col)));
        }
    LinearCode sub(c.tower(), rows);
    return puncture(sub, positions);
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k) {
    constexpr std::uint64_t cap = std::uint64_t(1) << 62;
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap;
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t message_count_capped(std::uint32_t q2, std::size_t k) {
    constexpr std::uint64_t cap = std::uint64_t(1) << 62;
    unsigned __int128 r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r *= q2;
        if (r > cap) return cap;
    }
    return static_cast<std::uint64_t>(r - 1);
}

namespace {

// Projective enumeration: the first nonzero message digit is fixed to 1, which
// preserves the weight profile and cuts the work by a factor of q^2-1.
long enumerate_min_weight(const LinearCode& c) {
    const FieldTower& t = *c.tower();
    const std::size_t k = c.k(), n = c.n();
    const std::uint32_t q2 = t.q2();
    long best = static_cast<long>(n) + 1;
    // layer[d] holds the partial codeword contributed by rows [0, d)
    std::vector<std::vector<Elt>> layer(k + 1, std::vector<Elt>(n, 0));

    auto rec = [&](auto&& self, std::size_t d) -> void {
        if (d == k) {
            long w = 0;
            for (Elt x : layer[k]) w += (x != 0);
            if (w < best) best = w;
            return;
        }
        for (std::uint32_t coeff = 0; coeff < q2; ++coeff) {
            if (coeff == 0) {
                layer[d + 1] = layer[d];
            } else {
                for (std::size_t col = 0; col < n; ++col)
                    layer[d + 1][col] = t.add(layer[d][col], t.mul(coeff, c.gen().at(d, col)));
            }
            self(self, d + 1);
        }
    };

    // leading coefficient fixed to 1 at row `lead`, rows before it zero
    for (std::size_t lead = 0; lead < k; ++lead) {
        for (std::size_t col = 0; col < n; ++col)
            layer[lead + 1][col] = c.gen().at(lead, col);
        rec(rec, lead + 1);
    }
    return best;
}

// Superregularity of A (generator in the systematic form [I | A]): every
// square minor of every size is nonsingular. Equivalent to all k-column
// minors of [I | A] being nonsingular.
bool all_minors_nonsingular(const FieldTower& t, const GfMatrix& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    const std::size_t maxj = std::min(rows, cols);
    std::vector<Elt> scratch;
    std::vector<std::size_t> rsel, csel;
    for (std::size_t j = 1; j <= maxj; ++j) {
        rsel.resize(j);
        for (std::size_t i = 0; i < j; ++i) rsel[i] = i;
        while (true) {
            csel.resize(j);
            for (std::size_t i = 0; i < j; ++i) csel[i] = i;
            while (true) {
                scratch.assign(j * j, 0);
                for (std::size_t r = 0; r < j; ++r)
                    for (std::size_t c = 0; c < j; ++c)
                        scratch[r * j + c] = a.at(rsel[r], csel[c]);
                // in-place elimination, fail on a zero pivot column
                bool singular = false;
                for (std::size_t piv = 0; piv < j; ++piv) {
                    std::size_t pr = piv;
                    while (pr < j && scratch[pr * j + piv] == 0) ++pr;
                    if (pr == j) {
                        singular = true;
                        break;
                    }
                    if (pr != piv)
                        for (std::size_t c = piv; c < j; ++c)
                            std::swap(scratch[piv * j + c], scratch[pr * j + c]);
                    const Elt iv = t.inv(scratch[piv * j + piv]);
                    for (std::size_t r = piv + 1; r < j; ++r) {
                        const Elt f = scratch[r * j + piv];
                        if (f == 0) continue;
                        const Elt fm = t.mul(f, iv);
                        for (std::size_t c = piv; c < j; ++c)
                            scratch[r * j + c] =
                                t.sub(scratch[r * j + c], t.mul(fm, scratch[piv * j + c]));
                    }
                }
                if (singular) return false;
                // next column subset
                std::size_t i = j;
                while (i > 0 && csel[i - 1] == cols - (j - i) - 1) --i;
                if (i == 0) break;
                ++csel[i - 1];
                for (std::size_t l = i; l < j; ++l) csel[l] = csel[l - 1] + 1;
            }
            std::size_t i = j;
            while (i > 0 && rsel[i - 1] == rows - (j - i) - 1) --i;
            if (i == 0) break;
            ++rsel[i - 1];
            for (std::size_t l = i; l < j; ++l) rsel[l] = rsel[l - 1] + 1;
        }
    }
    return true;
}

} // namespace

long min_distance(const LinearCode& c, std::uint64_t budget) {
    if (c.k() == 0) throw BadDimension("minimum distance of the zero code");
    const std::uint64_t required = message_count_capped(c.tower()->q2(), c.k());
    if (required > budget) throw BudgetExceeded(required, budget);
    return enumerate_min_weight(c);
}

bool is_mds(const LinearCode& c, std::uint64_t budget) {
    if (c.k() == 0 || c.k() == c.n()) return true;
    const std::uint64_t subsets = binomial_capped(c.n(), c.k());
    if (subsets <= budget) {
        // column-subset route on the systematic part
        RrefResult rr = rref(c.gen());
        for (std::size_t i = 0; i < c.k(); ++i)
            if (rr.pivots[i] != i) return false; // first k columns dependent
        GfMatrix a(c.tower(), c.k(), c.n() - c.k());
        for (std::size_t r = 0; r < c.k(); ++r)
            for (std::size_t col = c.k(); col < c.n(); ++col)
                a.at(r, col - c.k()) = c.gen().at(r, col);
        return all_minors_nonsingular(*c.tower(), a);
    }
    const std::uint64_t msgs = message_count_capped(c.tower()->q2(), c.k());
    if (msgs <= budget)
        return min_distance(c, budget) == static_cast<long>(c.n() - c.k() + 1);
    throw BudgetExceeded(std::min(subsets, msgs), budget);
}

std::size_t schur_square_dim(const LinearCode& c) {
    const FieldTower& t = *c.tower();
    if (c.k() == 0) return 0;
    GfMatrix prods(c.tower(), c.k() * (c.k() + 1) / 2, c.n());
    std::size_t r = 0;
    for (std::size_t i = 0; i < c.k(); ++i)
        for (std::size_t j = i; j < c.k(); ++j, ++r)
            for (std::size_t col = 0; col < c.n(); ++col)
                prods.at(r, col) = t.mul(c.gen().at(i, col), c.gen().at(j, col));
    return rank(prods);
}

Elt hermitian_ip(const FieldTower& t, const std::vector<Elt>& x, const std::vector<Elt>& y) {
    if (x.size() != y.size()) throw DimensionMismatch("inner product length mismatch");
    Elt acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        acc = t.add(acc, t.mul(x[i], t.frobenius_q(y[i])));
    return acc;
}

std::vector<Elt> vec_inv(const FieldTower& t, const std::vector<Elt>& v) {
    std::vector<Elt> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = t.inv(v[i]);
    return out;
}

std::vector<Elt> vec_inv_q(const FieldTower& t, const std::vector<Elt>& v) {
    std::vector<Elt> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = t.inv(t.pow(v[i], t.q()));
    return out;
}

} // namespace hullcraft
