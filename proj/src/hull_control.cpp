#include "hullcraft/hull_control.hpp"

#include <algorithm>
#include <set>

namespace hullcraft {

namespace {

GfMatrix permute_cols(const GfMatrix& m, const std::vector<std::size_t>& perm) {
    GfMatrix out(m.tower(), m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < perm.size(); ++c) out.at(r, c) = m.at(r, perm[c]);
    return out;
}

} // namespace

GfMatrix StandardForm::p_block() const {
    const std::size_t k = code.k(), n = code.n();
    GfMatrix p(code.tower(), l, n - k);
    for (std::size_t r = 0; r < l; ++r)
        for (std::size_t c = 0; c < n - k; ++c) p.at(r, c) = blocks.at(r, k + c);
    return p;
}

GfMatrix StandardForm::q_block() const {
    const std::size_t k = code.k(), n = code.n();
    GfMatrix q(code.tower(), k - l, n - k);
    for (std::size_t r = 0; r < k - l; ++r)
        for (std::size_t c = 0; c < n - k; ++c) q.at(r, c) = blocks.at(l + r, k + c);
    return q;
}

GfMatrix StandardForm::p1() const {
    GfMatrix p = p_block();
    GfMatrix out(code.tower(), l, std::min(l, p.cols()));
    for (std::size_t r = 0; r < out.rows(); ++r)
        for (std::size_t c = 0; c < out.cols(); ++c) out.at(r, c) = p.at(r, c);
    return out;
}

GfMatrix StandardForm::p2() const {
    GfMatrix p = p_block();
    const std::size_t off = std::min(l, p.cols());
    GfMatrix out(code.tower(), l, p.cols() - off);
    for (std::size_t r = 0; r < out.rows(); ++r)
        for (std::size_t c = 0; c < out.cols(); ++c) out.at(r, c) = p.at(r, off + c);
    return out;
}

std::vector<Elt> ScalingPlan::to_vector(const FieldTower& t, std::size_t n) const {
    std::vector<Elt> v(n, 1);
    for (std::size_t i = 0; i < positions.size(); ++i)
        v[positions[i]] = t.mul(v[positions[i]], lambdas[i]);
    return v;
}

StandardForm standard_form(const LinearCode& c) {
    const FieldTower& t = *c.tower();
    const std::size_t n = c.n(), k = c.k();
    HullReport hull = hermitian_hull(c);
    const std::size_t l = hull.hull_dim;

    std::vector<std::size_t> perm;
    perm.reserve(n);
    std::vector<bool> used(n, false);

    RrefResult hull_rr = rref(hull.hull_basis);
    for (std::size_t i = 0; i < l; ++i) {
        perm.push_back(hull_rr.pivots[i]);
        used[hull_rr.pivots[i]] = true;
    }

    if (l < k) {
        // complement basis, reduced modulo the hull so it vanishes on the hull pivots
        GfMatrix red = c.gen();
        for (std::size_t r = 0; r < red.rows(); ++r)
            for (std::size_t i = 0; i < l; ++i) {
                const Elt f = red.at(r, hull_rr.pivots[i]);
                if (f == 0) continue;
                for (std::size_t col = 0; col < n; ++col)
                    red.at(r, col) = t.sub(red.at(r, col), t.mul(f, hull.hull_basis.at(i, col)));
            }
        GfMatrix comp = row_basis(red); // k-l rows, zero on hull pivots

        // columns where the whole hull vanishes
        std::vector<std::size_t> zero_cols;
        for (std::size_t col = 0; col < n; ++col) {
            if (used[col]) continue;
            bool all_zero = true;
            for (std::size_t r = 0; r < l; ++r)
                if (hull.hull_basis.at(r, col) != 0) {
                    all_zero = false;
                    break;
                }
            if (all_zero) zero_cols.push_back(col);
        }
        GfMatrix comp_z(c.tower(), comp.rows(), zero_cols.size());
        for (std::size_t r = 0; r < comp.rows(); ++r)
            for (std::size_t j = 0; j < zero_cols.size(); ++j)
                comp_z.at(r, j) = comp.at(r, zero_cols[j]);
        RrefResult zrr = rref(comp_z);
        if (zrr.rank < k - l)
            throw NonOrthonormalizable(
                "no block presentation: the hull vanishes on only " +
                std::to_string(zero_cols.size()) + " usable columns, rank " +
                std::to_string(zrr.rank) + " < k-l = " + std::to_string(k - l));
        for (std::size_t i = 0; i < k - l; ++i) {
            perm.push_back(zero_cols[zrr.pivots[i]]);
            used[zero_cols[zrr.pivots[i]]] = true;
        }
    }
    for (std::size_t col = 0; col < n; ++col)
        if (!used[col]) perm.push_back(col);

    StandardForm sf{LinearCode(c.tower(), permute_cols(c.gen(), perm)), perm, l,
                    GfMatrix()};
    sf.blocks = sf.code.gen();

    // shape check: identity patterns and the middle zero block
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t col = 0; col < k; ++col)
            if (sf.blocks.at(r, col) != (r == col ? 1u : 0u))
                throw NonOrthonormalizable("permuted generator is not in block shape");
    // hull rows first: the permuted hull must equal the span of rows [0, l)
    GfMatrix hperm = row_basis(permute_cols(hull.hull_basis, perm));
    GfMatrix top(c.tower(), l, n);
    for (std::size_t r = 0; r < l; ++r)
        for (std::size_t col = 0; col < n; ++col) top.at(r, col) = sf.blocks.at(r, col);
    if (row_basis(top) != hperm)
        throw NonOrthonormalizable("hull rows do not span the hull after permutation");
    // P conj(P)^T = -I_l comes free: hull rows are Hermitian self-orthogonal
    GfMatrix p = sf.p_block();
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            Elt acc = 0;
            for (std::size_t col = 0; col < p.cols(); ++col)
                acc = t.add(acc, t.mul(p.at(i, col), t.frobenius_q(p.at(j, col))));
            const Elt want = (i == j) ? t.neg(1) : 0;
            if (acc != want)
                throw NonOrthonormalizable("hull block fails P conj(P)^T = -I");
        }
    return sf;
}

Elt smallest_non_unit_norm(const FieldTower& t) {
    for (Elt x = 1; x < t.q2(); ++x)
        if (t.norm_q(x) != 1) return x;
    throw UnsupportedField("every nonzero element has norm 1 (q = 2)");
}

ReduceResult reduce_hull(const LinearCode& c, std::size_t l_target) {
    const FieldTower& t = *c.tower();
    if (t.q() == 2) throw UnsupportedField("hull reduction needs q >= 3");
    const std::size_t l = hermitian_hull_dim(c);
    if (l_target > l)
        throw TargetTooLarge("l' = " + std::to_string(l_target) + " > hull dim " +
                             std::to_string(l));
    ScalingPlan plan;
    plan.l_target = l_target;
    if (l_target == l) return {c, plan};

    const Elt lambda = smallest_non_unit_norm(t);

    // Proof-faithful route: scale the first l-l' hull pivot coordinates of the
    // standard form. Falls back to the greedy route when the block shape does
    // not exist or the scaled hull misses the target.
    try {
        StandardForm sf = standard_form(c);
        ScalingPlan cand;
        cand.l_target = l_target;
        for (std::size_t i = 0; i < l - l_target; ++i) {
            cand.positions.push_back(sf.perm[i]);
            cand.lambdas.push_back(lambda);
        }
        LinearCode scaled = scale(c, cand.to_vector(t, c.n()));
        if (hermitian_hull_dim(scaled) == l_target) return {scaled, cand};
    } catch (const NonOrthonormalizable&) {
        // greedy route below
    }

    // Greedy route: one coordinate at a time, first (position, lambda) in scan
    // order that lowers the hull dimension by exactly one; every step is
    // checked against the hull oracle.
    std::vector<Elt> candidates;
    for (Elt x = 1; x < t.q2(); ++x)
        if (t.norm_q(x) != 1) candidates.push_back(x);
    LinearCode cur = c;
    std::size_t cur_l = l;
    while (cur_l > l_target) {
        bool found = false;
        for (std::size_t pos = 0; pos < c.n() && !found; ++pos) {
            for (Elt lam : candidates) {
                std::vector<Elt> v(c.n(), 1);
                v[pos] = lam;
                LinearCode next = scale(cur, v);
                if (hermitian_hull_dim(next) == cur_l - 1) {
                    cur = next;
                    --cur_l;
                    plan.positions.push_back(pos);
                    plan.lambdas.push_back(lam);
                    found = true;
                    break;
                }
            }
        }
        if (!found)
            throw ReductionFailed("no single-coordinate scaling lowers the hull below " +
                                  std::to_string(cur_l));
    }
    return {cur, plan};
}

} // namespace hullcraft
