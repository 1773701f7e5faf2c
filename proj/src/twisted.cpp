#include "hullcraft/twisted.hpp"

namespace hullcraft {

void TwistSpec::validate(const FieldTower& tw) const {
    if (n == 0 || (tw.q2() - 1) % n != 0) throw NotADivisor("n must divide q^2-1");
    if (k < 1 || k > n - 1) throw BadSpec("twisted code needs 1 <= k <= n-1");
    if (eta == 0) throw BadSpec("eta must be nonzero");
    if (eta >= tw.q2()) throw BadSpec("eta outside the field");
}

LinearCode twisted_code(TowerPtr tower, const TwistSpec& spec) {
    spec.validate(*tower);
    const FieldTower& t = *tower;
    const std::vector<Elt> pts = t.subgroup_of_order(static_cast<std::uint32_t>(spec.n));
    GfMatrix g(tower, spec.k, spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
        g.at(0, i) = t.add(1, t.mul(spec.eta, t.pow(pts[i], spec.k)));
        for (std::size_t j = 1; j < spec.k; ++j) g.at(j, i) = t.pow(pts[i], j);
    }
    LinearCode c(tower, g);
    if (c.k() != spec.k) throw Error("twisted generators unexpectedly dependent");
    return c;
}

LinearCode twisted_dual_basis(TowerPtr tower, const TwistSpec& spec) {
    spec.validate(*tower);
    const FieldTower& t = *tower;
    const std::vector<Elt> pts = t.subgroup_of_order(static_cast<std::uint32_t>(spec.n));
    const std::size_t rows = spec.n - spec.k;
    GfMatrix g(tower, rows, spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
        for (std::size_t j = 0; j + 1 < rows; ++j) g.at(j, i) = t.pow(pts[i], j);
        g.at(rows - 1, i) = t.sub(t.pow(pts[i], spec.n - spec.k - 1),
                                  t.mul(spec.eta, t.pow(pts[i], spec.n - 1)));
    }
    return LinearCode(tower, g);
}

TwistedDualityReport twisted_duality_report(TowerPtr tower, const TwistSpec& spec) {
    const FieldTower& t = *tower;
    const std::vector<Elt> pts = t.subgroup_of_order(static_cast<std::uint32_t>(spec.n));
    const std::vector<Elt> uinv = vec_inv(t, multiplier_u(t, pts));
    const LinearCode lhs = euclidean_dual(twisted_code(tower, spec));
    TwistedDualityReport rep;
    rep.displayed_ok = lhs == scale(twisted_dual_basis(tower, spec), uinv);
    TwistSpec negated = spec;
    negated.eta = t.neg(spec.eta);
    rep.negated_ok = lhs == scale(twisted_dual_basis(tower, negated), uinv);
    return rep;
}

bool check_twisted_duality(TowerPtr tower, const TwistSpec& spec) {
    return twisted_duality_report(tower, spec).displayed_ok;
}

bool is_twisted_mds(TowerPtr tower, const TwistSpec& spec, std::uint64_t budget) {
    return is_mds(twisted_code(tower, spec), budget);
}

TwistedResult twisted_hull_candidate(TowerPtr tower, const TwistSpec& spec) {
    spec.validate(*tower);
    if (2 * spec.k < spec.n) throw BadSpec("hull candidate needs k >= n/2");
    const FieldTower& t = *tower;
    const std::vector<Elt> pts = t.subgroup_of_order(static_cast<std::uint32_t>(spec.n));
    const std::vector<Elt> uinv = vec_inv(t, multiplier_u(t, pts));
    LinearCode c = frobenius_code(scale(twisted_code(tower, spec), uinv));
    HullReport rep = hermitian_hull(c);
    const long long nn = static_cast<long long>(spec.n), kk = static_cast<long long>(spec.k);
    rep.bound_claimed = Rational(kk * (nn - kk - 2), static_cast<long long>(t.q()) * t.q());
    rep.bound_count = count_common_monomials(
        t.q(), spec.n, {1, static_cast<long>(spec.k)},
        {1, static_cast<long>(spec.n - spec.k) - 2});
    rep.oracle_ok = static_cast<long long>(rep.hull_dim) >= rational_ceil(rep.bound_claimed) &&
                    static_cast<long long>(rep.hull_dim) >= rep.bound_count;
    return {spec, std::move(c), std::move(rep)};
}

} // namespace hullcraft
