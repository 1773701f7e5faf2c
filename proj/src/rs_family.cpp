#include "hullcraft/rs_family.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hullcraft {

std::string family_name(Family f) {
    switch (f) {
        case Family::Subgroup: return "subgroup";
        case Family::Coset: return "coset";
        case Family::PuncturedCoset: return "punctured-coset";
    }
    return "?";
}

FamilySpec FamilySpec::subgroup(const FieldTower& tw, std::size_t n, std::size_t k) {
    FamilySpec s;
    s.family = Family::Subgroup;
    s.q = tw.q();
    s.n = n;
    s.k = k;
    s.n1 = n;
    s.v = 1;
    s.k1 = k / tw.q();
    s.k2 = k % tw.q();
    return s;
}

FamilySpec FamilySpec::coset(const FieldTower& tw, std::size_t n1, std::vector<Elt> b,
                             std::size_t k, std::size_t t) {
    FamilySpec s;
    s.family = t ? Family::PuncturedCoset : Family::Coset;
    s.q = tw.q();
    s.n1 = n1;
    s.v = b.size();
    s.b = std::move(b);
    s.t = t;
    s.n = s.v * n1 - t;
    s.k = k;
    s.k1 = k / tw.q();
    s.k2 = k % tw.q();
    return s;
}

void FamilySpec::validate(const FieldTower& tw) const {
    const std::uint32_t qq = tw.q();
    if (q != qq) throw BadSpec("spec q does not match the tower");
    if (k1 * qq + k2 != k || k1 >= qq || k2 >= qq)
        throw BadSpec("k1, k2 are not the base-q digits of k");
    if (family == Family::Subgroup) {
        if (n == 0 || (tw.q2() - 1) % n != 0) throw NotADivisor("n must divide q^2-1");
        if (2 * k < n || k > n - 1) throw BadSpec("subgroup family needs n/2 <= k <= n-1");
        return;
    }
    if (n1 == 0 || (tw.q2() - 1) % n1 != 0) throw NotADivisor("n1 must divide q^2-1");
    if (std::gcd(n1, static_cast<std::size_t>(qq - 1)) != 1)
        throw BadSpec("gcd(n1, q-1) = 1 required for disjoint cosets");
    if (v == 0 || v > qq - 1) throw BadSpec("coset count must satisfy 1 <= v <= q-1");
    if (b.size() != v) throw BadSpec("coset representative count != v");
    std::set<Elt> distinct(b.begin(), b.end());
    if (distinct.size() != v) throw DuplicatePoint("coset representatives must be distinct");
    for (Elt x : b)
        if (x == 0 || !tw.in_subfield(x))
            throw BadSpec("coset representatives must lie in GF(q)*");
    if (n + t != v * n1) throw BadSpec("n != v*n1 - t");
    if (k > n) throw BadSpec("k > n");
    if (2 * k < n) throw BadSpec("coset family needs k >= n/2");
    if (family == Family::PuncturedCoset) {
        if (t + k >= n + 1) throw BadSpec("puncture count must satisfy t < n-k+1");
    } else if (t != 0) {
        throw BadSpec("coset family has t = 0");
    }
}

std::vector<Elt> multiplier_u(const FieldTower& t, const std::vector<Elt>& points) {
    if (points.empty()) throw BadDimension("empty point set");
    std::set<Elt> distinct(points.begin(), points.end());
    if (distinct.size() != points.size()) throw DuplicatePoint("evaluation points must be distinct");
    std::vector<Elt> u(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        Elt acc = 1;
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != i) acc = t.mul(acc, t.sub(points[i], points[j]));
        u[i] = acc;
    }
    return u;
}

LinearCode rs_eval(TowerPtr tower, const std::vector<Elt>& points, std::size_t k,
                   const std::vector<Elt>& multipliers) {
    const FieldTower& t = *tower;
    const std::size_t n = points.size();
    if (k == 0 || k > n) throw BadDimension("rs_eval needs 1 <= k <= n");
    std::vector<Elt> m = multipliers.empty() ? std::vector<Elt>(n, 1) : multipliers;
    if (m.size() != n) throw DimensionMismatch("multiplier length != point count");
    for (Elt x : m)
        if (x == 0) throw ZeroScalar("rs_eval multipliers must be nonzero");
    GfMatrix g(tower, k, n);
    for (std::size_t i = 0; i < n; ++i) {
        Elt pw = 1;
        for (std::size_t j = 0; j < k; ++j) {
            g.at(j, i) = t.mul(m[i], pw);
            pw = t.mul(pw, points[i]);
        }
    }
    return LinearCode(tower, g);
}

long long count_common_monomials(std::uint32_t q, std::size_t n, ExpoRange expo_i,
                                 ExpoRange expo_j) {
    if (n == 0) throw BadDimension("n must be positive");
    long long count = 0;
    for (long j = expo_i.lo; j <= expo_i.hi; ++j) {
        const long e = static_cast<long>((static_cast<long long>(j) * q) % static_cast<long long>(n));
        if (expo_j.contains(e)) ++count;
    }
    return count;
}

namespace {

void fill_bounds(HullReport& rep, Rational claimed, long long count) {
    rep.bound_claimed = claimed;
    rep.bound_count = count;
    rep.oracle_ok = static_cast<long long>(rep.hull_dim) >= rational_ceil(claimed) &&
                    static_cast<long long>(rep.hull_dim) >= count;
}

} // namespace

FamilyResult subgroup_candidate(TowerPtr tower, std::size_t n, std::size_t k) {
    FamilySpec spec = FamilySpec::subgroup(*tower, n, k);
    spec.validate(*tower);
    const std::vector<Elt> pts = tower->subgroup_of_order(static_cast<std::uint32_t>(n));
    const std::vector<Elt> u = multiplier_u(*tower, pts);
    LinearCode c = frobenius_code(rs_eval(tower, pts, k, vec_inv(*tower, u)));
    HullReport rep = hermitian_hull(c);
    const long long nn = static_cast<long long>(n), kk = static_cast<long long>(k);
    fill_bounds(rep, Rational(kk * (nn - kk - 2), static_cast<long long>(tower->q()) * tower->q()),
                count_common_monomials(tower->q(), n, {1, static_cast<long>(k)},
                                       {0, static_cast<long>(n - k) - 1}));
    return {std::move(spec), std::move(c), std::move(rep)};
}

std::vector<Elt> coset_points(const FieldTower& t, std::size_t n1, const std::vector<Elt>& b) {
    if (n1 == 0 || (t.q2() - 1) % n1 != 0) throw NotADivisor("n1 must divide q^2-1");
    if (b.empty()) throw BadSpec("no coset representatives");
    std::set<Elt> seen_rep(b.begin(), b.end());
    if (seen_rep.size() != b.size()) throw DuplicatePoint("repeated coset representative");
    for (Elt x : b)
        if (x == 0 || !t.in_subfield(x))
            throw BadSpec("coset representatives must lie in GF(q)*");
    const std::vector<Elt> g = t.subgroup_of_order(static_cast<std::uint32_t>(n1));
    std::vector<Elt> pts;
    pts.reserve(b.size() * n1);
    std::set<Elt> seen;
    for (Elt rep : b)
        for (Elt x : g) {
            const Elt y = t.mul(rep, x);
            if (!seen.insert(y).second)
                throw CosetCollision("cosets intersect (G ∩ GF(q)* is nontrivial)");
            pts.push_back(y);
        }
    return pts;
}

namespace {

// The evaluation code of Thm 3.3's proof on the v*n1 coset points; the k >= n/2
// hypothesis belongs to the hull bound, not to the construction, so it is not
// checked here (the punctured family needs parents below that threshold).
LinearCode build_coset_code(TowerPtr tower, std::size_t n1, const std::vector<Elt>& b,
                            std::size_t k) {
    const FieldTower& t = *tower;
    const std::vector<Elt> pts = coset_points(t, n1, b);
    const std::size_t n = pts.size();

    // u_i = h'(a_i) = n1 a_i^{n1-1} B_i with B_i in GF(q)*
    const Elt n1f = t.from_int(n1); // nonzero: gcd(n1, p) = 1 since n1 | q^2-1
    std::vector<Elt> h1p(n), w(n);
    const std::vector<Elt> u = multiplier_u(t, pts);
    for (std::size_t i = 0; i < n; ++i) {
        h1p[i] = t.mul(n1f, t.pow(pts[i], n1 - 1));
        const Elt big_b = t.div(u[i], h1p[i]);
        if (big_b == 0 || !t.in_subfield(big_b))
            throw Error("coset factor B_i not in GF(q)*"); // precluded by coset_points
        const Elt eta = t.norm_preimage(big_b);
        w[i] = t.inv(t.pow(eta, t.q())); // eta^{-q} = eta / B
    }
    LinearCode c0 = frobenius_code(rs_eval(tower, pts, k, vec_inv(t, h1p)));
    return scale(c0, w);
}

} // namespace

FamilyResult coset_candidate(TowerPtr tower, const FamilySpec& spec) {
    spec.validate(*tower);
    if (spec.family != Family::Coset) throw BadSpec("not a coset spec");
    LinearCode c = build_coset_code(tower, spec.n1, spec.b, spec.k);
    HullReport rep = hermitian_hull(c);
    const long long nn = static_cast<long long>(spec.n), kk = static_cast<long long>(spec.k);
    fill_bounds(rep, Rational(static_cast<long long>(spec.k1) * (nn - kk - 2), tower->q()), 0);
    return {spec, std::move(c), std::move(rep)};
}

FamilyResult punctured_candidate(TowerPtr tower, const FamilySpec& spec) {
    spec.validate(*tower);
    if (spec.family != Family::PuncturedCoset) throw BadSpec("not a punctured-coset spec");
    const std::size_t parent_n = spec.v * spec.n1;
    LinearCode base = build_coset_code(tower, spec.n1, spec.b, spec.k);
    std::set<std::size_t> trailing;
    for (std::size_t i = parent_n - spec.t; i < parent_n; ++i) trailing.insert(i);
    LinearCode c = puncture(base, trailing);
    HullReport rep = hermitian_hull(c);
    const long long nn = static_cast<long long>(spec.n), kk = static_cast<long long>(spec.k);
    Rational claimed(static_cast<long long>(spec.k1) * (nn - kk - 2), tower->q());
    claimed -= static_cast<long long>(spec.t);
    if (claimed < Rational(0)) claimed = Rational(0);
    fill_bounds(rep, claimed, 0);
    return {spec, std::move(c), std::move(rep)};
}

FamilyResult build_family(TowerPtr tower, const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Subgroup: return subgroup_candidate(tower, spec.n, spec.k);
        case Family::Coset: return coset_candidate(tower, spec);
        case Family::PuncturedCoset: return punctured_candidate(tower, spec);
    }
    throw BadSpec("unknown family");
}

} // namespace hullcraft
