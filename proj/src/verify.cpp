#include "hullcraft/verify.hpp"

#include <numeric>
#include <sstream>

namespace hullcraft {

std::size_t VerifySummary::failures() const {
    std::size_t f = 0;
    for (const auto& l : lines) f += !l.pass;
    return f;
}

namespace {

std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
    return os.str();
}

void add(VerifySummary& s, bool pass, std::string text) {
    s.lines.push_back({pass, std::move(text)});
}

std::vector<std::size_t> divisors_of(std::size_t m) {
    std::vector<std::size_t> out;
    for (std::size_t d = 1; d <= m; ++d)
        if (m % d == 0) out.push_back(d);
    return out;
}

// all size-v subsets of GF(q)*, in ascending encoding order
void for_each_subset(const std::vector<Elt>& star, std::size_t v,
                     const std::function<void(const std::vector<Elt>&)>& fn) {
    std::vector<std::size_t> idx(v);
    std::iota(idx.begin(), idx.end(), 0);
    if (v > star.size()) return;
    while (true) {
        std::vector<Elt> b(v);
        for (std::size_t i = 0; i < v; ++i) b[i] = star[idx[i]];
        fn(b);
        std::size_t i = v;
        while (i > 0 && idx[i - 1] == star.size() - (v - i) - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t l = i; l < v; ++l) idx[l] = idx[l - 1] + 1;
    }
}

struct FamilyInstances {
    std::vector<FamilySpec> specs;
};

FamilyInstances subgroup_instances(const FieldTower& t) {
    FamilyInstances out;
    for (std::size_t n : divisors_of(t.q2() - 1)) {
        if (n < 4) continue;
        for (std::size_t k = (n + 1) / 2; k + 2 <= n; ++k)
            out.specs.push_back(FamilySpec::subgroup(t, n, k));
    }
    return out;
}

FamilyInstances coset_instances(const FieldTower& t, std::size_t n_cap, bool include_punctured) {
    FamilyInstances out;
    const std::vector<Elt> star = t.subfield_star();
    for (std::size_t n1 : divisors_of(t.q2() - 1)) {
        if (std::gcd(n1, static_cast<std::size_t>(t.q() - 1)) != 1) continue;
        for (std::size_t v = 1; v <= static_cast<std::size_t>(t.q()) - 1; ++v) {
            const std::size_t big_n = v * n1;
            if (big_n < 2) continue;
            for_each_subset(star, v, [&](const std::vector<Elt>& b) {
                const std::size_t t_hi = include_punctured ? big_n - 1 : 0;
                for (std::size_t tt = 0; tt <= t_hi; ++tt) {
                    const std::size_t n = big_n - tt;
                    if (n < 2 || n > n_cap) continue;
                    for (std::size_t k = (n + 1) / 2; k <= n - 1; ++k) {
                        if (tt + k >= n + 1) continue; // t < n-k+1
                        out.specs.push_back(FamilySpec::coset(t, n1, b, k, tt));
                    }
                }
            });
        }
    }
    return out;
}

} // namespace

VerifySummary verify_thm32(TowerPtr tower) {
    VerifySummary s;
    const FieldTower& t = *tower;
    for (const FamilySpec& spec : subgroup_instances(t).specs) {
        FamilyResult fam = subgroup_candidate(tower, spec.n, spec.k);
        const long long h = static_cast<long long>(fam.hull.hull_dim);
        const long long cl = rational_ceil(fam.hull.bound_claimed);
        const bool chain = h >= fam.hull.bound_count && fam.hull.bound_count >= cl;
        const std::vector<Elt> pts = t.subgroup_of_order(static_cast<std::uint32_t>(spec.n));
        const bool dual_id =
            hermitian_dual(fam.code) == rs_eval(tower, pts, spec.n - spec.k);
        std::ostringstream os;
        os << "thm3.2 q=" << t.q() << " n=" << spec.n << " k=" << spec.k
           << ": claimed=" << rat_str(fam.hull.bound_claimed) << " ceil=" << cl
           << " count=" << fam.hull.bound_count << " oracle=" << h
           << " dual-identity=" << (dual_id ? "exact" : "MISMATCH");
        if (!chain)
            os << "  FINDING: oracle/count below the claimed bound";
        add(s, chain && dual_id, os.str());
    }
    return s;
}

VerifySummary verify_thm33_cor31(TowerPtr tower, std::size_t n_cap, bool include_punctured) {
    VerifySummary s;
    const FieldTower& t = *tower;
    for (std::size_t n1 : divisors_of(t.q2() - 1)) {
        const bool printed = n1 % (t.q() + 1) == 0;
        const bool implemented = std::gcd(n1, static_cast<std::size_t>(t.q() - 1)) == 1;
        std::ostringstream os;
        os << "thm3.3 q=" << t.q() << " n1=" << n1 << ": printed hypothesis (q+1)|n1: "
           << (printed ? "yes" : "no") << "; implemented gcd(n1,q-1)=1: "
           << (implemented ? "yes" : "no (skipped)");
        add(s, true, os.str());
    }
    for (const FamilySpec& spec : coset_instances(t, n_cap, include_punctured).specs) {
        FamilyResult fam = build_family(tower, spec);
        const long long h = static_cast<long long>(fam.hull.hull_dim);
        const long long need = std::max<long long>(0, rational_ceil(fam.hull.bound_claimed));
        std::ostringstream os;
        os << (spec.t ? "cor3.1" : "thm3.3") << " q=" << t.q() << " n1=" << spec.n1
           << " v=" << spec.v << " t=" << spec.t << " n=" << spec.n << " k=" << spec.k << " b=";
        for (std::size_t i = 0; i < spec.b.size(); ++i)
            os << (i ? "," : "") << spec.b[i];
        os << ": claimed=" << rat_str(fam.hull.bound_claimed) << " need>=" << need
           << " oracle=" << h;
        if (h < need) os << "  FINDING: oracle hull below the claimed bound";
        add(s, h >= need, os.str());
    }
    return s;
}

VerifySummary verify_thm31(TowerPtr tower, std::size_t n_lo, std::size_t n_hi,
                           std::uint64_t budget) {
    VerifySummary s;
    const FieldTower& t = *tower;
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        for (std::size_t d = 2; 2 * d <= n + 2; ++d) {
            auto recs = enumerate_for_length_distance(tower, n, d, budget);
            bool nonempty_c = false, equality = true;
            for (const auto& r : recs) {
                if (r.eaqec.c >= 1) nonempty_c = true;
                if (2 * r.eaqec.d + r.eaqec.k != r.eaqec.n + r.eaqec.c + 2) equality = false;
                if (r.eaqec.c != r.classical_n - r.classical_k - static_cast<long>(r.level))
                    equality = false;
            }
            std::ostringstream os;
            os << "thm3.1 q=" << t.q() << " n=" << n << " d=" << d << ": records=" << recs.size()
               << " family=" << (recs.empty() ? "-" : recs.front().family)
               << " hull=" << (recs.empty() ? 0 : recs.front().hull_dim)
               << (nonempty_c ? "" : "  FINDING: no record with c >= 1")
               << (equality ? "" : "  FINDING: Singleton equality violated");
            add(s, nonempty_c && equality && !recs.empty(), os.str());
        }
    }
    return s;
}

VerifySummary verify_prop31(TowerPtr tower, std::uint64_t budget) {
    VerifySummary s;
    const FieldTower& t = *tower;
    std::vector<FamilySpec> specs = subgroup_instances(t).specs;
    if (t.q() >= 4) {
        auto coset = coset_instances(t, 40, true).specs;
        specs.insert(specs.end(), coset.begin(), coset.end());
    }
    for (const FamilySpec& spec : specs) {
        FamilyResult fam = build_family(tower, spec);
        const std::size_t h = fam.hull.hull_dim;
        if (h < 1) continue;
        bool d_checkable = true;
        bool parent_mds = true;
        try {
            parent_mds = is_mds(fam.code, budget);
        } catch (const BudgetExceeded&) {
            d_checkable = false;
        }
        for (std::size_t lt = 0; lt <= h; ++lt) {
            ReduceResult red = reduce_hull(fam.code, lt);
            const std::size_t got = hermitian_hull_dim(red.code);
            bool ok = got == lt && red.code.n() == fam.code.n() && red.code.k() == fam.code.k();
            std::string d_note = " d-check=skipped(budget)";
            if (d_checkable) {
                const bool red_mds = is_mds(red.code, budget);
                ok = ok && red_mds == parent_mds && red_mds;
                d_note = red_mds ? " d=n-k+1 preserved" : " d-check=FAILED";
            }
            std::ostringstream os;
            os << "prop3.1 q=" << t.q() << " " << family_name(spec.family) << " n=" << spec.n
               << " k=" << spec.k << " h=" << h << " l'=" << lt << ": reduced-hull=" << got
               << d_note << " scaled-positions=" << red.plan.positions.size();
            if (!ok) os << "  FINDING: reduction missed the target";
            add(s, ok, os.str());
        }
    }
    return s;
}

VerifySummary verify_family_mds(TowerPtr tower, std::uint64_t budget, std::size_t coset_n_cap) {
    VerifySummary s;
    const FieldTower& t = *tower;
    std::vector<FamilySpec> specs = subgroup_instances(t).specs;
    auto coset = coset_instances(t, coset_n_cap, true).specs;
    specs.insert(specs.end(), coset.begin(), coset.end());
    for (const FamilySpec& spec : specs) {
        FamilyResult fam = build_family(tower, spec);
        const std::uint64_t msgs = message_count_capped(t.q2(), fam.code.k());
        const std::uint64_t subsets = binomial_capped(fam.code.n(), fam.code.k());
        std::ostringstream os;
        os << "mds q=" << t.q() << " " << family_name(spec.family) << " n=" << spec.n
           << " k=" << spec.k;
        if (msgs <= budget) {
            const long d = min_distance(fam.code, budget);
            const bool ok = d == static_cast<long>(fam.code.n() - fam.code.k() + 1);
            os << ": exhaustive d=" << d << " (want " << fam.code.n() - fam.code.k() + 1 << ")";
            if (!ok) os << "  FINDING: not MDS";
            add(s, ok, os.str());
        } else if (subsets <= budget) {
            const bool ok = is_mds(fam.code, budget);
            os << ": " << subsets << " column subsets, all minors "
               << (ok ? "nonsingular" : "NOT nonsingular");
            if (!ok) os << "  FINDING: not MDS";
            add(s, ok, os.str());
        } else {
            os << ": skipped (needs " << std::min(msgs, subsets) << " work units)";
            add(s, true, os.str());
        }
    }
    return s;
}

VerifySummary verify_corollary_counts(TowerPtr tower, std::size_t coset_n_cap) {
    VerifySummary s;
    const FieldTower& t = *tower;
    std::vector<FamilySpec> specs;
    for (std::size_t n : divisors_of(t.q2() - 1)) {
        if (n < 2) continue;
        for (std::size_t k = (n + 1) / 2; k <= n - 1; ++k)
            specs.push_back(FamilySpec::subgroup(t, n, k));
    }
    auto coset = coset_instances(t, coset_n_cap, true).specs;
    specs.insert(specs.end(), coset.begin(), coset.end());
    for (const FamilySpec& spec : specs) {
        DistinctCount dc = count_distinct_c(tower, spec);
        const long long need = rational_floor(dc.claimed) + 1;
        const char* tag = spec.family == Family::Subgroup ? "cor3.2"
                          : spec.family == Family::Coset  ? "cor3.3"
                                                          : "cor3.4";
        std::ostringstream os;
        os << tag << " q=" << t.q() << " " << family_name(spec.family) << " n=" << spec.n
           << " k=" << spec.k << " t=" << spec.t << ": hull=" << dc.hull_dim
           << " distinct-c=" << dc.count << " claimed=" << rat_str(dc.claimed)
           << " need>=" << need;
        if (dc.count < need) os << "  FINDING: fewer distinct c than claimed";
        add(s, dc.count >= need, os.str());
    }
    return s;
}

VerifySummary verify_prop41(TowerPtr tower, std::size_t n_cap) {
    VerifySummary s;
    const FieldTower& t = *tower;
    for (std::size_t n : divisors_of(t.q2() - 1)) {
        if (n < 2 || n > n_cap) continue;
        for (std::size_t k = 1; k <= n - 1; ++k) {
            bool all_ok = true;
            bool all_neg = true;
            for (Elt eta = 1; eta < t.q2(); ++eta) {
                TwistedDualityReport rep = twisted_duality_report(tower, {n, k, eta});
                all_ok = all_ok && rep.displayed_ok;
                all_neg = all_neg && rep.negated_ok;
            }
            std::ostringstream os;
            os << "prop4.1 q=" << t.q() << " n=" << n << " k=" << k << " (all eta): displayed-sign "
               << (all_ok ? "matches" : "MISMATCH") << ", negated-sign "
               << (all_neg ? "matches" : "differs");
            if (!all_ok) os << "  FINDING: dual description failed";
            add(s, all_ok, os.str());
        }
    }
    return s;
}

VerifySummary verify_prop42(TowerPtr tower, std::size_t n_cap, std::uint64_t budget) {
    VerifySummary s;
    const FieldTower& t = *tower;
    for (std::size_t n : divisors_of(t.q2() - 1)) {
        if (n < 2 || n > n_cap) continue;
        const std::vector<Elt> pts = t.subgroup_of_order(static_cast<std::uint32_t>(n));
        std::set<Elt> in_alpha(pts.begin(), pts.end());
        for (std::size_t k = 1; k <= n - 1; ++k) {
            std::size_t checked = 0, passed = 0;
            for (Elt eta = 1; eta < t.q2(); ++eta) {
                if (in_alpha.count(eta)) continue;
                ++checked;
                passed += is_twisted_mds(tower, {n, k, eta}, budget);
            }
            if (checked == 0) continue;
            std::ostringstream os;
            os << "prop4.2 q=" << t.q() << " n=" << n << " k=" << k << ": " << passed << "/"
               << checked << " eta outside the subgroup give MDS";
            if (passed != checked) os << "  FINDING: non-MDS twisted code with eta outside";
            add(s, passed == checked, os.str());
        }
    }
    return s;
}

VerifySummary verify_thm41(TowerPtr tower, std::size_t n_cap) {
    VerifySummary s;
    const FieldTower& t = *tower;
    for (std::size_t n : divisors_of(t.q2() - 1)) {
        if (n < 2 || n > n_cap) continue;
        for (std::size_t k = (n + 1) / 2; k <= n - 1; ++k) {
            for (Elt eta = 1; eta < t.q2(); ++eta) {
                TwistedResult res = twisted_hull_candidate(tower, {n, k, eta});
                const long long h = static_cast<long long>(res.hull.hull_dim);
                const long long cl = rational_ceil(res.hull.bound_claimed);
                const bool ok = h >= std::max<long long>(0, cl);
                const bool dual_id =
                    hermitian_dual(res.code) == twisted_dual_basis(tower, res.spec);
                std::ostringstream os;
                os << "thm4.1 q=" << t.q() << " n=" << n << " k=" << k << " eta=" << eta
                   << ": claimed=" << rat_str(res.hull.bound_claimed) << " ceil=" << cl
                   << " count=" << res.hull.bound_count << " oracle=" << h
                   << " dual-identity=" << (dual_id ? "exact" : "MISMATCH");
                if (!ok) os << "  FINDING: oracle hull below the claimed bound";
                add(s, ok && dual_id, os.str());
            }
        }
    }
    return s;
}

VerifySummary verify_schur(TowerPtr tower, std::size_t n_cap) {
    VerifySummary s;
    const FieldTower& t = *tower;
    for (std::size_t n : divisors_of(t.q2() - 1)) {
        if (n < 2 || n > n_cap) continue;
        for (std::size_t k = 3; 2 * k <= n; ++k) {
            for (Elt eta = 1; eta < t.q2(); ++eta) {
                const std::size_t dim = schur_square_dim(twisted_code(tower, {n, k, eta}));
                const std::size_t want = std::min(2 * k, n);
                // measured collapse: 2k = n with eta^2 = -1 squares the twist
                // generator into a monomial; rank is exactly 2k-1 there
                const bool collapse = (2 * k == n) && t.mul(eta, eta) == t.neg(1);
                const bool ok = collapse ? dim == 2 * k - 1 : dim >= want;
                std::ostringstream os;
                os << "schur q=" << t.q() << " n=" << n << " k=" << k << " eta=" << eta
                   << ": rank=" << dim
                   << (collapse ? " (documented exception: eta^2=-1, 2k=n, rank 2k-1)"
                                : (" (want >= " + std::to_string(want) + ")"));
                if (!ok) os << "  FINDING: Schur rank outside the expected range";
                add(s, ok, os.str());
            }
        }
    }
    return s;
}

} // namespace hullcraft
