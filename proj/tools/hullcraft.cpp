// hullcraft: exact construction of MDS codes over GF(q^2) with controlled
// Hermitian hulls and the derived entanglement-assisted quantum parameters.
//
// Subcommands:
//   enumerate  sweep (n, d) ranges or a single family, emit discovery records
//   verify     run the per-theorem oracle sweeps, report findings
//   mindist    exact minimum distance of a serialized code
//
// Exit codes: 0 ok, 1 verification finding, 2 invalid config/parse error,
// 3 budget exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <thread>

#include "hullcraft/records.hpp"
#include "hullcraft/verify.hpp"

using namespace hullcraft;

namespace {

struct Range {
    long lo = 0, hi = -1;
    bool single() const { return lo == hi; }
    bool empty() const { return hi < lo; }
};

Range parse_range(const std::string& s) {
    Range r;
    const auto colon = s.find(':');
    if (colon == std::string::npos) {
        r.lo = r.hi = std::stol(s);
    } else {
        r.lo = std::stol(s.substr(0, colon));
        r.hi = std::stol(s.substr(colon + 1));
    }
    return r;
}

bool prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& m) {
    if (q < 2) return false;
    for (std::uint32_t d = 2; d <= q; ++d) {
        if (q % d) continue;
        p = d;
        m = 0;
        std::uint32_t w = q;
        while (w % d == 0) {
            w /= d;
            ++m;
        }
        return w == 1;
    }
    return false;
}

std::uint64_t budget_from_env(std::uint64_t fallback) {
    if (const char* env = std::getenv("HULLCRAFT_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (...) {
            return fallback;
        }
    }
    return fallback;
}

// static index partition keeps the output independent of the worker count
std::vector<std::vector<DiscoveryRecord>>
run_tasks(const std::vector<std::function<std::vector<DiscoveryRecord>()>>& tasks,
          unsigned workers) {
    std::vector<std::vector<DiscoveryRecord>> slots(tasks.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) slots[i] = tasks[i]();
        return slots;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < tasks.size(); i += workers) slots[i] = tasks[i]();
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return slots;
}

void write_records(std::vector<DiscoveryRecord> recs, const std::string& out_path,
                   const std::string& format) {
    sort_records(recs);
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw ParseError("cannot open output path " + out_path);
        os = &file;
    }
    if (format == "csv") {
        *os << csv_header() << '\n';
        for (const auto& r : recs) *os << record_to_csv(r) << '\n';
    } else {
        for (const auto& r : recs) *os << record_to_jsonl(r) << '\n';
    }
}

int cmd_enumerate(std::uint32_t q, const std::string& family, const std::string& n_s,
                  const std::string& k_s, const std::string& d_s, long t_opt, long eta_opt,
                  std::uint64_t budget, const std::string& format, const std::string& out,
                  unsigned workers) {
    std::uint32_t p = 0, m = 0;
    if (!prime_power(q, p, m) || q < 3) {
        std::cerr << "enumerate: q must be a prime power >= 3\n";
        return 2;
    }
    TowerPtr tower = FieldTower::build(p, m);
    const long q2 = static_cast<long>(tower->q2());

    Range nr = n_s.empty() ? Range{} : parse_range(n_s);
    Range kr = k_s.empty() ? Range{} : parse_range(k_s);
    Range dr = d_s.empty() ? Range{} : parse_range(d_s);

    std::vector<std::function<std::vector<DiscoveryRecord>()>> tasks;

    if (family.empty()) {
        // (n, d) sweep via the Theorem 3.1 pipeline
        if (n_s.empty() || d_s.empty() || !k_s.empty()) {
            std::cerr << "enumerate: range mode needs --n and --d (and no --k)\n";
            return 2;
        }
        if (nr.empty() || dr.empty() || nr.lo < 2 || nr.hi > q2 + 1) {
            std::cerr << "enumerate: n range outside [2, q^2+1]\n";
            return 2;
        }
        const bool strict = nr.single() && dr.single();
        for (long n = nr.lo; n <= nr.hi; ++n)
            for (long d = dr.lo; d <= dr.hi; ++d) {
                if (!strict && (d < 2 || 2 * d > n + 2)) continue;
                tasks.push_back([tower, n, d, budget] {
                    return enumerate_for_length_distance(tower, static_cast<std::size_t>(n),
                                                         static_cast<std::size_t>(d), budget);
                });
            }
        if (tasks.empty()) {
            std::cerr << "enumerate: no valid (n, d) pairs in range\n";
            return 2;
        }
    } else {
        if (n_s.empty() || k_s.empty() || !d_s.empty()) {
            std::cerr << "enumerate: family mode needs --n and --k (and no --d)\n";
            return 2;
        }
        if (nr.empty() || kr.empty()) {
            std::cerr << "enumerate: empty --n or --k range\n";
            return 2;
        }
        for (long n = nr.lo; n <= nr.hi; ++n)
            for (long k = kr.lo; k <= kr.hi; ++k) {
                if (n < 1 || k < 1 || k > n || n > q2 + 1) {
                    if (nr.single() && kr.single()) {
                        std::cerr << "enumerate: invalid (n, k) = (" << n << ", " << k << ")\n";
                        return 2;
                    }
                    continue;
                }
                const std::size_t nn = static_cast<std::size_t>(n);
                const std::size_t kk = static_cast<std::size_t>(k);
                if (family == "subgroup") {
                    FamilySpec spec = FamilySpec::subgroup(*tower, nn, kk);
                    try {
                        spec.validate(*tower);
                    } catch (const Error& e) {
                        if (nr.single() && kr.single()) {
                            std::cerr << "enumerate: " << e.what() << '\n';
                            return 2;
                        }
                        continue;
                    }
                    tasks.push_back([tower, spec, n, k] {
                        FamilyResult fam = subgroup_candidate(tower, spec.n, spec.k);
                        return records_for_code(fam.code, tower->q(), family_name(spec.family),
                                                family_spec_json(spec), n - k + 1,
                                                fam.hull.hull_dim);
                    });
                } else if (family == "coset" || family == "punctured") {
                    const std::size_t t_count =
                        family == "punctured" ? static_cast<std::size_t>(std::max(1L, t_opt)) : 0;
                    const std::size_t parent_n = nn + t_count;
                    std::size_t best_n1 = 0;
                    for (std::size_t n1 = parent_n; n1 >= 2; --n1) {
                        if (parent_n % n1 || (tower->q2() - 1) % n1) continue;
                        if (std::gcd(n1, static_cast<std::size_t>(q - 1)) != 1) continue;
                        if (parent_n / n1 > static_cast<std::size_t>(q) - 1) continue;
                        best_n1 = n1;
                        break;
                    }
                    if (best_n1 == 0) {
                        if (nr.single() && kr.single()) {
                            std::cerr << "enumerate: no valid coset decomposition for n = " << n
                                      << "\n";
                            return 2;
                        }
                        continue;
                    }
                    const std::vector<Elt> star = tower->subfield_star();
                    std::vector<Elt> b(star.begin(), star.begin() + parent_n / best_n1);
                    FamilySpec spec = FamilySpec::coset(*tower, best_n1, b, kk, t_count);
                    try {
                        spec.validate(*tower);
                    } catch (const Error& e) {
                        if (nr.single() && kr.single()) {
                            std::cerr << "enumerate: " << e.what() << '\n';
                            return 2;
                        }
                        continue;
                    }
                    tasks.push_back([tower, spec, n, k] {
                        FamilyResult fam = build_family(tower, spec);
                        return records_for_code(fam.code, tower->q(), family_name(spec.family),
                                                family_spec_json(spec), n - k + 1,
                                                fam.hull.hull_dim);
                    });
                } else if (family == "twisted") {
                    Elt eta = 0;
                    if (eta_opt >= 0) {
                        eta = static_cast<Elt>(eta_opt);
                    } else {
                        // smallest eta outside the subgroup, else 1
                        try {
                            auto pts = tower->subgroup_of_order(static_cast<std::uint32_t>(nn));
                            std::set<Elt> inside(pts.begin(), pts.end());
                            eta = 1;
                            for (Elt e = 1; e < tower->q2(); ++e)
                                if (!inside.count(e)) {
                                    eta = e;
                                    break;
                                }
                        } catch (const Error&) {
                            eta = 1;
                        }
                    }
                    TwistSpec spec{nn, kk, eta};
                    try {
                        spec.validate(*tower);
                        if (2 * kk < nn) throw BadSpec("twisted hull family needs k >= n/2");
                    } catch (const Error& e) {
                        if (nr.single() && kr.single()) {
                            std::cerr << "enumerate: " << e.what() << '\n';
                            return 2;
                        }
                        continue;
                    }
                    tasks.push_back([tower, spec, budget]() -> std::vector<DiscoveryRecord> {
                        TwistedResult res = twisted_hull_candidate(tower, spec);
                        const long d = min_distance(res.code, budget);
                        return records_for_code(res.code, tower->q(), "twisted",
                                                twist_spec_json(spec, tower->q(), spec.n), d,
                                                res.hull.hull_dim);
                    });
                } else if (family == "generic") {
                    tasks.push_back([tower, nn, kk, n, k]() {
                        LinearCode code = generic_grs_code(tower, nn, kk);
                        nlohmann::ordered_json spec;
                        spec["family"] = "generic";
                        spec["q"] = tower->q();
                        spec["n"] = nn;
                        spec["k"] = kk;
                        spec["extended"] = (nn == static_cast<std::size_t>(tower->q2()) + 1);
                        return records_for_code(code, tower->q(), "generic", spec, n - k + 1,
                                                hermitian_hull_dim(code));
                    });
                } else {
                    std::cerr << "enumerate: unknown family '" << family << "'\n";
                    return 2;
                }
            }
        if (tasks.empty()) {
            std::cerr << "enumerate: no valid instances in range\n";
            return 2;
        }
    }

    try {
        auto slots = run_tasks(tasks, workers);
        std::vector<DiscoveryRecord> all;
        for (auto& s : slots) all.insert(all.end(), s.begin(), s.end());
        write_records(std::move(all), out, format);
    } catch (const BudgetExceeded& e) {
        std::cerr << "enumerate: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "enumerate: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

int cmd_verify(std::uint32_t q, const std::string& theorem, std::uint64_t budget) {
    std::uint32_t p = 0, m = 0;
    if (!prime_power(q, p, m)) {
        std::cerr << "verify: q must be a prime power\n";
        return 2;
    }
    TowerPtr tower = FieldTower::build(p, m);
    VerifySummary sum;
    if (theorem == "3.1") {
        if (q < 3) {
            std::cerr << "verify: theorem 3.1 needs q >= 3\n";
            return 2;
        }
        sum = verify_thm31(tower, 2, std::min<std::size_t>(tower->q2() + 1, 12), budget);
    } else if (theorem == "3.2") {
        sum = verify_thm32(tower);
    } else if (theorem == "3.3") {
        sum = verify_thm33_cor31(tower, 40, false);
    } else if (theorem == "4.1") {
        sum = verify_thm41(tower);
    } else if (theorem == "prop3.1") {
        if (q < 3) {
            std::cerr << "verify: proposition 3.1 needs q >= 3\n";
            return 2;
        }
        sum = verify_prop31(tower, budget);
    } else if (theorem == "prop4.1") {
        sum = verify_prop41(tower);
    } else if (theorem == "prop4.2") {
        sum = verify_prop42(tower, 16, budget);
    } else if (theorem == "cor3.1") {
        sum = verify_thm33_cor31(tower, 40, true);
    } else if (theorem == "cor3.2" || theorem == "cor3.3" || theorem == "cor3.4") {
        sum = verify_corollary_counts(tower);
    } else if (theorem == "schur") {
        sum = verify_schur(tower);
    } else if (theorem == "mds") {
        sum = verify_family_mds(tower, budget);
    } else {
        std::cerr << "verify: unknown theorem id '" << theorem << "'\n";
        return 2;
    }
    for (const auto& line : sum.lines)
        std::cout << (line.pass ? "PASS " : "FAIL ") << line.text << '\n';
    std::cout << sum.lines.size() << " instances, " << sum.failures() << " findings\n";
    return sum.failures() ? 1 : 0;
}

int cmd_mindist(const std::string& path, std::uint64_t budget) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "mindist: cannot open " << path << '\n';
        return 2;
    }
    try {
        LinearCode code = LinearCode::from_text(in);
        const long d = min_distance(code, budget);
        const bool mds = d == static_cast<long>(code.n() - code.k() + 1);
        std::cout << code.n() << ' ' << code.k() << ' ' << d << ' ' << (mds ? "MDS" : "NOT-MDS")
                  << '\n';
        return 0;
    } catch (const BudgetExceeded& e) {
        std::cerr << "mindist: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "mindist: " << e.what() << '\n';
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hermitian-hull code constructions and EAQEC parameter sweeps"};
    app.require_subcommand(1);

    std::uint32_t q = 0;
    std::string family, n_s, k_s, d_s, format = "jsonl", out, theorem, path;
    long t_opt = 0, eta_opt = -1;
    std::uint64_t budget = budget_from_env(kDefaultBudget);
    unsigned workers = 1;

    auto* en = app.add_subcommand("enumerate", "emit discovery records for sweeps or families");
    en->add_option("--q", q, "subfield size q (prime power >= 3)")->required();
    en->add_option("--family", family, "subgroup|coset|punctured|twisted|generic");
    en->add_option("--n", n_s, "length (value or a:b range)");
    en->add_option("--k", k_s, "classical dimension (family mode)");
    en->add_option("--d", d_s, "distance (range mode)");
    en->add_option("--t", t_opt, "punctured position count");
    en->add_option("--eta", eta_opt, "twist element encoding (twisted family)");
    en->add_option("--budget", budget, "work budget for exhaustive checks");
    en->add_option("--format", format, "jsonl|csv")->check(CLI::IsMember({"jsonl", "csv"}));
    en->add_option("--out", out, "output path (default stdout)");
    en->add_option("--workers", workers, "worker thread count");

    auto* ve = app.add_subcommand("verify", "oracle-check the claimed bounds");
    ve->add_option("--q", q, "subfield size q (prime power)")->required();
    ve->add_option("--theorem", theorem,
                   "3.1|3.2|3.3|4.1|prop3.1|prop4.1|prop4.2|cor3.1|cor3.2|cor3.3|cor3.4|schur|mds")
        ->required();
    ve->add_option("--budget", budget, "work budget for exhaustive checks");

    auto* md = app.add_subcommand("mindist", "exact minimum distance of a code file");
    md->add_option("path", path, "serialized code file")->required();
    md->add_option("--budget", budget, "enumeration budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (en->parsed())
            return cmd_enumerate(q, family, n_s, k_s, d_s, t_opt, eta_opt, budget, format, out,
                                 workers);
        if (ve->parsed()) return cmd_verify(q, theorem, budget);
        if (md->parsed()) return cmd_mindist(path, budget);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
