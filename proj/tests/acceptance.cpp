// Acceptance suite: one check per shipped guarantee, each printed as a
// pass/fail line with its elapsed time and enforced time budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "jscheme/closure.hpp"
#include "jscheme/construct.hpp"
#include "jscheme/verify.hpp"

using namespace jscheme;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << (detail.str().empty() ? "" : "; ") << what;
        }
    }
};

// symmetric bases collected while running, fed to the appendix criterion
std::vector<std::vector<CountMatrix>> collected_bases;

void collect(const Rainbow& x) {
    if (x.is_symmetric()) collected_bases.push_back(x.standard_basis_counts());
}

WfdfSpec cyclic_spec(int d) {
    return WfdfSpec::make(d, WfdfSpec::DiamondKind::Cyclic, WfdfSpec::SigmaKind::Identity,
                          WfdfSpec::ThetaKind::Plus, 0);
}

Rainbow four_point() {
    return Rainbow::from_colors({{0, 1, 2, 2}, {1, 0, 2, 2}, {3, 3, 0, 1}, {3, 3, 1, 0}});
}

// ---- criterion bodies -----------------------------------------------------

void criterion_paper_example(Check& c) {
    Rainbow x = four_point();
    c.require(is_jordan_configuration(x).ok, "Jordan condition");
    auto rep = x.structure_report();
    c.require(rep.homogeneous, "homogeneous");
    c.require(!rep.regular, "non-regular");
    c.require(!is_coherent_configuration(x).ok, "must not be coherent");
    auto halves = nonregular_bipartition(x);
    c.require(halves.has_value(), "bipartition exists");
    if (halves) {
        c.require(halves->first.size() == 2 && halves->second.size() == 2, "equal halves");
        c.require(halves->first == std::vector<Point>{0, 1}, "max-valency half first");
    }
}

void criterion_wfdf_d2(Check& c) {
    Rainbow x = build_wfdf(cyclic_spec(2));
    collect(x);
    c.require(x.order() == 45, "order 45");
    c.require(x.rank() == 5, "rank 5");
    auto rep = x.structure_report();
    std::vector<long long> val;
    for (auto& v : rep.valencies) val.push_back(v ? *v : -1);
    c.require(val == std::vector<long long>{1, 8, 12, 12, 12}, "valencies (1,8,12,12,12)");
    auto hb = hoffman_coclique_bound(SrgParams{45, 12, 3, 3});
    c.require(hb.integral && hb.value == Rational{9, 1}, "Hoffman bound 9");
    for (int a = 2; a <= 4; ++a) {
        auto params = srg_check(x.relation(a));
        c.require(params && *params == SrgParams{45, 12, 3, 3}, "R srg(45,12,3,3)");
        // the five 9-point blocks are cocliques meeting the bound
        Relation r = x.relation(a);
        bool coclique = true;
        for (int blk = 0; blk < 5; ++blk)
            for (int u = 0; u < 9; ++u)
                for (int v = 0; v < 9; ++v)
                    if (r.get(blk * 9 + u, blk * 9 + v)) coclique = false;
        c.require(coclique, "blocks are cocliques");
        c.require(hb.compare_coclique(9) == 0, "coclique size meets the bound");
    }
    c.require(is_jordan_configuration(x).ok, "Jordan condition");
    c.require(check_fusion_p3(x), "fusion sufficiency");
}

void criterion_wfdf_properness(Check& c) {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        Rainbow x = build_wfdf(WfdfSpec::make(2, WfdfSpec::DiamondKind::Random,
                                              WfdfSpec::SigmaKind::Random,
                                              WfdfSpec::ThetaKind::Random, seed));
        collect(x);
        if (!is_proper(x).proper) {
            c.require(false, "seed " + std::to_string(seed) + " not proper");
            return;
        }
    }
    c.detail << "20 sampled parameter records, all proper";
}

void criterion_switching(Check& c) {
    for (int q : {4, 16}) {
        const int m = 3;
        Rainbow base = build_cyclotomic_base(q, m);
        collect(base.symmetrized());
        c.require(check_base_table(base, m, q), "base table q=" + std::to_string(q));
        Rainbow sw = build_switched(base, m, q, 0);
        collect(sw);
        c.require(sw.order() == m * (q + 1), "switched order");
        c.require(sw.rank() == 5, "switched rank 5");
        auto jc = is_jordan_configuration(sw);
        c.require(jc.ok, "switched Jordan condition");
        c.require(check_switched_table(sw, m, q), "switched table");
        if (q == 4 && jc.ok) {
            // doubled tensor entry: 2 p^{D1}_{T0,T1} = 4 (colors D1=1, T0=2, T1=3)
            c.require(jc.tensor->at(1, 2, 3) == 4, "2 p^{D1}_{T0,T1} = 4");
        }
        c.require(is_proper(sw).proper, "switched proper");
    }
}

void criterion_properness_mechanism(Check& c) {
    Rainbow base = build_cyclotomic_base(4, 3);
    Rainbow j15 = build_switched(base, 3, 4, 0);
    Rainbow symwl = wl_closure(j15).result.symmetrized();
    c.require(symwl.rank() > 5, "symmetrized closure rank exceeds 5");
    // some closure color strictly inside a D-class (ids 0..1 for m=3)
    bool witness = false;
    std::vector<long long> seen_host;
    for (Color sc = 0; sc < symwl.rank() && !witness; ++sc) {
        for (int i = 0; i < j15.order() * j15.order(); ++i)
            if (symwl.color_matrix()[i] == sc) {
                Color host = j15.color_matrix()[i];
                if (host <= 1 && symwl.color_size(sc) < j15.color_size(host)) witness = true;
                break;
            }
    }
    c.require(witness, "a D-class splits in the symmetrized closure");
}

void criterion_rank_bound(Check& c) {
    long long rainbows = 0, jordan = 0;
    // enumerate colorings of the unordered pairs with at most three colors,
    // ids introduced in first-occurrence order (each partition hit once)
    for (int n = 2; n <= 6; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});
        const int np = int(pairs.size());
        std::vector<int> assign(np, 0);
        std::vector<int32_t> colors(size_t(n) * n, 0);
        std::function<void(int, int)> rec = [&](int idx, int used) {
            if (idx == np) {
                ++rainbows;
                for (int p = 0; p < np; ++p) {
                    auto [a, b] = pairs[p];
                    colors[size_t(a) * n + b] = int32_t(1 + assign[p]);
                    colors[size_t(b) * n + a] = int32_t(1 + assign[p]);
                }
                Rainbow x = Rainbow::labeled(n, colors);
                if (is_jordan_configuration(x).ok) {
                    ++jordan;
                    collect(x);
                    if (!is_coherent_configuration(x).ok)
                        c.require(false, "Jordan but not coherent at order " + std::to_string(n));
                }
                return;
            }
            int cap = std::min(used + 1, 3);
            for (int col = 0; col < cap; ++col) {
                assign[idx] = col;
                rec(idx + 1, std::max(used, col + 1));
            }
        };
        rec(0, 0);
        if (!c.ok) return;
    }
    c.detail << rainbows << " rainbows enumerated, " << jordan
             << " Jordan configurations, all coherent";
}

void criterion_algebra_dimension(Check& c) {
    Rainbow base = build_cyclotomic_base(4, 3);
    Rainbow j15 = build_switched(base, 3, 4, 0);
    c.require(generated_assoc_dimension(j15.standard_basis_counts()) == 6, "dim 6 (switched)");
    Rainbow w = build_wfdf(cyclic_spec(2));
    c.require(generated_assoc_dimension(w.standard_basis_counts()) == 6, "dim 6 (matching)");
    for (int k : {3, 5, 7}) {
        Rainbow x = thin_cyclic_scheme(k);
        c.require(generated_assoc_dimension(x.standard_basis_counts()) == x.rank(),
                  "commutative rank " + std::to_string(k));
        Rainbow s = x.symmetrized();
        c.require(generated_assoc_dimension(s.standard_basis_counts()) == s.rank(),
                  "commutative symmetrized rank");
    }
}

void criterion_closure_cross_validation(Check& c) {
    SeededRng rng(2024);
    int ran = 0;
    auto one = [&](int n, bool symmetric) {
        CountMatrix m(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) m.at(a, b) = (long long)rng.below(3);
        if (symmetric)
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) m.at(b, a) = m.at(a, b);
        Rainbow seed = seed_from_matrices(n, {m});
        ClosureReport wl = wl_closure(seed);
        ClosureReport jo = jordan_closure(seed);
        if (!(subspace_closure_oracle(seed, ClosureKind::WL) == wl.result))
            c.require(false, "WL oracle disagrees");
        if (!(subspace_closure_oracle(seed, ClosureKind::Jordan) == jo.result))
            c.require(false, "Jordan oracle disagrees");
        if (jo.result.rank() > wl.result.rank()) c.require(false, "rank inequality");
        if (symmetric && !wl.result.symmetrized().refines(jo.result))
            c.require(false, "Jordan result is not a fusion of the symmetrized WL result");
        ++ran;
    };
    for (int i = 0; i < 100 && c.ok; ++i) one(2 + int(rng.below(11)), true);
    for (int i = 0; i < 30 && c.ok; ++i) one(2 + int(rng.below(11)), false);
    c.detail << ran << " seeds cross-validated";
}

void criterion_appendix_property(Check& c) {
    int associative = 0;
    for (const auto& basis : collected_bases)
        if (jordan_associative(basis)) {
            ++associative;
            if (!pairwise_commute(basis)) {
                c.require(false, "associative basis with non-commuting matrices");
                return;
            }
        }
    c.detail << collected_bases.size() << " bases, " << associative
             << " associative, no counterexample";
}

void criterion_degenerate_d1(Check& c) {
    Rainbow x = build_wfdf(cyclic_spec(1));
    c.require(x.order() == 6, "order 6");
    c.require(x.rank() == 5, "rank 5");
    c.require(!is_proper(x).proper, "improper");

    // thin scheme of S_3, symmetrized, compared through a valency-preserving
    // color bijection
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto find = [&](const int img[3]) {
        for (int i = 0; i < 6; ++i)
            if (img[0] == perms[i][0] && img[1] == perms[i][1] && img[2] == perms[i][2]) return i;
        return -1;
    };
    std::vector<std::vector<long long>> colors(6, std::vector<long long>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int inv[3], prod[3];
            for (int t = 0; t < 3; ++t) inv[perms[a][t]] = t;
            for (int t = 0; t < 3; ++t) prod[t] = perms[b][inv[t]];
            colors[a][b] = find(prod);
        }
    Rainbow s3sym = Rainbow::from_colors(colors).symmetrized();
    auto want = is_jordan_configuration(s3sym);
    auto got = is_jordan_configuration(x);
    c.require(want.ok && got.ok, "both are Jordan configurations");
    if (!c.ok) return;

    // match colors by (diagonal, valency): diagonal and the valency-2 color
    // are forced, the three valency-1 colors may permute
    auto valency = [&](const Rainbow& r, Color col) {
        return r.relation(col).out_degrees()[0];
    };
    std::vector<int> ones_x, ones_s;
    int two_x = -1, two_s = -1;
    for (int col = 1; col < 5; ++col) {
        if (valency(x, col) == 2)
            two_x = col;
        else
            ones_x.push_back(col);
        if (valency(s3sym, col) == 2)
            two_s = col;
        else
            ones_s.push_back(col);
    }
    c.require(two_x != -1 && two_s != -1 && ones_x.size() == 3, "valency profile (1,1,1,2)");
    if (!c.ok) return;

    bool matched = false;
    std::vector<int> perm = {0, 1, 2};
    std::sort(perm.begin(), perm.end());
    do {
        std::vector<int> map(5);
        map[0] = 0;
        map[two_x] = two_s;
        for (int t = 0; t < 3; ++t) map[ones_x[t]] = ones_s[perm[t]];
        bool equal = true;
        for (int f = 0; f < 5 && equal; ++f)
            for (int a = 0; a < 5 && equal; ++a)
                for (int b = 0; b < 5; ++b)
                    if (got.tensor->at(f, a, b) != want.tensor->at(map[f], map[a], map[b])) {
                        equal = false;
                        break;
                    }
        if (equal) matched = true;
    } while (!matched && std::next_permutation(perm.begin(), perm.end()));
    c.require(matched, "Jordan tensor matches the symmetrized thin scheme of S_3");
}

struct Criterion {
    int number;
    const char* name;
    double budget_seconds;
    std::function<void(Check&)> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "order-4 homogeneous non-regular example", 0.5, criterion_paper_example},
        {2, "rank-5 matching construction at d=2", 10.0, criterion_wfdf_d2},
        {3, "properness of 20 sampled d=2 schemes", 300.0, criterion_wfdf_properness},
        {4, "switching family (orders 15 and 51)", 30.0, criterion_switching},
        {5, "properness mechanism: closure splits a D-class", 5.0, criterion_properness_mechanism},
        {6, "rank bound: exhaustive search up to order 6", 600.0, criterion_rank_bound},
        {7, "generated algebra dimension", 10.0, criterion_algebra_dimension},
        {8, "closure cross-validation against the oracle", 120.0, criterion_closure_cross_validation},
        {9, "associativity implies commutativity", 60.0, criterion_appendix_property},
        {10, "degenerate d=1 case", 1.0, criterion_degenerate_d1},
    };

    int failures = 0;
    for (const auto& crit : criteria) {
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            crit.body(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > crit.budget_seconds)
            check.require(false, "time budget exceeded");
        std::string detail = check.detail.str();
        std::printf("[%s] criterion %2d: %s (%.3f s)%s%s\n", check.ok ? "PASS" : "FAIL",
                    crit.number, crit.name, elapsed, detail.empty() ? "" : " -- ",
                    detail.c_str());
        failures += !check.ok;
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
