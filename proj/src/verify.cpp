#include "jscheme/verify.hpp"

#include <algorithm>
#include <cmath>

#include "jscheme/checked.hpp"

namespace jscheme {

namespace {

// True if m is constant on every color class of x; fills vals[F] on success.
// On failure reports, for the failing class with the lexicographically least
// first-occurrence cell, that cell together with the first cell that differs.
bool constant_on_classes(const Rainbow& x, const CountMatrix& m, std::vector<long long>& vals,
                         ConstancyWitness* wit) {
    const int n = x.order();
    const int r = x.rank();
    vals.assign(r, 0);
    std::vector<char> seen(r, 0);
    std::vector<std::pair<int, int>> first(r, {-1, -1});
    std::vector<std::pair<int, int>> diff(r, {-1, -1});
    std::vector<long long> diffval(r, 0);
    bool ok = true;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Color f = x.color(a, b);
            long long v = m.at(a, b);
            if (!seen[f]) {
                seen[f] = 1;
                vals[f] = v;
                first[f] = {a, b};
            } else if (v != vals[f] && diff[f].first == -1) {
                diff[f] = {a, b};
                diffval[f] = v;
                ok = false;
            }
        }
    if (!ok && wit) {
        Color best = -1;
        for (int f = 0; f < r; ++f) {
            if (diff[f].first == -1) continue;
            if (best == -1 || first[f] < first[best]) best = f;
        }
        wit->F = best;
        wit->a1 = first[best].first;
        wit->b1 = first[best].second;
        wit->a2 = diff[best].first;
        wit->b2 = diff[best].second;
        wit->v1 = vals[best];
        wit->v2 = diffval[best];
    }
    return ok;
}

long long isqrt_ll(long long v) {
    if (v < 0) return -1;
    long long s = (long long)std::sqrt((double)v);
    while (s > 0 && s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s;
}

}  // namespace

CoherenceResult is_coherent_configuration(const Rainbow& x) {
    const int r = x.rank();
    CoherenceResult res;
    IntersectionTensor t;
    t.rank = r;
    t.kind = TensorKind::CC;
    t.values.assign(size_t(r) * r * r, 0);

    auto basis = x.standard_basis();
    std::vector<long long> vals;
    for (int c = 0; c < r; ++c)
        for (int d = 0; d < r; ++d) {
            CountMatrix prod = compose(basis[c], basis[d]);
            ConstancyWitness wit;
            if (!constant_on_classes(x, prod, vals, &wit)) {
                wit.C = c;
                wit.D = d;
                res.ok = false;
                res.witness = wit;
                return res;
            }
            for (int f = 0; f < r; ++f) t.at(f, c, d) = vals[f];
        }
    res.ok = true;
    res.tensor = std::move(t);
    return res;
}

CoherenceResult is_jordan_configuration(const Rainbow& x) {
    const int r = x.rank();
    CoherenceResult res;
    IntersectionTensor t;
    t.rank = r;
    t.kind = TensorKind::Jordan;
    t.values.assign(size_t(r) * r * r, 0);

    auto basis = x.standard_basis();
    std::vector<long long> vals;
    for (int c = 0; c < r; ++c)
        for (int d = c; d < r; ++d) {
            CountMatrix prod = compose(basis[c], basis[d]).plus(compose(basis[d], basis[c]));
            ConstancyWitness wit;
            if (!constant_on_classes(x, prod, vals, &wit)) {
                wit.C = c;
                wit.D = d;
                res.ok = false;
                res.witness = wit;
                return res;
            }
            for (int f = 0; f < r; ++f) {
                t.at(f, c, d) = vals[f];
                t.at(f, d, c) = vals[f];
            }
        }
    res.ok = true;
    res.tensor = std::move(t);
    return res;
}

std::optional<SrgParams> srg_check(const Relation& r) {
    if (!r.is_symmetric()) throw NotSymmetric("srg_check needs a symmetric relation");
    if (!r.is_irreflexive()) throw NotIrreflexive("srg_check needs an irreflexive relation");
    const int n = r.order();
    auto deg = r.out_degrees();
    long long k = deg[0];
    for (long long d : deg)
        if (d != k) return std::nullopt;
    if (k == 0 || k == n - 1) return std::nullopt;  // empty / complete: degenerate

    CountMatrix sq = compose(r, r);
    long long lambda = -1, mu = -1;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            long long common = sq.at(a, b);
            if (r.get(a, b)) {
                if (lambda == -1)
                    lambda = common;
                else if (lambda != common)
                    return std::nullopt;
            } else {
                if (mu == -1)
                    mu = common;
                else if (mu != common)
                    return std::nullopt;
            }
        }
    return SrgParams{n, k, lambda, mu};
}

int HoffmanBound::compare_coclique(long long size) const {
    const long long v = params.v, k = params.k;
    const long long delta = params.lambda - params.mu;
    if (size > v) return 1;
    // size <= bound  <=>  2*size*k + (v-size)*delta <= (v-size)*sqrt(disc)
    __int128 lhs = checked_add128(checked_mul128(2, checked_mul128(size, k)),
                                  checked_mul128(v - size, delta));
    __int128 rest = v - size;
    __int128 rhs_sq = checked_mul128(checked_mul128(rest, rest), disc);
    if (lhs < 0) return -1;
    __int128 lhs_sq = checked_mul128(lhs, lhs);
    if (lhs_sq < rhs_sq) return -1;
    if (lhs_sq == rhs_sq) return 0;
    return 1;
}

HoffmanBound hoffman_coclique_bound(const SrgParams& p) {
    if (p.v < 2 || p.k < 0 || p.lambda < 0 || p.mu < 0)
        throw InfeasibleParams("parameters out of range");
    if (p.k == 0 || p.k == p.v - 1) throw InfeasibleParams("complete or empty graph");
    if (p.mu > p.k || p.lambda > p.k - 1) throw InfeasibleParams("counting bounds violated");
    if (checked_mul(p.k, p.k - p.lambda - 1) != checked_mul(p.v - p.k - 1, p.mu))
        throw InfeasibleParams("k(k-lambda-1) = (v-k-1)mu fails");

    HoffmanBound hb;
    hb.params = p;
    long long delta = p.lambda - p.mu;
    hb.disc = checked_add(checked_mul(delta, delta), 4 * (p.k - p.mu));
    long long s = isqrt_ll(hb.disc);
    hb.integral = (s >= 0 && s * s == hb.disc);
    if (s <= delta) throw InfeasibleParams("least eigenvalue is not negative");
    if (hb.integral) {
        long long num = checked_mul(p.v, s - delta);
        long long den = 2 * p.k - delta + s;
        long long g = gcd_ll(num, den);
        hb.value = Rational{num / g, den / g};
    }
    return hb;
}

bool check_fusion_p3(const Rainbow& x) {
    if (x.rank() != 5) throw WrongRank("fusion test needs rank 5");
    if (!x.is_symmetric()) throw NotSymmetric("fusion test needs a symmetric rainbow");
    if (!x.is_homogeneous()) throw NotHomogeneous("fusion test needs a homogeneous rainbow");
    if (!x.color_on_diagonal(0)) throw LabelMismatch("color 0 must be the diagonal class");

    const int n = x.order();
    for (int i = 2; i <= 4; ++i) {
        std::vector<int32_t> fused(size_t(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Color c = x.color(a, b);
                int32_t label = (c == 0) ? 0 : (c == 1) ? 1 : (c == i) ? 2 : 3;
                fused[size_t(a) * n + b] = label;
            }
        if (!is_coherent_configuration(Rainbow::labeled(n, std::move(fused))).ok) return false;
    }
    if (!is_jordan_configuration(x).ok)
        throw InternalError("fusions are coherent but the Jordan condition fails");
    return true;
}

namespace {
int mod(int a, int m) { return ((a % m) + m) % m; }
}  // namespace

bool check_base_table(const Rainbow& x, int m, int n) {
    if (m < 2) throw LabelMismatch("base scheme needs m >= 2");
    if ((n - 1) % m != 0) throw DivisibilityError("m must divide n-1");
    if (x.rank() != 2 * m) throw LabelMismatch("base scheme must have rank 2m");
    if (x.order() != m * (n + 1)) throw LabelMismatch("base scheme must have order m(n+1)");
    if (x.relation(0) != Relation::identity(x.order()))
        throw LabelMismatch("color 0 must be the identity relation");

    auto basis = x.standard_basis();
    auto C = [&](int i) -> const Relation& { return basis[mod(i, m)]; };
    auto S = [&](int i) -> const Relation& { return basis[m + mod(i, m)]; };

    for (int i = 0; i < m; ++i) {
        for (long long d : C(i).out_degrees())
            if (d != 1) return false;
        for (long long d : S(i).out_degrees())
            if (d != n) return false;
    }

    CountMatrix sum_s(x.order());
    for (int k = 0; k < m; ++k) sum_s = sum_s.plus(CountMatrix::from_relation(S(k)));
    const long long coeff = (n - 1) / m;

    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (compose(C(i), C(j)) != CountMatrix::from_relation(C(i + j))) return false;
            if (compose(C(i), S(j)) != CountMatrix::from_relation(S(i + j))) return false;
            if (compose(S(j), C(i)) != CountMatrix::from_relation(S(j - i))) return false;
            CountMatrix expect =
                CountMatrix::from_relation(C(i - j)).scaled(n).plus(sum_s.scaled(coeff));
            if (compose(S(i), S(j)) != expect) return false;
        }
    return true;
}

bool check_switched_table(const Rainbow& x, int m, int n) {
    if (m < 2) throw LabelMismatch("switched scheme needs m >= 2");
    if ((n - 1) % m != 0) throw DivisibilityError("m must divide n-1");
    const int h = m / 2;
    if (x.rank() != m + h + 1) throw LabelMismatch("switched scheme must have rank m + floor(m/2) + 1");
    if (x.order() != m * (n + 1)) throw LabelMismatch("switched scheme must have order m(n+1)");
    if (x.relation(0) != Relation::identity(x.order()))
        throw LabelMismatch("color 0 must be the identity relation");

    auto basis = x.standard_basis();
    // D-tilde_i = C_i + C_{-i} as a matrix: doubles D_0 and (even m) D_{m/2}.
    auto D = [&](int i) {
        int k = mod(i, m);
        int idx = std::min(k, m - k);
        CountMatrix out = CountMatrix::from_relation(basis[idx]);
        if (k == 0 || 2 * k == m) out = out.scaled(2);
        return out;
    };
    auto T = [&](int i) { return CountMatrix::from_relation(basis[h + 1 + mod(i, m)]); };

    CountMatrix e_matrix(x.order());
    for (int i = 0; i <= h; ++i) e_matrix = e_matrix.plus(CountMatrix::from_relation(basis[i]));
    CountMatrix j_minus_e = CountMatrix::ones(x.order()).minus(e_matrix);
    const long long coeff = (n - 1) / m;

    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (star_doubled(D(i), D(j)) != D(i + j).plus(D(i - j)).scaled(2)) return false;
            if (star_doubled(D(i), T(j)) != T(j + i).plus(T(j - i)).scaled(2)) return false;
            CountMatrix expect = D(i - j).scaled(n).plus(j_minus_e.scaled(2 * coeff));
            if (star_doubled(T(i), T(j)) != expect) return false;
        }
    return true;
}

// ------------------------------------------------- span closure over Q

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Integer-preserving Gaussian elimination: rows are kept over Z, reduced by
// cross-multiplication and renormalized by their gcd, so the rank is the
// exact rank over the rationals.
class FractionFreeEliminator {
public:
    explicit FractionFreeEliminator(size_t cols) : cols_(cols) {}

    bool add(const std::vector<long long>& row) {
        std::vector<__int128> v(row.begin(), row.end());
        for (size_t k = 0; k < rows_.size(); ++k) {
            size_t p = pivot_[k];
            if (v[p] == 0) continue;
            __int128 a = rows_[k][p], b = v[p];
            for (size_t i = 0; i < cols_; ++i)
                v[i] = checked_sub128(checked_mul128(v[i], a), checked_mul128(rows_[k][i], b));
            normalize(v);
        }
        size_t p = 0;
        while (p < cols_ && v[p] == 0) ++p;
        if (p == cols_) return false;
        rows_.push_back(std::move(v));
        pivot_.push_back(p);
        return true;
    }

    int rank() const { return int(rows_.size()); }

private:
    static void normalize(std::vector<__int128>& v) {
        __int128 g = 0;
        for (__int128 x : v) {
            g = gcd128(g, x);
            if (g == 1) break;
        }
        if (g > 1)
            for (__int128& x : v) x /= g;
    }

    size_t cols_;
    std::vector<std::vector<__int128>> rows_;
    std::vector<size_t> pivot_;
};

}  // namespace

int generated_assoc_dimension(const std::vector<CountMatrix>& basis) {
    if (basis.empty()) throw Error("generated_assoc_dimension: empty basis");
    const int n = basis[0].order();
    for (const auto& m : basis)
        if (m.order() != n) throw OrderMismatch("basis orders differ");

    FractionFreeEliminator elim(size_t(n) * n);
    std::vector<CountMatrix> gens;
    for (const auto& m : basis)
        if (elim.add(m.cells())) gens.push_back(m);

    size_t frontier = 0;  // gens below this index already have mutual products adjoined
    for (;;) {
        int before = elim.rank();
        size_t sz = gens.size();
        std::vector<CountMatrix> fresh;
        for (size_t i = 0; i < sz; ++i)
            for (size_t j = 0; j < sz; ++j) {
                if (i < frontier && j < frontier) continue;
                CountMatrix p = matmul(gens[i], gens[j]);
                if (elim.add(p.cells())) fresh.push_back(std::move(p));
            }
        frontier = sz;
        if (elim.rank() == before) return before;
        for (auto& f : fresh) gens.push_back(std::move(f));
    }
}

namespace {
void require_symmetric_equal_order(const std::vector<CountMatrix>& basis, const char* what) {
    if (basis.empty()) return;
    const int n = basis[0].order();
    for (const auto& m : basis) {
        if (m.order() != n) throw OrderMismatch(what);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (m.at(a, b) != m.at(b, a)) throw NotSymmetric(what);
    }
}
}  // namespace

bool pairwise_commute(const std::vector<CountMatrix>& basis) {
    require_symmetric_equal_order(basis, "pairwise_commute needs symmetric matrices of one order");
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            if (matmul(basis[i], basis[j]) != matmul(basis[j], basis[i])) return false;
    return true;
}

bool jordan_associative(const std::vector<CountMatrix>& basis) {
    require_symmetric_equal_order(basis, "jordan_associative needs symmetric matrices of one order");
    const size_t r = basis.size();
    std::vector<std::vector<CountMatrix>> sd(r);
    for (size_t i = 0; i < r; ++i) {
        sd[i].reserve(r);
        for (size_t j = 0; j < r; ++j) sd[i].push_back(star_doubled(basis[i], basis[j]));
    }
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j)
            for (size_t k = 0; k < r; ++k)
                if (star_doubled(sd[i][j], basis[k]) != star_doubled(basis[i], sd[j][k]))
                    return false;
    return true;
}

std::optional<std::pair<std::vector<Point>, std::vector<Point>>> nonregular_bipartition(
    const Rainbow& x) {
    if (!x.is_homogeneous()) throw NotHomogeneous("bipartition needs a single fiber");
    if (!is_jordan_configuration(x).ok) throw NotJordan("bipartition needs a Jordan configuration");

    const int n = x.order();
    const int r = x.rank();
    std::vector<std::vector<long long>> deg(r, std::vector<long long>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) ++deg[x.color(a, b)][a];

    auto varies = [&](int c) {
        for (int a = 1; a < n; ++a)
            if (deg[c][a] != deg[c][0]) return true;
        return false;
    };

    int first_nonregular = -1;
    for (int c = 0; c < r && first_nonregular == -1; ++c)
        if (varies(c)) first_nonregular = c;
    if (first_nonregular == -1) return std::nullopt;

    auto halves_for = [&](int c) {
        long long kmax = *std::max_element(deg[c].begin(), deg[c].end());
        long long kmin = *std::min_element(deg[c].begin(), deg[c].end());
        std::vector<Point> hi, lo;
        for (int a = 0; a < n; ++a) {
            if (deg[c][a] == kmax)
                hi.push_back(a);
            else if (deg[c][a] == kmin)
                lo.push_back(a);
        }
        return std::make_pair(hi, lo);
    };

    auto [omega0, omega1] = halves_for(first_nonregular);
    if (omega0.size() != omega1.size() || omega0.size() + omega1.size() != size_t(n))
        throw InternalError("bipartition halves are not an equal split");

    std::vector<char> in0(n, 0);
    for (Point p : omega0) in0[p] = 1;

    // every non-regular color must cross the bipartition one way, with a
    // constant valency from its source side
    for (int c = 0; c < r; ++c) {
        if (!varies(c)) continue;
        int side = -1;  // 0: omega0 -> omega1, 1: omega1 -> omega0
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (x.color(a, b) != c) continue;
                if (in0[a] == in0[b]) throw InternalError("non-regular color not crossing the bipartition");
                int s = in0[a] ? 0 : 1;
                if (side == -1)
                    side = s;
                else if (side != s)
                    throw InternalError("non-regular color crosses in both directions");
            }
        long long kconst = -1;
        for (int a = 0; a < n; ++a) {
            bool source = (side == 0) ? bool(in0[a]) : !in0[a];
            if (!source) {
                if (deg[c][a] != 0) throw InternalError("non-regular color leaves its source side");
                continue;
            }
            if (kconst == -1)
                kconst = deg[c][a];
            else if (deg[c][a] != kconst)
                throw InternalError("non-regular color valency varies on its source side");
        }
        // the bipartition must not depend on the witnessing color
        auto [h0, h1] = halves_for(c);
        if (!((h0 == omega0 && h1 == omega1) || (h0 == omega1 && h1 == omega0)))
            throw InternalError("bipartition depends on the choice of color");
    }
    return std::make_pair(omega0, omega1);
}

}  // namespace jscheme
