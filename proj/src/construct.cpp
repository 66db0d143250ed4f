#include "jscheme/construct.hpp"

#include <algorithm>
#include <numeric>

#include "jscheme/closure.hpp"
#include "jscheme/verify.hpp"

namespace jscheme {

uint64_t SeededRng::below(uint64_t bound) {
    if (bound == 0) throw SpecInvalid("empty sampling range");
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

// ----------------------------------------------------------------- Z3Space

Z3Space Z3Space::make(int d) {
    if (d < 1) throw SpecInvalid("dimension must be at least 1");
    Z3Space s;
    s.d_ = d;
    s.size_ = 1;
    for (int i = 0; i < d; ++i) s.size_ *= 3;

    auto digits = [d](int v) {
        std::vector<int> out(d);
        for (int i = d - 1; i >= 0; --i) {  // most significant coordinate first
            out[i] = v % 3;
            v /= 3;
        }
        return out;
    };

    for (int v = 1; v < s.size_; ++v) {
        auto dg = digits(v);
        int lead = 0;
        while (dg[lead] == 0) ++lead;
        if (dg[lead] == 1) s.normals_.push_back(v);
    }
    if (int(s.normals_.size()) != (s.size_ - 1) / 2)
        throw InternalError("hyperplane count mismatch");

    s.form_table_.assign(size_t(s.normals_.size()) * s.size_, 0);
    for (size_t i = 0; i < s.normals_.size(); ++i) {
        auto h = digits(s.normals_[i]);
        for (int v = 0; v < s.size_; ++v) {
            auto u = digits(v);
            int acc = 0;
            for (int c = 0; c < d; ++c) acc += h[c] * u[c];
            s.form_table_[i * s.size_ + v] = int8_t(acc % 3);
        }
    }
    return s;
}

// ------------------------------------------------------------ DiamondTable

DiamondTable DiamondTable::cyclic(int r) {
    DiamondTable t;
    t.size_ = r + 1;
    t.table_.resize(size_t(t.size_) * t.size_);
    for (int a = 0; a <= r; ++a)
        for (int b = 0; b <= r; ++b) t.table_[size_t(a) * t.size_ + b] = ((a - b) % t.size_ + t.size_) % t.size_;
    t.validate();
    return t;
}

DiamondTable DiamondTable::seeded_random(int r, uint64_t seed) {
    SeededRng rng(seed);
    DiamondTable t;
    t.size_ = r + 1;
    t.table_.resize(size_t(t.size_) * t.size_);
    for (int a = 0; a <= r; ++a) {
        // random bijection of [0,r] with a -> 0
        std::vector<int> targets;
        for (int v = 1; v <= r; ++v) targets.push_back(v);
        rng.shuffle(targets);
        int pos = 0;
        for (int b = 0; b <= r; ++b)
            t.table_[size_t(a) * t.size_ + b] = (b == a) ? 0 : targets[pos++];
    }
    t.validate();
    return t;
}

DiamondTable DiamondTable::from_rows(std::vector<std::vector<int>> rows) {
    DiamondTable t;
    t.size_ = int(rows.size());
    if (t.size_ == 0) throw SpecInvalid("empty diamond table");
    t.table_.reserve(size_t(t.size_) * t.size_);
    for (const auto& row : rows) {
        if (int(row.size()) != t.size_) throw SpecInvalid("diamond table is not square");
        t.table_.insert(t.table_.end(), row.begin(), row.end());
    }
    t.validate();
    return t;
}

void DiamondTable::validate() const {
    for (int a = 0; a < size_; ++a) {
        if (apply(a, a) != 0) throw SpecInvalid("diamond table needs a<>a = 0");
        std::vector<char> hit(size_, 0);
        for (int b = 0; b < size_; ++b) {
            int v = apply(a, b);
            if (v < 0 || v >= size_) throw SpecInvalid("diamond table entry out of range");
            if (hit[v]) throw SpecInvalid("diamond table row is not a bijection");
            hit[v] = 1;
        }
    }
}

// ---------------------------------------------------------------- WfdfSpec

Perm3 compose_perm(const Perm3& f, const Perm3& g) {
    return Perm3{f[g[0]], f[g[1]], f[g[2]]};
}

Perm3 invert_perm(const Perm3& p) {
    Perm3 inv{};
    for (uint8_t x = 0; x < 3; ++x) inv[p[x]] = x;
    return inv;
}

int WfdfSpec::pair_index(int i, int j, int r) {
    // pairs (i,j), 0 <= i < j <= r, in lexicographic order
    return i * (2 * r + 1 - i) / 2 + (j - i - 1);
}

WfdfSpec WfdfSpec::make(int d, DiamondKind dk, SigmaKind sk, ThetaKind tk, uint64_t seed) {
    if (d < 1) throw SpecInvalid("dimension must be at least 1");
    int size = 1;
    for (int i = 0; i < d; ++i) size *= 3;
    const int r = (size - 1) / 2;

    static const Perm3 kAllPerms[6] = {
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
    };

    SeededRng rng(seed);
    WfdfSpec spec;
    spec.d = d;
    spec.diamond = (dk == DiamondKind::Cyclic) ? DiamondTable::cyclic(r)
                                               : DiamondTable::seeded_random(r, rng.next());
    const int pairs = pair_count(r);
    spec.sigma.assign(pairs, kIdentityPerm);
    if (sk == SigmaKind::Random)
        for (auto& p : spec.sigma) p = kAllPerms[rng.below(6)];
    spec.theta_plus.assign(pairs, true);
    if (tk == ThetaKind::Random)
        for (int i = 0; i < pairs; ++i) spec.theta_plus[i] = rng.below(2) == 0;
    spec.validate();
    return spec;
}

void WfdfSpec::validate() const {
    if (d < 1) throw SpecInvalid("dimension must be at least 1");
    int size = 1;
    for (int i = 0; i < d; ++i) size *= 3;
    const int r = (size - 1) / 2;
    if (diamond.size() != r + 1) throw SpecInvalid("diamond table size must be (3^d-1)/2 + 1");
    diamond.validate();
    if (int(sigma.size()) != pair_count(r) || int(theta_plus.size()) != pair_count(r))
        throw SpecInvalid("sigma/theta arrays must have one entry per block pair");
    for (const auto& p : sigma) {
        bool hit[3] = {false, false, false};
        for (uint8_t x : p) {
            if (x > 2 || hit[x]) throw SpecInvalid("sigma entry is not a permutation of Z_3");
            hit[x] = true;
        }
    }
}

// -------------------------------------------------------------- build_wfdf

Rainbow build_wfdf(const WfdfSpec& spec) {
    spec.validate();
    const Z3Space space = Z3Space::make(spec.d);
    const int V = space.size();
    const int r = space.hyperplane_count();
    const int blocks = r + 1;
    const long long N = (long long)V * blocks;

    // permutation applied on the i-side of the ordered pair (i,j) for each of
    // the three matching colors a = 1..3
    std::vector<Perm3> perm(size_t(blocks) * blocks * 3);
    for (int i = 0; i < blocks; ++i)
        for (int j = 0; j < blocks; ++j) {
            if (i == j) continue;
            Perm3 base = spec.sigma[WfdfSpec::pair_index(std::min(i, j), std::max(i, j), r)];
            bool plus = spec.theta_plus[WfdfSpec::pair_index(std::min(i, j), std::max(i, j), r)];
            Perm3 theta = plus ? kThreeCyclePlus : kThreeCycleMinus;
            for (int a = 0; a < 3; ++a) {
                Perm3 p = base;
                for (int t = 0; t < a; ++t) p = compose_perm(theta, p);
                if (i > j) p = invert_perm(p);
                perm[(size_t(i) * blocks + j) * 3 + a] = p;
            }
        }

    // points sorted by (block index, lexicographic vector)
    std::vector<int32_t> colors(size_t(N) * N, -1);
    auto point = [V](int i, int u) { return i * V + u; };
    for (int i = 0; i < blocks; ++i)
        for (int u = 0; u < V; ++u) {
            int p = point(i, u);
            for (int j = 0; j < blocks; ++j)
                for (int v = 0; v < V; ++v) {
                    int q = point(j, v);
                    int32_t& cell = colors[size_t(p) * N + q];
                    if (i == j) {
                        cell = (u == v) ? 0 : 1;
                        continue;
                    }
                    // i<>j is never 0 for i != j, so it indexes a hyperplane
                    int x = space.form(spec.diamond.apply(i, j) - 1, u);
                    int y = space.form(spec.diamond.apply(j, i) - 1, v);
                    for (int a = 0; a < 3; ++a) {
                        const Perm3& pm = perm[(size_t(i) * blocks + j) * 3 + a];
                        if (pm[x] == y) {
                            if (cell != -1)
                                throw InternalError("matching colors overlap");
                            cell = int32_t(2 + a);
                        }
                    }
                    if (cell == -1) throw InternalError("matching colors do not cover the cell");
                }
        }

    Rainbow out = Rainbow::labeled(int(N), std::move(colors));
    if (out.rank() != 5) throw InternalError("construction must have rank 5");
    if (!is_jordan_configuration(out).ok)
        throw InternalError("construction output fails the Jordan condition");
    return out;
}

// ----------------------------------------------------------------- GFTable

GFTable GFTable::make(int k) {
    static const int kPoly[5] = {0, 0, 0b111, 0b1011, 0b10011};
    if (k < 2 || k > 4) throw SpecInvalid("field degree must be 2, 3 or 4");
    GFTable t;
    t.k_ = k;
    t.q_ = 1 << k;
    t.exp_.assign(t.q_ - 1, 0);
    t.log_.assign(t.q_, -1);
    int x = 1;
    for (int e = 0; e < t.q_ - 1; ++e) {
        if (t.log_[x] != -1) throw InternalError("generator does not have full order");
        t.exp_[e] = x;
        t.log_[x] = e;
        x <<= 1;  // multiply by the generator x
        if (x & t.q_) x ^= kPoly[k];
    }
    return t;
}

int GFTable::mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

// --------------------------------------------------- build_cyclotomic_base

Rainbow build_cyclotomic_base(int q, int m) {
    int k = 0;
    while ((1 << k) < q) ++k;
    if ((1 << k) != q || k < 2 || k > 4) throw SpecInvalid("q must be 4, 8 or 16");
    if (m < 2) throw SpecInvalid("m must be at least 2");
    if ((q - 1) % m != 0) throw DivisibilityError("m must divide q-1");

    const GFTable gf = GFTable::make(k);
    const int total = q * q;  // vector (a,b) encoded a*q + b
    const int csize = (q - 1) / m;

    // orbit of each nonzero vector under the index-m scalar subgroup
    std::vector<int> coset(total, -1);
    std::vector<int> reps;
    for (int e = 1; e < total; ++e) {
        if (coset[e] != -1) continue;
        int id = int(reps.size());
        reps.push_back(e);
        int a = e / q, b = e % q;
        for (int t = 0; t < csize; ++t) {
            int c = gf.exp(m * t);
            coset[gf.mul(a, c) * q + gf.mul(b, c)] = id;
        }
    }
    const int count = int(reps.size());
    if (count != m * (q + 1)) throw InternalError("coset count mismatch");

    std::vector<int32_t> colors(size_t(count) * count, -1);
    for (int X = 0; X < count; ++X) {
        int xa = reps[X] / q, xb = reps[X] % q;
        for (int Y = 0; Y < count; ++Y) {
            int ya = reps[Y] / q, yb = reps[Y] % q;
            int det = gf.mul(xa, yb) ^ gf.mul(xb, ya);  // char 2: minus = plus
            int32_t label;
            if (det == 0) {
                // dependent: y = lambda x; C_i holds pairs with lambda in g^{-i}C
                int lambda = (xa != 0) ? gf.exp(gf.log(ya) - gf.log(xa))
                                       : gf.exp(gf.log(yb) - gf.log(xb));
                label = int32_t(((-gf.log(lambda)) % m + m) % m);
            } else {
                label = int32_t(m + gf.log(det) % m);
            }
            colors[size_t(X) * count + Y] = label;
        }
    }

    Rainbow out = Rainbow::labeled(count, std::move(colors));
    if (!check_base_table(out, m, q))
        throw TableVerificationFailed("cyclotomic cover fails the base multiplication table");
    return out;
}

// ----------------------------------------------------------- build_switched

Rainbow build_switched(const Rainbow& base, int m, int n, int fiber_index) {
    try {
        if (!check_base_table(base, m, n)) throw BaseInvalid("base fails its multiplication table");
    } catch (const LabelMismatch& e) {
        throw BaseInvalid(e.what());
    } catch (const DivisibilityError& e) {
        throw BaseInvalid(e.what());
    }

    const int order = base.order();
    // fibers of E = C_0 u ... u C_{m-1}, listed by smallest point
    std::vector<int> fiber_of(order, -1);
    int fibers = 0;
    for (int a = 0; a < order; ++a) {
        if (fiber_of[a] != -1) continue;
        for (int b = 0; b < order; ++b)
            if (base.color(a, b) < m) fiber_of[b] = fibers;
        ++fibers;
    }
    if (fibers != n + 1) throw BaseInvalid("base does not have n+1 fibers");
    if (fiber_index < 0 || fiber_index > n) throw BadFiberIndex("fiber index out of range");

    const int h = m / 2;
    std::vector<int32_t> colors(size_t(order) * order);
    for (int a = 0; a < order; ++a) {
        const bool a_in = fiber_of[a] == fiber_index;
        for (int b = 0; b < order; ++b) {
            const bool b_in = fiber_of[b] == fiber_index;
            int c = base.color(a, b);
            int32_t label;
            if (c < m) {
                label = int32_t(std::min(c, m - c));  // D_i = C_i u C_{-i}
            } else {
                int i = c - m;
                // between the chosen fiber and the rest: keep S_i (black part);
                // within the rest: S_i contributes to T_{-i} (white part)
                int t = (a_in || b_in) ? i : (m - i) % m;
                label = int32_t(h + 1 + t);
            }
            colors[size_t(a) * order + b] = label;
        }
    }

    Rainbow out = Rainbow::labeled(order, std::move(colors));
    if (out.rank() != m + h + 1) throw InternalError("switched scheme has unexpected rank");
    if (!is_jordan_configuration(out).ok)
        throw InternalError("switched scheme fails the Jordan condition");
    if (!check_switched_table(out, m, n))
        throw InternalError("switched scheme fails its multiplication table");
    if (!is_proper(out).proper) throw InternalError("switched scheme is not proper");
    return out;
}

// ------------------------------------------------------- thin_cyclic_scheme

Rainbow thin_cyclic_scheme(int k) {
    if (k < 1) throw SpecInvalid("cyclic order must be at least 1");
    std::vector<int32_t> colors(size_t(k) * k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) colors[size_t(a) * k + b] = int32_t(((b - a) % k + k) % k);
    return Rainbow::labeled(k, std::move(colors));
}

}  // namespace jscheme
