#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "jscheme/rainbow.hpp"

namespace jscheme {

/// Deterministic pseudo-random stream. All randomized construction options
/// run through this so identical seeds give identical objects on any
/// platform (hand-rolled shuffling, rejection-sampled bounds).
class SeededRng {
public:
    explicit SeededRng(uint64_t seed) : engine_(seed) {}
    uint64_t next() { return engine_(); }
    /// Unbiased value in [0, bound).
    uint64_t below(uint64_t bound);
    /// In-place Fisher-Yates shuffle (avoids std::shuffle, whose draws are
    /// implementation-defined).
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;  // engine output is pinned by the standard
};

/// The vector space Z_3^d with one canonical linear form per hyperplane
/// through the origin (normal scaled so its first nonzero coordinate is 1).
class Z3Space {
public:
    static Z3Space make(int d);

    int dimension() const { return d_; }
    int size() const { return size_; }                      // 3^d vectors
    int hyperplane_count() const { return int(normals_.size()); }  // (3^d-1)/2

    /// Value of the i-th linear form on vector v (vectors are encoded
    /// lexicographically, most significant coordinate first).
    int form(int i, int v) const { return form_table_[size_t(i) * size_ + v]; }

private:
    int d_ = 0;
    int size_ = 0;
    std::vector<int> normals_;
    std::vector<int8_t> form_table_;
};

/// Binary operation on [0,r] with a<>a = 0 and every left translation a
/// bijection.
class DiamondTable {
public:
    static DiamondTable cyclic(int r);                     // x<>y = x-y mod r+1
    static DiamondTable seeded_random(int r, uint64_t seed);
    static DiamondTable from_rows(std::vector<std::vector<int>> rows);

    int size() const { return size_; }  // r+1
    int apply(int a, int b) const { return table_[size_t(a) * size_ + b]; }
    void validate() const;  // throws SpecInvalid

private:
    int size_ = 0;
    std::vector<int> table_;
};

using Perm3 = std::array<uint8_t, 3>;

inline constexpr Perm3 kIdentityPerm{0, 1, 2};
inline constexpr Perm3 kThreeCyclePlus{1, 2, 0};   // 0->1->2->0
inline constexpr Perm3 kThreeCycleMinus{2, 0, 1};  // 0->2->1->0

Perm3 compose_perm(const Perm3& f, const Perm3& g);  // x -> f(g(x))
Perm3 invert_perm(const Perm3& p);

/// Full parameter record of the hyperplane-matching construction of rank-5
/// Jordan schemes: the diamond operation, one permutation of Z_3 per block
/// pair and one 3-cycle choice per block pair.
struct WfdfSpec {
    int d = 0;
    DiamondTable diamond;
    std::vector<Perm3> sigma;      // indexed over pairs i<j in lexicographic order
    std::vector<bool> theta_plus;  // true: (0,1,2); false: (0,2,1)

    static int pair_count(int r) { return (r + 1) * r / 2; }
    static int pair_index(int i, int j, int r);  // i < j over [0,r]

    enum class DiamondKind { Cyclic, Random };
    enum class SigmaKind { Identity, Random };
    enum class ThetaKind { Plus, Random };
    static WfdfSpec make(int d, DiamondKind dk, SigmaKind sk, ThetaKind tk, uint64_t seed);

    void validate() const;  // throws SpecInvalid
};

/// Builds the rank-5 Jordan scheme on 3^d (3^d+1)/2 points with colors
/// labeled 0 = diagonal, 1 = within-block, 2..4 = the three matching colors.
/// The output is self-verified (partition + Jordan condition).
Rainbow build_wfdf(const WfdfSpec& spec);

/// Exp/log arithmetic for GF(2^k), k in {2,3,4}, with fixed irreducible
/// polynomials and generator x.
class GFTable {
public:
    static GFTable make(int k);
    int q() const { return q_; }
    int mul(int a, int b) const;
    int log(int a) const { return log_[a]; }   // a != 0
    int exp(int e) const { return exp_[((e % (q_ - 1)) + q_ - 1) % (q_ - 1)]; }

private:
    int k_ = 0, q_ = 0;
    std::vector<int> exp_, log_;
};

/// Parameters of the cyclotomic cover: vertices are the cosets of the index-m
/// subgroup of scalars acting on GF(q)^2 \ {0}.
struct CoverSpec {
    int q = 0;
    int m = 0;
};

/// Builds the base scheme of order m(q+1) and rank 2m whose colors follow the
/// labeling convention of check_base_table; the multiplication table is
/// verified before return (TableVerificationFailed otherwise).
Rainbow build_cyclotomic_base(int q, int m);

/// Recolors the base across one fiber: D_i = C_i u C_{-i} and T_i mixing the
/// two sides of the fiber split. Self-verified: Jordan condition, switched
/// table, and properness.
Rainbow build_switched(const Rainbow& base, int m, int n, int fiber_index);

/// Rank-k rainbow of the cyclic group Z_k; always a coherent configuration.
Rainbow thin_cyclic_scheme(int k);

}  // namespace jscheme
