#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "jscheme/rainbow.hpp"

namespace jscheme {

enum class TensorKind { CC, Jordan };

/// Structure constants p^F_{C,D}. For kind Jordan the table stores the
/// doubled values 2*p^F_{C,D} so everything stays integral.
struct IntersectionTensor {
    int rank = 0;
    TensorKind kind = TensorKind::CC;
    std::vector<long long> values;  // rank^3, index [F][C][D]

    long long at(int F, int C, int D) const { return values[(size_t(F) * rank + C) * rank + D]; }
    long long& at(int F, int C, int D) { return values[(size_t(F) * rank + C) * rank + D]; }

    bool operator==(const IntersectionTensor& o) const {
        return rank == o.rank && kind == o.kind && values == o.values;
    }
};

/// Two cells of the same color whose (possibly symmetrized) path counts for
/// the pair (C,D) disagree.
struct ConstancyWitness {
    Color C, D, F;
    Point a1, b1, a2, b2;
    long long v1, v2;
};

struct CoherenceResult {
    bool ok = false;
    std::optional<IntersectionTensor> tensor;
    std::optional<ConstancyWitness> witness;
};

/// Tests the defining condition of a coherent configuration: every product
/// count |C(a) ∩ D^T(b)| is constant on each color class.
CoherenceResult is_coherent_configuration(const Rainbow& x);

/// Tests the symmetrized condition of a Jordan configuration.
CoherenceResult is_jordan_configuration(const Rainbow& x);

struct SrgParams {
    long long v = 0, k = 0, lambda = 0, mu = 0;
    bool operator==(const SrgParams&) const = default;
};

/// Returns the (v,k,lambda,mu) of a strongly regular graph, or nullopt when
/// the relation is not strongly regular (complete and empty graphs count as
/// degenerate and also return nullopt).
std::optional<SrgParams> srg_check(const Relation& r);

struct Rational {
    long long num = 0, den = 1;
    bool operator==(const Rational&) const = default;
};

/// Hoffman's coclique bound v*(-tau)/(k-tau), tau the least eigenvalue.
/// When the eigenvalues are integral the bound is returned as an exact
/// rational; in every case compare_coclique orders a candidate size against
/// the bound exactly (cross-multiplied surd comparison, no floating point).
struct HoffmanBound {
    SrgParams params;
    long long disc = 0;      // (lambda-mu)^2 + 4(k-mu)
    bool integral = false;   // disc is a perfect square
    Rational value;          // set only when integral
    /// -1, 0, +1 as `size` is below, at, or above the bound.
    int compare_coclique(long long size) const;
};

HoffmanBound hoffman_coclique_bound(const SrgParams& p);

/// Fusion sufficiency test for a rank-5 symmetric homogeneous rainbow with
/// color 0 the diagonal: for each i in {2,3,4} the fusion
/// {C0, C1, Ci, C\Ci} must be a coherent configuration.
bool check_fusion_p3(const Rainbow& x);

/// Verifies the multiplication table of the base scheme with valency-1 colors
/// C_0..C_{m-1} (ids 0..m-1) and cover colors S_0..S_{m-1} (ids m..2m-1).
bool check_base_table(const Rainbow& x, int m, int n);

/// Verifies the multiplication table of the switched scheme with colors
/// D_0..D_{floor(m/2)} (ids 0..floor(m/2)) and T_0..T_{m-1} following.
bool check_switched_table(const Rainbow& x, int m, int n);

/// Dimension of the associative algebra generated by the given matrices
/// under the ordinary matrix product (exact span closure over the rationals).
int generated_assoc_dimension(const std::vector<CountMatrix>& basis);

/// AB = BA for every pair.
bool pairwise_commute(const std::vector<CountMatrix>& basis);

/// (A*B)*C = A*(B*C) for the Jordan product, checked on all basis triples
/// over the doubled representation.
bool jordan_associative(const std::vector<CountMatrix>& basis);

/// For a homogeneous non-regular Jordan configuration: the equal-size
/// bipartition carrying every non-regular color, max-valency side first.
/// Returns nullopt when the configuration is regular.
std::optional<std::pair<std::vector<Point>, std::vector<Point>>> nonregular_bipartition(const Rainbow& x);

}  // namespace jscheme
