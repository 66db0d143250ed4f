#pragma once

#include <optional>
#include <vector>

#include "jscheme/rainbow.hpp"

namespace jscheme {

/// A rainbow used as the starting partition of a stabilization run.
using SeedPartition = Rainbow;

enum class ClosureKind { WL, Jordan };

struct ClosureReport {
    Rainbow result;
    int rounds = 0;
    std::vector<int> rank_history;  // rank after each round; last one is the stable pass
    ClosureKind kind = ClosureKind::WL;
};

/// Common refinement of the level sets of all matrices, split by the diagonal
/// and fixed up for transpose closure; empty list gives the trivial rainbow.
SeedPartition seed_from_matrices(int order, const std::vector<CountMatrix>& mats);

/// Coarsest coherent configuration refining the seed, by iterated refinement
/// over ordered path-color counts. The result is re-verified before return.
ClosureReport wl_closure(const SeedPartition& seed);

/// Coarsest Jordan configuration refining the seed, by iterated refinement
/// over unordered (symmetrized) path-color counts.
ClosureReport jordan_closure(const SeedPartition& seed);

/// Independent closure algorithm: maintain the standard basis, refine by the
/// level sets of all pairwise products (ordinary or doubled Jordan), iterate
/// to a fixpoint. Must agree with the signature-refinement implementation.
Rainbow subspace_closure_oracle(const SeedPartition& seed, ClosureKind kind);

struct PropernessReport {
    bool proper = false;
    int jordan_rank = 0;
    int symmetrized_wl_rank = 0;
    /// A color of the symmetrized coherent closure strictly inside a color of
    /// the input, present exactly when proper.
    std::optional<Color> witness_color;
};

/// Decides properness of a symmetric Jordan configuration: proper iff the
/// symmetrized coherent closure is strictly finer than the input partition.
PropernessReport is_proper(const Rainbow& x);

}  // namespace jscheme
