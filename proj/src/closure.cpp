#include "jscheme/closure.hpp"

#include <algorithm>
#include <map>

#include "jscheme/verify.hpp"

namespace jscheme {

namespace {

// One transpose-closure fix-up pass: split classes by the color of the
// transposed cell, first-occurrence renumbering.
std::vector<int32_t> transpose_fixup(int n, const std::vector<int32_t>& col) {
    std::map<std::pair<int32_t, int32_t>, int32_t> groups;
    std::vector<int32_t> out(col.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            size_t i = size_t(a) * n + b;
            auto key = std::make_pair(col[i], col[size_t(b) * n + a]);
            auto it = groups.find(key);
            if (it == groups.end()) it = groups.emplace(key, int32_t(groups.size())).first;
            out[i] = it->second;
        }
    return out;
}

int color_count(const std::vector<int32_t>& col) {
    int32_t mx = -1;
    for (int32_t c : col) mx = std::max(mx, c);
    return mx + 1;
}

// One signature-refinement pass. Signatures are sorted sparse lists of
// (color-pair, count), compared structurally; jordan mode sums the two
// orientations of each pair and also keys on the transposed cell's color.
std::vector<int32_t> signature_pass(int n, const std::vector<int32_t>& col, bool jordan) {
    const int r = color_count(col);
    std::vector<long long> counter(size_t(r) * r, 0);
    std::vector<long long> touched;
    touched.reserve(n);

    std::map<std::vector<long long>, int32_t> classes;
    std::vector<int32_t> out(col.size());
    std::vector<long long> sig;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            touched.clear();
            for (int g = 0; g < n; ++g) {
                int32_t c = col[size_t(a) * n + g];
                int32_t d = col[size_t(g) * n + b];
                long long key = jordan ? (long long)std::min(c, d) * r + std::max(c, d)
                                       : (long long)c * r + d;
                if (counter[key]++ == 0) touched.push_back(key);
            }
            std::sort(touched.begin(), touched.end());
            sig.clear();
            sig.push_back(col[size_t(a) * n + b]);
            if (jordan) sig.push_back(col[size_t(b) * n + a]);
            for (long long key : touched) {
                sig.push_back(key);
                sig.push_back(counter[key]);
                counter[key] = 0;
            }
            auto it = classes.find(sig);
            if (it == classes.end()) it = classes.emplace(sig, int32_t(classes.size())).first;
            out[size_t(a) * n + b] = it->second;
        }
    return out;
}

ClosureReport stabilize(const SeedPartition& seed, ClosureKind kind) {
    const int n = seed.order();
    const bool jordan = (kind == ClosureKind::Jordan);
    std::vector<int32_t> col = seed.canonicalized().color_matrix();
    int rank = color_count(col);

    ClosureReport report;
    report.kind = kind;
    for (;;) {
        col = signature_pass(n, col, jordan);
        col = transpose_fixup(n, col);
        int next = color_count(col);
        ++report.rounds;
        report.rank_history.push_back(next);
        if (next == rank) break;
        rank = next;
    }
    report.result = Rainbow::labeled(n, std::move(col));

    if (jordan) {
        if (!is_jordan_configuration(report.result).ok)
            throw InternalError("jordan stabilization fixpoint fails the Jordan condition");
    } else {
        if (!is_coherent_configuration(report.result).ok)
            throw InternalError("WL stabilization fixpoint fails the coherence condition");
    }
    return report;
}

}  // namespace

SeedPartition seed_from_matrices(int order, const std::vector<CountMatrix>& mats) {
    for (const auto& m : mats)
        if (m.order() != order) throw OrderMismatch("seed matrices must share the given order");

    // key: (diagonal flag, values of all matrices at the cell)
    std::map<std::vector<long long>, int32_t> groups;
    std::vector<int32_t> col(size_t(order) * order);
    std::vector<long long> key;
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            key.clear();
            key.push_back(a == b ? 1 : 0);
            for (const auto& m : mats) key.push_back(m.at(a, b));
            auto it = groups.find(key);
            if (it == groups.end()) it = groups.emplace(key, int32_t(groups.size())).first;
            col[size_t(a) * order + b] = it->second;
        }
    col = transpose_fixup(order, col);
    return Rainbow::labeled(order, std::move(col)).canonicalized();
}

ClosureReport wl_closure(const SeedPartition& seed) { return stabilize(seed, ClosureKind::WL); }

ClosureReport jordan_closure(const SeedPartition& seed) {
    return stabilize(seed, ClosureKind::Jordan);
}

Rainbow subspace_closure_oracle(const SeedPartition& seed, ClosureKind kind) {
    Rainbow cur = seed.canonicalized();
    for (;;) {
        const int rank = cur.rank();
        Rainbow next = cur;
        if (kind == ClosureKind::WL) {
            auto basis = cur.standard_basis();
            for (int i = 0; i < rank; ++i)
                for (int j = 0; j < rank; ++j) next = next.refined_by_values(compose(basis[i], basis[j]));
        } else {
            auto counts = cur.standard_basis_counts();
            for (int i = 0; i < rank; ++i)
                for (int j = i; j < rank; ++j)
                    next = next.refined_by_values(star_doubled(counts[i], counts[j]));
        }
        if (next.rank() == rank) return next;
        cur = std::move(next);
    }
}

PropernessReport is_proper(const Rainbow& x) {
    if (!x.is_symmetric()) throw NotSymmetric("properness is defined for symmetric configurations");
    if (!is_jordan_configuration(x).ok) throw NotJordan("input is not a Jordan configuration");

    ClosureReport wl = wl_closure(x);
    Rainbow sym = wl.result.symmetrized();

    PropernessReport rep;
    rep.jordan_rank = x.rank();
    rep.symmetrized_wl_rank = sym.rank();
    rep.proper = sym.rank() > x.rank();
    if (rep.proper) {
        // first color of the symmetrized closure strictly inside an input color
        const int n = x.order();
        std::vector<int> first_cell(sym.rank(), -1);
        for (int i = 0; i < n * n; ++i) {
            Color c = sym.color_matrix()[i];
            if (first_cell[c] == -1) first_cell[c] = i;
        }
        for (Color c = 0; c < sym.rank(); ++c) {
            Color host = x.color_matrix()[first_cell[c]];
            if (sym.color_size(c) < x.color_size(host)) {
                rep.witness_color = c;
                break;
            }
        }
        if (!rep.witness_color) throw InternalError("proper but no strictly split color found");
    }
    return rep;
}

}  // namespace jscheme
