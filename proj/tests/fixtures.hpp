#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// recompute everything from the definitions (set intersections, naive triple
// loops) so they share no code path with the library implementations.

#include <set>
#include <vector>

#include "jscheme/rainbow.hpp"

namespace fixtures {

using jscheme::CountMatrix;
using jscheme::Rainbow;
using jscheme::Relation;

/// The order-4 homogeneous non-regular Jordan configuration with colors
/// X=0 (diagonal), Y=1, Z=2, W=Z^T=3.
inline Rainbow four_point_example() {
    return Rainbow::from_colors({{0, 1, 2, 2}, {1, 0, 2, 2}, {3, 3, 0, 1}, {3, 3, 1, 0}});
}

/// Pentagon adjacency as a relation.
inline Relation pentagon() {
    Relation r(5);
    for (int i = 0; i < 5; ++i) {
        r.set(i, (i + 1) % 5);
        r.set((i + 1) % 5, i);
    }
    return r;
}

inline std::vector<std::vector<long long>> to_rows(const CountMatrix& m) {
    std::vector<std::vector<long long>> rows(m.order(), std::vector<long long>(m.order()));
    for (int a = 0; a < m.order(); ++a)
        for (int b = 0; b < m.order(); ++b) rows[a][b] = m.at(a, b);
    return rows;
}

/// Naive integer matrix product (oracle for compose/matmul).
inline std::vector<std::vector<long long>> naive_matmul(const std::vector<std::vector<long long>>& a,
                                                        const std::vector<std::vector<long long>>& b) {
    const int n = int(a.size());
    std::vector<std::vector<long long>> out(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) out[i][j] += a[i][k] * b[k][j];
    return out;
}

/// Definition-level count |C(a) ∩ D^T(b)| via point sets.
inline long long naive_path_count(const Rainbow& x, int colorC, int colorD, int a, int b) {
    long long cnt = 0;
    for (int g = 0; g < x.order(); ++g)
        if (x.color(a, g) == colorC && x.color(g, b) == colorD) ++cnt;
    return cnt;
}

/// Brute-force check of the coherence condition straight from its definition.
inline bool naive_is_cc(const Rainbow& x) {
    const int n = x.order(), r = x.rank();
    for (int c = 0; c < r; ++c)
        for (int d = 0; d < r; ++d) {
            std::vector<long long> val(r, -1);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    long long v = naive_path_count(x, c, d, a, b);
                    int f = x.color(a, b);
                    if (val[f] == -1)
                        val[f] = v;
                    else if (val[f] != v)
                        return false;
                }
        }
    return true;
}

/// Brute-force check of the symmetrized (Jordan) condition.
inline bool naive_is_jc(const Rainbow& x) {
    const int n = x.order(), r = x.rank();
    for (int c = 0; c < r; ++c)
        for (int d = c; d < r; ++d) {
            std::vector<long long> val(r, -1);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    long long v = naive_path_count(x, c, d, a, b) + naive_path_count(x, d, c, a, b);
                    int f = x.color(a, b);
                    if (val[f] == -1)
                        val[f] = v;
                    else if (val[f] != v)
                        return false;
                }
        }
    return true;
}

/// Common neighbours |R(a) ∩ R(b)| through explicit neighbour sets.
inline long long naive_common_neighbors(const Relation& r, int a, int b) {
    std::set<int> na, nb;
    for (int g = 0; g < r.order(); ++g) {
        if (r.get(a, g)) na.insert(g);
        if (r.get(b, g)) nb.insert(g);
    }
    long long cnt = 0;
    for (int g : na) cnt += nb.count(g);
    return cnt;
}

/// Thin scheme of the symmetric group S_3 on 6 points (test fixture for the
/// degenerate d=1 comparison): color(x,y) indexed by the permutation y*x^-1.
inline Rainbow thin_s3_scheme() {
    // permutations of {0,1,2} as images
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto mul = [&](int f, int g) {  // f after g
        int img[3];
        for (int x = 0; x < 3; ++x) img[x] = perms[f][perms[g][x]];
        for (int i = 0; i < 6; ++i)
            if (img[0] == perms[i][0] && img[1] == perms[i][1] && img[2] == perms[i][2]) return i;
        return -1;
    };
    auto inv = [&](int f) {
        int img[3];
        for (int x = 0; x < 3; ++x) img[perms[f][x]] = x;
        for (int i = 0; i < 6; ++i)
            if (img[0] == perms[i][0] && img[1] == perms[i][1] && img[2] == perms[i][2]) return i;
        return -1;
    };
    std::vector<std::vector<long long>> colors(6, std::vector<long long>(6));
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) colors[x][y] = mul(y, inv(x));
    return Rainbow::from_colors(colors);
}

}  // namespace fixtures
