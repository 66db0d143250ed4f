#include "jscheme/rainbow.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "jscheme/checked.hpp"

namespace jscheme {

// ---------------------------------------------------------------- Relation

Relation::Relation(int order) : n_(order), words_((order + 63) / 64), bits_(size_t(order) * words_, 0) {
    if (order <= 0) throw NonSquare("relation order must be positive");
}

Relation Relation::transposed() const {
    Relation t(n_);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (get(a, b)) t.set(b, a);
    return t;
}

bool Relation::is_symmetric() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (get(a, b) != get(b, a)) return false;
    return true;
}

bool Relation::is_irreflexive() const {
    for (int a = 0; a < n_; ++a)
        if (get(a, a)) return false;
    return true;
}

bool Relation::is_reflexive_on_support() const {
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (get(a, b) && a != b) return false;
    return true;
}

long long Relation::support_size() const {
    long long total = 0;
    for (uint64_t w : bits_) total += std::popcount(w);
    return total;
}

std::vector<long long> Relation::out_degrees() const {
    std::vector<long long> deg(n_, 0);
    for (int a = 0; a < n_; ++a) {
        long long d = 0;
        const uint64_t* r = row(a);
        for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
        deg[a] = d;
    }
    return deg;
}

Relation Relation::identity(int n) {
    Relation r(n);
    for (int a = 0; a < n; ++a) r.set(a, a);
    return r;
}

Relation Relation::full(int n) {
    Relation r(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) r.set(a, b);
    return r;
}

Relation Relation::united(const Relation& o) const {
    if (n_ != o.n_) throw OrderMismatch("union of relations of different order");
    Relation r(n_);
    for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] | o.bits_[i];
    return r;
}

// ------------------------------------------------------------- CountMatrix

CountMatrix CountMatrix::identity(int n) {
    CountMatrix m(n);
    for (int a = 0; a < n; ++a) m.at(a, a) = 1;
    return m;
}

CountMatrix CountMatrix::ones(int n) {
    CountMatrix m(n);
    std::fill(m.cells_.begin(), m.cells_.end(), 1);
    return m;
}

CountMatrix CountMatrix::from_relation(const Relation& r) {
    CountMatrix m(r.order());
    for (int a = 0; a < r.order(); ++a)
        for (int b = 0; b < r.order(); ++b)
            if (r.get(a, b)) m.at(a, b) = 1;
    return m;
}

CountMatrix CountMatrix::plus(const CountMatrix& o) const {
    if (n_ != o.n_) throw OrderMismatch("matrix addition order mismatch");
    CountMatrix m(n_);
    for (size_t i = 0; i < cells_.size(); ++i) m.cells_[i] = checked_add(cells_[i], o.cells_[i]);
    return m;
}

CountMatrix CountMatrix::minus(const CountMatrix& o) const {
    if (n_ != o.n_) throw OrderMismatch("matrix subtraction order mismatch");
    CountMatrix m(n_);
    for (size_t i = 0; i < cells_.size(); ++i) m.cells_[i] = checked_sub(cells_[i], o.cells_[i]);
    return m;
}

CountMatrix CountMatrix::scaled(long long k) const {
    CountMatrix m(n_);
    for (size_t i = 0; i < cells_.size(); ++i) m.cells_[i] = checked_mul(cells_[i], k);
    return m;
}

CountMatrix compose(const Relation& r, const Relation& s) {
    if (r.order() != s.order()) throw OrderMismatch("compose order mismatch");
    const int n = r.order();
    const int words = r.words_per_row();
    Relation st = s.transposed();
    CountMatrix out(n);
    for (int a = 0; a < n; ++a) {
        const uint64_t* ra = r.row(a);
        for (int b = 0; b < n; ++b) {
            const uint64_t* cb = st.row(b);
            long long cnt = 0;
            for (int w = 0; w < words; ++w) cnt += std::popcount(ra[w] & cb[w]);
            out.at(a, b) = cnt;
        }
    }
    return out;
}

CountMatrix matmul(const CountMatrix& a, const CountMatrix& b) {
    if (a.order() != b.order()) throw OrderMismatch("matmul order mismatch");
    const int n = a.order();
    CountMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            long long aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) {
                long long p = checked_mul(aik, b.at(k, j));
                out.at(i, j) = checked_add(out.at(i, j), p);
            }
        }
    return out;
}

CountMatrix star_doubled(const CountMatrix& a, const CountMatrix& b) {
    if (a.order() != b.order()) throw OrderMismatch("star order mismatch");
    return matmul(a, b).plus(matmul(b, a));
}

Relation relational_star(const Relation& r, const Relation& s) {
    if (r.order() != s.order()) throw OrderMismatch("relational star order mismatch");
    const int n = r.order();
    const int words = r.words_per_row();
    Relation st = s.transposed();
    Relation rt = r.transposed();
    Relation out(n);
    for (int a = 0; a < n; ++a) {
        const uint64_t* ra = r.row(a);
        const uint64_t* sa = s.row(a);
        for (int b = 0; b < n; ++b) {
            const uint64_t* sb = st.row(b);
            const uint64_t* rb = rt.row(b);
            bool hit = false;
            for (int w = 0; w < words && !hit; ++w)
                hit = (ra[w] & sb[w]) != 0 || (sa[w] & rb[w]) != 0;
            if (hit) out.set(a, b);
        }
    }
    return out;
}

Relation support(const CountMatrix& m) {
    Relation r(m.order());
    for (int a = 0; a < m.order(); ++a)
        for (int b = 0; b < m.order(); ++b)
            if (m.at(a, b) != 0) r.set(a, b);
    return r;
}

// ----------------------------------------------------------------- Rainbow

void Rainbow::finalize() {
    const int n = n_;
    int r = 0;
    for (int32_t c : colors_) r = std::max(r, c + 1);
    rank_ = r;

    class_size_.assign(r, 0);
    std::vector<char> on_diag(r, 0), off_diag(r, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int32_t c = colors_[size_t(a) * n + b];
            if (c < 0) throw NotARainbow("negative color id");
            ++class_size_[c];
            (a == b ? on_diag[c] : off_diag[c]) = 1;
        }
    for (int c = 0; c < r; ++c) {
        if (class_size_[c] == 0) throw NotARainbow("color id " + std::to_string(c) + " does not occur");
        if (on_diag[c] && off_diag[c])
            throw NotARainbow("color " + std::to_string(c) + " mixes diagonal and off-diagonal cells");
    }
    on_diagonal_.assign(on_diag.begin(), on_diag.end());

    transpose_.assign(r, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int32_t c = colors_[size_t(a) * n + b];
            int32_t ct = colors_[size_t(b) * n + a];
            if (transpose_[c] == -1)
                transpose_[c] = ct;
            else if (transpose_[c] != ct)
                throw NotARainbow("transpose of color " + std::to_string(c) + " is not a single color");
        }
    for (int c = 0; c < r; ++c)
        if (transpose_[transpose_[c]] != c) throw InternalError("transpose map is not an involution");
}

Rainbow Rainbow::from_colors(const std::vector<std::vector<long long>>& matrix) {
    const int n = int(matrix.size());
    if (n == 0) throw NonSquare("empty color matrix");
    for (const auto& row : matrix)
        if (int(row.size()) != n) throw NonSquare("color matrix is not square");

    Rainbow x;
    x.n_ = n;
    x.colors_.assign(size_t(n) * n, -1);
    std::map<long long, int32_t> renumber;  // insertion order = first occurrence
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            long long v = matrix[a][b];
            if (v < 0) throw NotARainbow("negative color id");
            auto it = renumber.find(v);
            if (it == renumber.end()) it = renumber.emplace(v, int32_t(renumber.size())).first;
            x.colors_[size_t(a) * n + b] = it->second;
        }
    x.finalize();
    return x;
}

Rainbow Rainbow::labeled(int order, std::vector<int32_t> colors) {
    if (order <= 0) throw NonSquare("order must be positive");
    if (colors.size() != size_t(order) * order) throw NonSquare("color matrix size mismatch");
    Rainbow x;
    x.n_ = order;
    x.colors_ = std::move(colors);
    x.finalize();
    return x;
}

Rainbow Rainbow::trivial(int n) {
    if (n <= 0) throw NonSquare("order must be positive");
    Rainbow x;
    x.n_ = n;
    x.colors_.assign(size_t(n) * n, n == 1 ? 0 : 1);
    for (int a = 0; a < n; ++a) x.colors_[size_t(a) * n + a] = 0;
    x.finalize();
    return x;
}

Relation Rainbow::relation(Color c) const {
    Relation r(n_);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (color(a, b) == c) r.set(a, b);
    return r;
}

std::vector<Relation> Rainbow::standard_basis() const {
    std::vector<Relation> basis(rank_, Relation(n_));
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) basis[color(a, b)].set(a, b);
    return basis;
}

std::vector<CountMatrix> Rainbow::standard_basis_counts() const {
    std::vector<CountMatrix> basis(rank_, CountMatrix(n_));
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) basis[color(a, b)].at(a, b) = 1;
    return basis;
}

Rainbow Rainbow::canonicalized() const {
    std::vector<int32_t> first_seen(rank_, -1);
    int32_t next = 0;
    std::vector<int32_t> out(colors_.size());
    for (size_t i = 0; i < colors_.size(); ++i) {
        int32_t c = colors_[i];
        if (first_seen[c] == -1) first_seen[c] = next++;
        out[i] = first_seen[c];
    }
    return labeled(n_, std::move(out));
}

bool Rainbow::is_canonical() const {
    int32_t seen = 0;
    std::vector<char> met(rank_, 0);
    for (int32_t c : colors_) {
        if (!met[c]) {
            if (c != seen) return false;
            met[c] = 1;
            ++seen;
        }
    }
    return true;
}

Rainbow Rainbow::symmetrized() const {
    std::vector<int32_t> merged(colors_.size());
    for (size_t i = 0; i < colors_.size(); ++i) {
        int32_t c = colors_[i];
        merged[i] = std::min(c, transpose_[c]);
    }
    return labeled(n_, std::move(merged)).canonicalized();
}

Rainbow Rainbow::refined_by_values(const CountMatrix& m) const {
    if (m.order() != n_) throw OrderMismatch("refine_by_values order mismatch");
    // split by (old color, value)
    std::map<std::pair<int32_t, long long>, int32_t> groups;
    std::vector<int32_t> split(colors_.size());
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            size_t i = size_t(a) * n_ + b;
            auto key = std::make_pair(colors_[i], m.at(a, b));
            auto [it, fresh] = groups.try_emplace(key, -1);
            if (fresh) it->second = int32_t(groups.size() - 1);
            split[i] = it->second;
        }
    // transpose-closure fix-up: split by (color, transpose-cell color)
    std::map<std::pair<int32_t, int32_t>, int32_t> tgroups;
    std::vector<int32_t> fixed(colors_.size());
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            size_t i = size_t(a) * n_ + b;
            size_t j = size_t(b) * n_ + a;
            auto key = std::make_pair(split[i], split[j]);
            auto [it, fresh] = tgroups.try_emplace(key, -1);
            if (fresh) it->second = int32_t(tgroups.size() - 1);
            fixed[i] = it->second;
        }
    return labeled(n_, std::move(fixed)).canonicalized();
}

std::vector<std::vector<Point>> Rainbow::fibers() const {
    std::vector<int32_t> part_of_color(rank_, -1);
    std::vector<std::vector<Point>> parts;
    for (int a = 0; a < n_; ++a) {
        int32_t c = color(a, a);
        if (part_of_color[c] == -1) {
            part_of_color[c] = int32_t(parts.size());
            parts.emplace_back();
        }
        parts[part_of_color[c]].push_back(a);
    }
    return parts;
}

bool Rainbow::is_symmetric() const {
    for (int c = 0; c < rank_; ++c)
        if (transpose_[c] != c) return false;
    return true;
}

bool Rainbow::is_homogeneous() const {
    int diag_colors = 0;
    for (int c = 0; c < rank_; ++c) diag_colors += on_diagonal_[c];
    return diag_colors == 1;
}

StructureReport Rainbow::structure_report() const {
    StructureReport rep;
    rep.symmetric = is_symmetric();
    rep.homogeneous = is_homogeneous();
    rep.valencies.assign(rank_, std::nullopt);

    std::vector<long long> deg(size_t(rank_) * n_, 0);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) ++deg[size_t(color(a, b)) * n_ + a];
    rep.regular = true;
    for (int c = 0; c < rank_; ++c) {
        long long k = deg[size_t(c) * n_];
        bool constant = true;
        for (int a = 1; a < n_; ++a)
            if (deg[size_t(c) * n_ + a] != k) {
                constant = false;
                break;
            }
        if (constant)
            rep.valencies[c] = k;
        else
            rep.regular = false;
    }
    if (rep.regular && !rep.homogeneous) throw InternalError("regular rainbow must be homogeneous");
    return rep;
}

bool Rainbow::same_partition(const Rainbow& o) const {
    if (n_ != o.n_) return false;
    return canonicalized().color_matrix() == o.canonicalized().color_matrix();
}

bool Rainbow::refines(const Rainbow& coarser) const {
    if (n_ != coarser.n_) return false;
    std::vector<int32_t> image(rank_, -1);
    for (size_t i = 0; i < colors_.size(); ++i) {
        int32_t fine = colors_[i];
        int32_t c = coarser.colors_[i];
        if (image[fine] == -1)
            image[fine] = c;
        else if (image[fine] != c)
            return false;
    }
    return true;
}

}  // namespace jscheme
