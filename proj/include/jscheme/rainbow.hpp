#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jscheme/errors.hpp"

namespace jscheme {

using Point = int;
using Color = int;

class CountMatrix;

/// A binary relation on {0..n-1}, stored as bit-packed rows.
class Relation {
public:
    explicit Relation(int order);

    int order() const { return n_; }

    bool get(int a, int b) const { return (bits_[size_t(a) * words_ + b / 64] >> (b % 64)) & 1u; }

    void set(int a, int b, bool v = true) {
        uint64_t mask = uint64_t(1) << (b % 64);
        if (v)
            bits_[size_t(a) * words_ + b / 64] |= mask;
        else
            bits_[size_t(a) * words_ + b / 64] &= ~mask;
    }

    Relation transposed() const;
    bool is_symmetric() const;
    bool is_irreflexive() const;
    bool is_reflexive_on_support() const;

    long long support_size() const;
    /// Per-point out-degrees |R(a)|.
    std::vector<long long> out_degrees() const;

    const uint64_t* row(int a) const { return bits_.data() + size_t(a) * words_; }
    int words_per_row() const { return words_; }

    static Relation identity(int n);
    static Relation full(int n);

    bool operator==(const Relation& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const Relation& o) const { return !(*this == o); }

    Relation united(const Relation& o) const;  // set union, equal order

private:
    int n_;
    int words_;
    std::vector<uint64_t> bits_;
};

/// Dense square matrix of exact signed 64-bit counts.
class CountMatrix {
public:
    CountMatrix() : n_(0) {}
    explicit CountMatrix(int order) : n_(order), cells_(size_t(order) * order, 0) {}

    int order() const { return n_; }
    long long at(int a, int b) const { return cells_[size_t(a) * n_ + b]; }
    long long& at(int a, int b) { return cells_[size_t(a) * n_ + b]; }
    const std::vector<long long>& cells() const { return cells_; }

    static CountMatrix identity(int n);
    static CountMatrix ones(int n);
    static CountMatrix from_relation(const Relation& r);

    CountMatrix plus(const CountMatrix& o) const;
    CountMatrix minus(const CountMatrix& o) const;
    CountMatrix scaled(long long k) const;

    bool operator==(const CountMatrix& o) const { return n_ == o.n_ && cells_ == o.cells_; }
    bool operator!=(const CountMatrix& o) const { return !(*this == o); }

private:
    int n_;
    std::vector<long long> cells_;
};

/// (R*S)(a,b) = |R(a) ∩ S^T(b)|, the 0/1 matrix product over the integers.
CountMatrix compose(const Relation& r, const Relation& s);

/// Exact integer matrix product with overflow detection.
CountMatrix matmul(const CountMatrix& a, const CountMatrix& b);

/// A*B + B*A, i.e. twice the Jordan product. Stored doubled so all entries
/// stay integral; callers halve only for display.
CountMatrix star_doubled(const CountMatrix& a, const CountMatrix& b);

/// Support of the doubled Jordan product: RS ∪ SR as a relation.
Relation relational_star(const Relation& r, const Relation& s);

/// Cells with a nonzero entry.
Relation support(const CountMatrix& m);

struct StructureReport {
    bool symmetric = false;
    bool homogeneous = false;
    bool regular = false;
    /// Per color: the constant out-valency, or nullopt when it varies.
    std::vector<std::optional<long long>> valencies;
};

/// A partition of Ω² whose diagonal is a union of classes and whose class set
/// is closed under transposition. Immutable after construction.
class Rainbow {
public:
    Rainbow() = default;  // empty placeholder; factories build real instances

    /// Validates and renumbers colors canonically (first occurrence in a
    /// row-major scan). Accepts any non-negative integer labels.
    static Rainbow from_colors(const std::vector<std::vector<long long>>& matrix);

    /// Validates but keeps the caller's labels; ids must be dense 0..rank-1.
    /// Used by builders whose color ids carry positional meaning.
    static Rainbow labeled(int order, std::vector<int32_t> colors);

    int order() const { return n_; }
    int rank() const { return rank_; }

    Color color(int a, int b) const { return colors_[size_t(a) * n_ + b]; }
    const std::vector<int32_t>& color_matrix() const { return colors_; }

    /// The transpose involution t with color(b,a) = t(color(a,b)).
    Color transpose_color(Color c) const { return transpose_[c]; }
    bool color_on_diagonal(Color c) const { return on_diagonal_[c]; }
    bool is_symmetric_color(Color c) const { return transpose_[c] == c; }

    long long color_size(Color c) const { return class_size_[c]; }

    Relation relation(Color c) const;
    std::vector<Relation> standard_basis() const;
    std::vector<CountMatrix> standard_basis_counts() const;

    /// Merge every color with its transpose partner; canonical renumbering.
    Rainbow symmetrized() const;

    /// Renumber colors by first occurrence in row-major order.
    Rainbow canonicalized() const;
    bool is_canonical() const;

    /// Common refinement with the level sets of m, followed by the
    /// transpose-closure fix-up split; canonical renumbering.
    Rainbow refined_by_values(const CountMatrix& m) const;

    /// Partition of Ω induced by the diagonal colors, parts ordered by their
    /// smallest point.
    std::vector<std::vector<Point>> fibers() const;

    StructureReport structure_report() const;

    bool is_symmetric() const;
    bool is_homogeneous() const;

    /// Same partition of Ω², ignoring labels.
    bool same_partition(const Rainbow& o) const;

    /// Every color of *this is contained in a color of `coarser`.
    bool refines(const Rainbow& coarser) const;

    static Rainbow trivial(int n);

    bool operator==(const Rainbow& o) const { return n_ == o.n_ && colors_ == o.colors_; }

private:
    void finalize();  // computes rank metadata; throws NotARainbow

    int n_ = 0;
    int rank_ = 0;
    std::vector<int32_t> colors_;
    std::vector<int32_t> transpose_;
    std::vector<char> on_diagonal_;
    std::vector<long long> class_size_;
};

using StandardBasis = std::vector<Relation>;

}  // namespace jscheme
