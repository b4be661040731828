#pragma once

// Exact linear algebra over Q(i, sqrt2).

#include "ck/scalar.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ck {

class SMatrix {
public:
    SMatrix() = default;
    SMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
    static SMatrix identity(int n);
    static SMatrix from_rows(const std::vector<std::vector<Scalar>>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    std::vector<Scalar> row(int i) const;
    std::vector<Scalar> col(int j) const;

    bool operator==(const SMatrix& o) const;
    bool operator!=(const SMatrix& o) const { return !(*this == o); }
    bool is_zero() const;

    SMatrix operator+(const SMatrix& o) const;
    SMatrix operator-(const SMatrix& o) const;
    SMatrix operator*(const SMatrix& o) const;
    SMatrix operator*(const Scalar& s) const;
    SMatrix transpose() const;
    SMatrix conj() const;

    // rows [r0, r0+nr) x cols [c0, c0+nc)
    SMatrix block(int r0, int c0, int nr, int nc) const;
    void set_block(int r0, int c0, const SMatrix& b);
    static SMatrix hstack(const SMatrix& a, const SMatrix& b);
    static SMatrix vstack(const SMatrix& a, const SMatrix& b);
    static SMatrix block_diag(const SMatrix& a, const SMatrix& b);

    std::string str() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

// fraction-free (Bareiss) elimination; divisions are exact by construction
int rank_bareiss(SMatrix m);
Scalar det_bareiss(SMatrix m);

struct RrefResult {
    SMatrix r;
    std::vector<int> pivots;
};
// Gauss-Jordan reduced row echelon form, zero rows dropped
RrefResult rref(const SMatrix& m);
// basis of {x : m x = 0}, one vector per free column (standard basis of the RREF solution)
std::vector<std::vector<Scalar>> nullspace(const SMatrix& m);
std::optional<SMatrix> inverse(const SMatrix& m);
// one solution of m x = b, if any
std::optional<std::vector<Scalar>> solve(const SMatrix& m, const std::vector<Scalar>& b);

using SparseVec = std::vector<std::pair<std::uint64_t, Scalar>>;
void sparse_axpy(SparseVec& y, const Scalar& a, const SparseVec& x);
SparseVec sparse_scale(const SparseVec& x, const Scalar& a);

// Incremental semi-echelon basis over sparse vectors.  Optionally tracks
// coordinates of each stored row in terms of the inserted vectors.
class EchelonBasis {
public:
    explicit EchelonBasis(bool track = false) : track_(track) {}
    int dim() const { return static_cast<int>(rows_.size()); }
    int inserted() const { return inserted_; }
    // returns true if v was independent of the current span
    bool add(const SparseVec& v);
    bool contains(const SparseVec& v) const;
    // coefficients of v in terms of the inserted vectors; nullopt if outside the span.
    // requires tracking and linearly independent insertions
    std::optional<std::vector<Scalar>> coordinates(const SparseVec& v) const;
    // treating the stored rows as homogeneous equations in unknowns 0..n_unknowns-1,
    // one solution per free unknown
    std::vector<SparseVec> nullspace(std::uint64_t n_unknowns) const;

private:
    struct Row {
        SparseVec v;
        std::vector<Scalar> coords;
    };
    // reduces v in place; accumulates coordinates if requested
    void reduce(SparseVec& v, std::vector<Scalar>* coords) const;
    bool track_;
    int inserted_ = 0;
    std::vector<Row> rows_;
    std::vector<std::pair<std::uint64_t, int>> pivot_index_;  // sorted pivot -> row
    int find_pivot(std::uint64_t key) const;
};

}  // namespace ck
