#pragma once

// Dense matrices over the Pimenov algebra.

#include "ck/pimenov.hpp"

#include <string>
#include <vector>

namespace ck {

class PMatrix {
public:
    PMatrix() = default;
    PMatrix(int rows, int cols, int arity);
    static PMatrix identity(int n, int arity);
    // e_{ij}: single unit entry (0-based)
    static PMatrix unit(int n, int i, int j, int arity);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int arity() const { return arity_; }
    bool square() const { return rows_ == cols_; }

    Pim& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Pim& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const std::vector<Pim>& entries() const { return a_; }

    bool is_zero() const;
    bool operator==(const PMatrix& o) const;
    bool operator!=(const PMatrix& o) const { return !(*this == o); }

    PMatrix operator-() const;
    PMatrix& operator+=(const PMatrix& o);
    PMatrix& operator-=(const PMatrix& o);
    PMatrix& operator*=(const Pim& s);
    friend PMatrix operator+(PMatrix a, const PMatrix& b) { return a += b; }
    friend PMatrix operator-(PMatrix a, const PMatrix& b) { return a -= b; }
    friend PMatrix operator*(const PMatrix& a, const PMatrix& b);
    friend PMatrix operator*(PMatrix a, const Pim& s) { return a *= s; }
    friend PMatrix operator*(const Pim& s, PMatrix a) { return a *= s; }
    friend PMatrix operator*(PMatrix a, const Scalar& s);
    friend PMatrix operator*(const Scalar& s, PMatrix a) { return std::move(a) * s; }

    PMatrix transpose() const;
    PMatrix conj_transpose() const;
    Pim trace() const;

    // Gauss-Jordan with invertible (unit-part != 0) pivots; throws std::domain_error if none exists
    PMatrix inverse() const;

    std::string str() const;

private:
    int rows_ = 0, cols_ = 0, arity_ = 0;
    std::vector<Pim> a_;
};

inline PMatrix mat_mul(const PMatrix& a, const PMatrix& b) { return a * b; }
inline PMatrix mat_add(const PMatrix& a, const PMatrix& b) { return a + b; }
inline PMatrix mat_transpose(const PMatrix& a) { return a.transpose(); }
inline PMatrix mat_conj_transpose(const PMatrix& a) { return a.conj_transpose(); }
PMatrix mat_commutator(const PMatrix& a, const PMatrix& b);

// finite exponential series; throws std::domain_error if M^rows != 0
PMatrix exp_nilpotent(const PMatrix& m);

}  // namespace ck
