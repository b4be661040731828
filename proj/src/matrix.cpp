#include "ck/matrix.hpp"

#include <stdexcept>

namespace ck {

PMatrix::PMatrix(int rows, int cols, int arity)
    : rows_(rows), cols_(cols), arity_(arity),
      a_(static_cast<std::size_t>(rows) * cols, Pim(arity)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

PMatrix PMatrix::identity(int n, int arity) {
    PMatrix m(n, n, arity);
    for (int i = 0; i < n; ++i) m(i, i) = Pim(arity, Scalar(1));
    return m;
}

PMatrix PMatrix::unit(int n, int i, int j, int arity) {
    PMatrix m(n, n, arity);
    m(i, j) = Pim(arity, Scalar(1));
    return m;
}

bool PMatrix::is_zero() const {
    for (const auto& e : a_)
        if (!e.is_zero()) return false;
    return true;
}

bool PMatrix::operator==(const PMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < a_.size(); ++k)
        if (a_[k] != o.a_[k]) return false;
    return true;
}

static void check_same_shape(const PMatrix& a, const PMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
}

PMatrix PMatrix::operator-() const {
    PMatrix r = *this;
    for (auto& e : r.a_) e = -e;
    return r;
}

PMatrix& PMatrix::operator+=(const PMatrix& o) {
    check_same_shape(*this, o);
    for (std::size_t k = 0; k < a_.size(); ++k)
        if (!o.a_[k].is_zero()) a_[k] += o.a_[k];
    return *this;
}

PMatrix& PMatrix::operator-=(const PMatrix& o) {
    check_same_shape(*this, o);
    for (std::size_t k = 0; k < a_.size(); ++k)
        if (!o.a_[k].is_zero()) a_[k] -= o.a_[k];
    return *this;
}

PMatrix& PMatrix::operator*=(const Pim& s) {
    for (auto& e : a_)
        if (!e.is_zero()) e = e * s;
    return *this;
}

PMatrix operator*(PMatrix a, const Scalar& s) {
    for (auto& e : a.a_)
        if (!e.is_zero()) e *= s;
    return a;
}

PMatrix operator*(const PMatrix& a, const PMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    PMatrix r(a.rows_, b.cols_, a.arity_ ? a.arity_ : b.arity_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Pim& x = a(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Pim& y = b(k, j);
                if (y.is_zero()) continue;
                r(i, j) += x * y;
            }
        }
    return r;
}

PMatrix PMatrix::transpose() const {
    PMatrix r(cols_, rows_, arity_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

PMatrix PMatrix::conj_transpose() const {
    PMatrix r(cols_, rows_, arity_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j).conj();
    return r;
}

Pim PMatrix::trace() const {
    Pim t(arity_);
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

PMatrix PMatrix::inverse() const {
    if (!square()) throw std::invalid_argument("inverse of non-square matrix");
    int n = rows_;
    PMatrix a = *this, inv = identity(n, arity_);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a(r, col).is_unit()) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("matrix is not invertible over the Pimenov algebra");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        Pim p = a(col, col).inv();
        for (int j = 0; j < n; ++j) {
            a(col, j) = a(col, j) * p;
            inv(col, j) = inv(col, j) * p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            Pim f = a(r, col);
            for (int j = 0; j < n; ++j) {
                if (!a(col, j).is_zero()) a(r, j) -= f * a(col, j);
                if (!inv(col, j).is_zero()) inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

std::string PMatrix::str() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
        out += "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) out += ", ";
            out += (*this)(i, j).str();
        }
        out += "]\n";
    }
    return out;
}

PMatrix mat_commutator(const PMatrix& a, const PMatrix& b) { return a * b - b * a; }

PMatrix exp_nilpotent(const PMatrix& m) {
    if (!m.square()) throw std::invalid_argument("exponential of non-square matrix");
    int n = m.rows();
    // over the Pimenov algebra a nilpotent matrix satisfies M^{n(arity+1)} = 0
    int limit = n * (m.arity() + 1) + 1;
    PMatrix sum = PMatrix::identity(n, m.arity()), term = sum;
    for (int k = 1; k <= limit; ++k) {
        term = term * m * Scalar(Rational(1, k));
        if (term.is_zero()) return sum;
        sum += term;
    }
    throw std::domain_error("exponential series does not terminate");
}

}  // namespace ck
