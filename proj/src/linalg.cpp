#include "ck/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ck {

SMatrix SMatrix::identity(int n) {
    SMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

SMatrix SMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows, int cols) {
    SMatrix m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != cols) throw std::invalid_argument("ragged rows");
        for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Scalar> SMatrix::row(int i) const {
    return {a_.begin() + static_cast<long>(i) * cols_, a_.begin() + static_cast<long>(i + 1) * cols_};
}

std::vector<Scalar> SMatrix::col(int j) const {
    std::vector<Scalar> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

bool SMatrix::operator==(const SMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool SMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

SMatrix SMatrix::operator+(const SMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    SMatrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
}

SMatrix SMatrix::operator-(const SMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    SMatrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
    return r;
}

SMatrix SMatrix::operator*(const SMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
    SMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& x = (*this)(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& y = o(k, j);
                if (!y.is_zero()) r(i, j) += x * y;
            }
        }
    return r;
}

SMatrix SMatrix::operator*(const Scalar& s) const {
    SMatrix r = *this;
    for (auto& x : r.a_)
        if (!x.is_zero()) x *= s;
    return r;
}

SMatrix SMatrix::transpose() const {
    SMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

SMatrix SMatrix::conj() const {
    SMatrix r = *this;
    for (auto& x : r.a_) x = x.conj();
    return r;
}

SMatrix SMatrix::block(int r0, int c0, int nr, int nc) const {
    SMatrix b(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void SMatrix::set_block(int r0, int c0, const SMatrix& b) {
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

SMatrix SMatrix::hstack(const SMatrix& a, const SMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    SMatrix r(a.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    return r;
}

SMatrix SMatrix::vstack(const SMatrix& a, const SMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    SMatrix r(a.rows() + b.rows(), a.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), 0, b);
    return r;
}

SMatrix SMatrix::block_diag(const SMatrix& a, const SMatrix& b) {
    SMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), a.cols(), b);
    return r;
}

std::string SMatrix::str() const {
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

namespace {

// Bareiss sweep; returns rank and leaves the last pivot in *last (det up to sign)
int bareiss(SMatrix& m, Scalar* last, int* sign) {
    int rows = m.rows(), cols = m.cols();
    Scalar prev(1);
    int r = 0;
    *sign = 1;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!m(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
            *sign = -*sign;
        }
        Scalar p = m(r, c);
        Scalar prev_inv = prev.inv();
        for (int i = r + 1; i < rows; ++i) {
            Scalar f = m(i, c);
            for (int j = c + 1; j < cols; ++j) {
                Scalar v = p * m(i, j) - f * m(r, j);
                if (!prev.is_one()) v *= prev_inv;
                m(i, j) = std::move(v);
            }
            m(i, c) = Scalar();
        }
        prev = p;
        ++r;
    }
    *last = prev;
    return r;
}

}  // namespace

int rank_bareiss(SMatrix m) {
    Scalar last;
    int sign;
    return bareiss(m, &last, &sign);
}

Scalar det_bareiss(SMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (m.rows() == 0) return Scalar(1);
    Scalar last;
    int sign;
    int r = bareiss(m, &last, &sign);
    if (r < m.rows()) return Scalar();
    return sign < 0 ? -last : last;
}

RrefResult rref(const SMatrix& in) {
    SMatrix m = in;
    int rows = m.rows(), cols = m.cols();
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!m(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = m(r, c).inv();
        for (int j = c; j < cols; ++j)
            if (!m(r, j).is_zero()) m(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Scalar f = m(i, c);
            for (int j = c; j < cols; ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return {m.block(0, 0, r, cols), piv};
}

std::vector<std::vector<Scalar>> nullspace(const SMatrix& m) {
    RrefResult rr = rref(m);
    int cols = m.cols();
    std::vector<bool> is_piv(cols, false);
    for (int c : rr.pivots) is_piv[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Scalar> v(cols);
        v[f] = Scalar(1);
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.r(static_cast<int>(i), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<SMatrix> inverse(const SMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    int n = m.rows();
    RrefResult rr = rref(SMatrix::hstack(m, SMatrix::identity(n)));
    if (static_cast<int>(rr.pivots.size()) < n || (n > 0 && rr.pivots[n - 1] != n - 1)) return std::nullopt;
    return rr.r.block(0, n, n, n);
}

std::optional<std::vector<Scalar>> solve(const SMatrix& m, const std::vector<Scalar>& b) {
    SMatrix aug(m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    for (int i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b.at(i);
    RrefResult rr = rref(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
    std::vector<Scalar> x(m.cols());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.r(static_cast<int>(i), m.cols());
    return x;
}

void sparse_axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
    if (a.is_zero() || x.empty()) return;
    SparseVec out;
    out.reserve(y.size() + x.size());
    auto p = y.begin(), pe = y.end();
    auto q = x.begin(), qe = x.end();
    while (p != pe || q != qe) {
        if (q == qe || (p != pe && p->first < q->first)) {
            out.push_back(std::move(*p++));
        } else if (p == pe || q->first < p->first) {
            out.emplace_back(q->first, a * q->second);
            ++q;
        } else {
            Scalar s = p->second + a * q->second;
            if (!s.is_zero()) out.emplace_back(p->first, std::move(s));
            ++p;
            ++q;
        }
    }
    y = std::move(out);
}

SparseVec sparse_scale(const SparseVec& x, const Scalar& a) {
    SparseVec out;
    if (a.is_zero()) return out;
    out.reserve(x.size());
    for (const auto& [k, v] : x) out.emplace_back(k, a * v);
    return out;
}

int EchelonBasis::find_pivot(std::uint64_t key) const {
    auto it = std::lower_bound(pivot_index_.begin(), pivot_index_.end(), key,
                               [](const auto& e, std::uint64_t k) { return e.first < k; });
    if (it != pivot_index_.end() && it->first == key) return it->second;
    return -1;
}

void EchelonBasis::reduce(SparseVec& v, std::vector<Scalar>* coords) const {
    // rows are fully reduced, so subtracting one never reintroduces another pivot
    std::vector<std::pair<int, Scalar>> hits;
    for (const auto& [k, c] : v) {
        int r = find_pivot(k);
        if (r >= 0) hits.emplace_back(r, c);
    }
    for (const auto& [r, c] : hits) {
        const Row& row = rows_[r];
        sparse_axpy(v, -c, row.v);
        if (coords) {
            if (coords->size() < row.coords.size()) coords->resize(row.coords.size());
            for (std::size_t k = 0; k < row.coords.size(); ++k)
                if (!row.coords[k].is_zero()) (*coords)[k] -= c * row.coords[k];
        }
    }
}

bool EchelonBasis::add(const SparseVec& v) {
    SparseVec w = v;
    std::vector<Scalar> coords;
    int id = inserted_++;
    if (track_) {
        coords.assign(inserted_, Scalar());
        coords[id] = Scalar(1);
    }
    reduce(w, track_ ? &coords : nullptr);
    if (w.empty()) return false;
    std::uint64_t key = w.front().first;
    Scalar inv = w.front().second.inv();
    Row row{sparse_scale(w, inv), {}};
    if (track_) {
        for (auto& c : coords) c *= inv;
        row.coords = std::move(coords);
    }
    // clear the new pivot from existing rows
    for (auto& old : rows_) {
        auto it = std::lower_bound(old.v.begin(), old.v.end(), key,
                                   [](const auto& e, std::uint64_t k) { return e.first < k; });
        if (it == old.v.end() || it->first != key) continue;
        Scalar c = it->second;
        sparse_axpy(old.v, -c, row.v);
        if (track_) {
            if (old.coords.size() < row.coords.size()) old.coords.resize(row.coords.size());
            for (std::size_t k = 0; k < row.coords.size(); ++k)
                if (!row.coords[k].is_zero()) old.coords[k] -= c * row.coords[k];
        }
    }
    rows_.push_back(std::move(row));
    auto it = std::lower_bound(pivot_index_.begin(), pivot_index_.end(), key,
                               [](const auto& e, std::uint64_t k) { return e.first < k; });
    pivot_index_.insert(it, {key, dim() - 1});
    return true;
}

bool EchelonBasis::contains(const SparseVec& v) const {
    SparseVec w = v;
    reduce(w, nullptr);
    return w.empty();
}

std::optional<std::vector<Scalar>> EchelonBasis::coordinates(const SparseVec& v) const {
    if (!track_) throw std::logic_error("coordinates requested from an untracked basis");
    SparseVec w = v;
    std::vector<Scalar> acc(inserted_);
    reduce(w, &acc);
    if (!w.empty()) return std::nullopt;
    for (auto& c : acc) c = -c;
    return acc;
}

std::vector<SparseVec> EchelonBasis::nullspace(std::uint64_t n_unknowns) const {
    std::vector<char> pivot(n_unknowns, 0);
    for (const auto& r : rows_) pivot[r.v.front().first] = 1;
    // free unknown -> (pivot, coefficient) of rows mentioning it
    std::vector<std::vector<std::pair<std::uint64_t, Scalar>>> uses(n_unknowns);
    for (const auto& r : rows_) {
        std::uint64_t p = r.v.front().first;
        for (std::size_t k = 1; k < r.v.size(); ++k) uses[r.v[k].first].emplace_back(p, r.v[k].second);
    }
    std::vector<SparseVec> out;
    for (std::uint64_t f = 0; f < n_unknowns; ++f) {
        if (pivot[f]) continue;
        SparseVec x{{f, Scalar(1)}};
        for (const auto& [p, c] : uses[f]) x.emplace_back(p, -c);
        std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace ck
