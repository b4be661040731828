#include "ck/grassmann.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace ck {

int merge_sign(std::uint32_t a, std::uint32_t b) {
    // count pairs (i in a, j in b) with i > j
    int swaps = 0;
    while (b) {
        int j = std::countr_zero(b);
        b &= b - 1;
        swaps += std::popcount(a >> (j + 1));
    }
    return swaps % 2 ? -1 : 1;
}

GrassmannElement::GrassmannElement(int vars) : vars_(vars) {
    if (vars < 0 || vars > 30) throw std::invalid_argument("generator count out of range");
}

GrassmannElement GrassmannElement::constant(int vars, const Scalar& c) {
    GrassmannElement g(vars);
    g.add_term(0, c);
    return g;
}

GrassmannElement GrassmannElement::generator(int vars, int i) {
    GrassmannElement g(vars);
    if (i < 0 || i >= vars) throw std::invalid_argument("generator index out of range");
    g.add_term(1u << i, Scalar(1));
    return g;
}

GrassmannElement GrassmannElement::linear(int vars, const std::vector<Scalar>& coefs, const Scalar& c0) {
    if (static_cast<int>(coefs.size()) != vars) throw std::invalid_argument("coefficient count mismatch");
    GrassmannElement g = constant(vars, c0);
    for (int i = 0; i < vars; ++i) g.add_term(1u << i, coefs[i]);
    return g;
}

Scalar GrassmannElement::coef(std::uint32_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? Scalar() : it->second;
}

void GrassmannElement::add_term(std::uint32_t mask, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(mask, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int GrassmannElement::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, std::popcount(m));
    return d;
}

GrassmannElement GrassmannElement::part(int d) const {
    GrassmannElement g(vars_);
    for (const auto& [m, c] : terms_)
        if (std::popcount(m) == d) g.terms_.emplace(m, c);
    return g;
}

GrassmannElement GrassmannElement::operator+(const GrassmannElement& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("generator count mismatch");
    GrassmannElement g = *this;
    for (const auto& [m, c] : o.terms_) g.add_term(m, c);
    return g;
}

GrassmannElement GrassmannElement::operator-(const GrassmannElement& o) const { return *this + o * Scalar(-1); }

GrassmannElement GrassmannElement::operator*(const GrassmannElement& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("generator count mismatch");
    GrassmannElement g(vars_);
    for (const auto& [a, x] : terms_)
        for (const auto& [b, y] : o.terms_) {
            if (a & b) continue;
            Scalar c = x * y;
            if (merge_sign(a, b) < 0) c = -c;
            g.add_term(a | b, c);
        }
    return g;
}

GrassmannElement GrassmannElement::operator*(const Scalar& s) const {
    GrassmannElement g(vars_);
    if (s.is_zero()) return g;
    for (const auto& [m, c] : terms_) g.terms_.emplace(m, c * s);
    return g;
}

std::string GrassmannElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int i = 0; i < vars_; ++i)
            if (m >> i & 1) os << "*x" << i + 1;
    }
    return os.str();
}

GrassmannElement grassmann_exp(const GrassmannElement& f) {
    if (!f.constant_term().is_zero()) throw std::invalid_argument("exp needs a zero constant term");
    GrassmannElement sum = GrassmannElement::constant(f.vars(), Scalar(1));
    GrassmannElement power = sum;
    for (int k = 1; k <= f.vars(); ++k) {
        power = power * f * Scalar::frac(1, k);
        if (power.is_zero()) break;
        sum = sum + power;
    }
    return sum;
}

GrassmannElement grassmann_log1p(const GrassmannElement& x) {
    if (!x.constant_term().is_zero()) throw std::invalid_argument("log1p needs a zero constant term");
    GrassmannElement sum(x.vars());
    GrassmannElement power = GrassmannElement::constant(x.vars(), Scalar(1));
    for (int k = 1; k <= x.vars(); ++k) {
        power = power * x;
        if (power.is_zero()) break;
        sum = sum + power * Scalar::frac(k % 2 ? 1 : -1, k);
    }
    return sum;
}

GrassmannElement substitute(const GrassmannElement& g, const SMatrix& m) {
    int n = g.vars();
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("substitution matrix shape");
    std::vector<GrassmannElement> image;
    for (int r = 0; r < n; ++r) image.push_back(GrassmannElement::linear(n, m.row(r)));
    GrassmannElement out(n);
    for (const auto& [mask, c] : g.terms()) {
        GrassmannElement t = GrassmannElement::constant(n, c);
        for (int r = 0; r < n; ++r)
            if (mask >> r & 1) t = t * image[r];
        out = out + t;
    }
    return out;
}

std::vector<std::uint32_t> graded_basis(int n, int k) {
    std::vector<std::uint32_t> out;
    if (k < 0 || k > n) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        std::uint32_t m = 0;
        for (int i : idx) m |= 1u << i;
        out.push_back(m);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

SMatrix compound_matrix(const SMatrix& a, int k) {
    auto rows = graded_basis(a.rows(), k), cols = graded_basis(a.cols(), k);
    SMatrix c(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    auto indices = [](std::uint32_t m) {
        std::vector<int> v;
        for (int i = 0; m; ++i, m >>= 1)
            if (m & 1) v.push_back(i);
        return v;
    };
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto ri = indices(rows[r]);
        for (std::size_t s = 0; s < cols.size(); ++s) {
            auto ci = indices(cols[s]);
            SMatrix minor(k, k);
            for (int x = 0; x < k; ++x)
                for (int y = 0; y < k; ++y) minor(x, y) = a(ri[x], ci[y]);
            c(static_cast<int>(r), static_cast<int>(s)) = k == 0 ? Scalar(1) : det_bareiss(minor);
        }
    }
    return c;
}

namespace {

void check_size(int n) {
    if (n < 0 || n > 14) throw std::invalid_argument("exterior algebra too large");
}

}  // namespace

SMatrix creation_operator(int n, int i) {
    check_size(n);
    int d = 1 << n;
    SMatrix m(d, d);
    for (int s = 0; s < d; ++s) {
        if (s >> i & 1) continue;
        int sign = std::popcount(static_cast<unsigned>(s) & ((1u << i) - 1)) % 2 ? -1 : 1;
        m(s | 1 << i, s) = Scalar(sign);
    }
    return m;
}

SMatrix annihilation_operator(int n, int i) {
    check_size(n);
    int d = 1 << n;
    SMatrix m(d, d);
    for (int s = 0; s < d; ++s) {
        if (!(s >> i & 1)) continue;
        int sign = std::popcount(static_cast<unsigned>(s) & ((1u << i) - 1)) % 2 ? -1 : 1;
        m(s & ~(1 << i), s) = Scalar(sign);
    }
    return m;
}

SMatrix parity_operator(int n) {
    check_size(n);
    int d = 1 << n;
    SMatrix m(d, d);
    for (int s = 0; s < d; ++s) m(s, s) = Scalar(std::popcount(static_cast<unsigned>(s)) % 2 ? -1 : 1);
    return m;
}

SMatrix clifford_action(const CKObject& v, const std::vector<Scalar>& x, int gamma_sign) {
    if (v.cat != Category::GD && v.cat != Category::D && v.cat != Category::B)
        throw std::invalid_argument("Clifford action needs a GD, D or B object");
    if (static_cast<int>(x.size()) != v.dim) throw std::invalid_argument("vector length mismatch");
    int n = v.rank;
    int d = 1 << n;
    SMatrix m(d, d);
    for (int i = 0; i < n; ++i) {
        if (!x[i].is_zero()) m = m + creation_operator(n, i) * x[i];
        if (!x[n + i].is_zero()) m = m + annihilation_operator(n, i) * x[n + i];
    }
    if (v.cat == Category::B && !x[2 * n].is_zero()) {
        Scalar inv_sqrt2(Rational(0), Rational(0), Rational(gamma_sign, 2), Rational(0));
        m = m + parity_operator(n) * (x[2 * n] * inv_sqrt2);
    }
    return m;
}

}  // namespace ck
