#include "ck/scalar.hpp"

#include <cctype>
#include <functional>

namespace ck {

Scalar::Scalar(Rational a, Rational b, Rational c, Rational d)
    : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    // mpq_class(p, q) is not reduced on construction
    for (auto& q : c_) q.canonicalize();
}

Scalar::Scalar(const Rational& r) : c_{r, 0, 0, 0} { c_[0].canonicalize(); }

bool Scalar::is_zero() const {
    return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool Scalar::is_one() const { return c_[0] == 1 && is_rational(); }

bool Scalar::is_rational() const {
    return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

Scalar Scalar::operator-() const {
    Scalar r;
    for (int k = 0; k < 4; ++k)
        if (sgn(c_[k]) != 0) r.c_[k] = -c_[k];
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (int k = 0; k < 4; ++k)
        if (sgn(o.c_[k]) != 0) c_[k] += o.c_[k];
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    for (int k = 0; k < 4; ++k)
        if (sgn(o.c_[k]) != 0) c_[k] -= o.c_[k];
    return *this;
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    if (x.is_rational()) {
        if (sgn(x.c_[0]) == 0) return {};
        Scalar r;
        for (int k = 0; k < 4; ++k)
            if (sgn(y.c_[k]) != 0) r.c_[k] = x.c_[0] * y.c_[k];
        return r;
    }
    if (y.is_rational()) return y * x;
    const auto& [a, b, c, d] = x.c_;
    const auto& [e, f, g, h] = y.c_;
    Scalar r;
    r.c_[0] = a * e - b * f + 2 * (c * g - d * h);
    r.c_[1] = a * f + b * e + 2 * (c * h + d * g);
    r.c_[2] = a * g + c * e - b * h - d * f;
    r.c_[3] = a * h + d * e + b * g + c * f;
    return r;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

bool Scalar::operator==(const Scalar& o) const {
    for (int k = 0; k < 4; ++k)
        if (c_[k] != o.c_[k]) return false;
    return true;
}

bool Scalar::lex_less(const Scalar& o) const {
    for (int k = 0; k < 4; ++k) {
        int c = cmp(c_[k], o.c_[k]);
        if (c != 0) return c < 0;
    }
    return false;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero scalar");
    if (is_rational()) return Scalar(Rational(1) / c_[0]);
    const auto& [a, b, c, d] = c_;
    // columns: images of the basis under multiplication by *this
    Rational m[4][5] = {
        {a, -b, 2 * c, -2 * d, 1},
        {b, a, 2 * d, 2 * c, 0},
        {c, -d, a, -b, 0},
        {d, c, b, a, 0},
    };
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        while (sgn(m[piv][col]) == 0) ++piv;
        if (piv != col)
            for (int k = 0; k < 5; ++k) std::swap(m[piv][k], m[col][k]);
        Rational p = m[col][col];
        for (int k = col; k < 5; ++k) m[col][k] /= p;
        for (int r = 0; r < 4; ++r) {
            if (r == col || sgn(m[r][col]) == 0) continue;
            Rational f = m[r][col];
            for (int k = col; k < 5; ++k) m[r][k] -= f * m[col][k];
        }
    }
    return Scalar(m[0][4], m[1][4], m[2][4], m[3][4]);
}

Scalar Scalar::conj() const { return Scalar(c_[0], -c_[1], c_[2], -c_[3]); }

std::string rational_str(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

std::string Scalar::str() const {
    static const char* unit[4] = {"", "i", "s2", "i*s2"};
    std::string out;
    for (int k = 0; k < 4; ++k) {
        int s = sgn(c_[k]);
        if (s == 0) continue;
        Rational mag = abs(c_[k]);
        if (out.empty())
            out += s < 0 ? "-" : "";
        else
            out += s < 0 ? " - " : " + ";
        if (k == 0)
            out += rational_str(mag);
        else if (mag == 1)
            out += unit[k];
        else
            out += rational_str(mag) + "*" + unit[k];
    }
    return out.empty() ? "0" : out;
}

namespace {

[[noreturn]] void bad_scalar(std::string_view t) {
    throw std::invalid_argument("cannot parse scalar: '" + std::string(t) + "'");
}

Scalar parse_term(std::string_view term, std::string_view whole) {
    Rational coef = 1;
    bool has_i = false, has_s2 = false, any = false;
    std::size_t pos = 0;
    while (pos <= term.size()) {
        std::size_t star = term.find('*', pos);
        std::string_view f = term.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos);
        if (f.empty()) bad_scalar(whole);
        if (f == "i") {
            if (has_i) bad_scalar(whole);
            has_i = true;
        } else if (f == "s2") {
            if (has_s2) bad_scalar(whole);
            has_s2 = true;
        } else {
            for (char ch : f)
                if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/') bad_scalar(whole);
            if (f.front() == '/' || f.back() == '/') bad_scalar(whole);
            Rational r;
            if (r.set_str(std::string(f), 10) != 0) bad_scalar(whole);
            if (sgn(r.get_den()) == 0) bad_scalar(whole);
            r.canonicalize();
            coef *= r;
        }
        any = true;
        if (star == std::string_view::npos) break;
        pos = star + 1;
    }
    if (!any) bad_scalar(whole);
    int slot = (has_i ? 1 : 0) + (has_s2 ? 2 : 0);
    Rational z = 0;
    return Scalar(slot == 0 ? coef : z, slot == 1 ? coef : z, slot == 2 ? coef : z, slot == 3 ? coef : z);
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) bad_scalar(text);
    Scalar total;
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            bad_scalar(text);
        }
        std::size_t end = s.find_first_of("+-", pos);
        std::string_view term(s.data() + pos, (end == std::string::npos ? s.size() : end) - pos);
        Scalar t = parse_term(term, text);
        total += sign < 0 ? -t : t;
        pos = end == std::string::npos ? s.size() : end;
        first = false;
    }
    return total;
}

std::size_t Scalar::hash() const {
    std::size_t h = 0;
    for (const auto& q : c_) {
        std::size_t v = std::hash<std::string>{}(q.get_str());
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace ck
