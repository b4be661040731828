#include "ck/pimenov.hpp"

#include <algorithm>
#include <sstream>
#include <cctype>
#include <stdexcept>

namespace ck {

std::vector<int> mask_indices(IotaMask m) {
    std::vector<int> out;
    for (int k = 1; m != 0; ++k, m >>= 1)
        if (m & 1) out.push_back(k);
    return out;
}

Pim::Pim(int arity, const Scalar& c) : arity_(arity) {
    if (!c.is_zero()) terms_.emplace_back(0, c);
}

Pim Pim::iota(int arity, int k) {
    if (k < 1 || k > arity) throw std::out_of_range("iota index outside arity");
    return monomial(arity, iota_bit(k), Scalar(1));
}

Pim Pim::monomial(int arity, IotaMask m, const Scalar& c) {
    Pim p(arity);
    if (!c.is_zero()) p.terms_.emplace_back(m, c);
    return p;
}

Scalar Pim::unit_part() const { return coeff(0); }

Scalar Pim::coeff(IotaMask m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, IotaMask k) { return t.first < k; });
    if (it != terms_.end() && it->first == m) return it->second;
    return {};
}

void Pim::add_term(IotaMask m, const Scalar& c) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, IotaMask k) { return t.first < k; });
    if (it != terms_.end() && it->first == m) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else if (!c.is_zero()) {
        terms_.insert(it, {m, c});
    }
}

static int join_arity(int a, int b) {
    if (a == b || b == 0) return a;
    if (a == 0) return b;
    throw std::invalid_argument("Pimenov arity mismatch");
}

Pim Pim::operator-() const {
    Pim r(arity_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, -c);
    return r;
}

Pim& Pim::operator+=(const Pim& o) {
    arity_ = join_arity(arity_, o.arity_);
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = o.terms_.begin(), be = o.terms_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == ae || b->first < a->first) {
            out.push_back(*b++);
        } else {
            Scalar s = a->second + b->second;
            if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Pim& Pim::operator-=(const Pim& o) { return *this += -o; }

Pim& Pim::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (s.is_one()) return *this;
    for (auto& t : terms_) t.second = t.second * s;
    return *this;
}

Pim operator*(const Pim& a, const Pim& b) {
    Pim r(join_arity(a.arity_, b.arity_));
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (a.terms_.size() == 1 && a.terms_[0].first == 0) {
        r.terms_ = b.terms_;
        return r *= a.terms_[0].second;
    }
    if (b.terms_.size() == 1 && b.terms_[0].first == 0) {
        r.terms_ = a.terms_;
        return r *= b.terms_[0].second;
    }
    std::vector<Pim::Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            if ((ma & mb) == 0) raw.emplace_back(ma | mb, ca * cb);
    std::sort(raw.begin(), raw.end(), [](const Pim::Term& x, const Pim::Term& y) { return x.first < y.first; });
    for (auto& t : raw) {
        if (!r.terms_.empty() && r.terms_.back().first == t.first) {
            r.terms_.back().second += t.second;
            if (r.terms_.back().second.is_zero()) r.terms_.pop_back();
        } else if (!t.second.is_zero()) {
            r.terms_.push_back(std::move(t));
        }
    }
    return r;
}

bool Pim::operator==(const Pim& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t k = 0; k < terms_.size(); ++k)
        if (terms_[k].first != o.terms_[k].first || terms_[k].second != o.terms_[k].second) return false;
    return true;
}

Pim Pim::inv() const {
    Scalar d0 = unit_part();
    if (d0.is_zero()) throw std::domain_error("Pimenov element with zero unit part is not invertible");
    Scalar d0i = d0.inv();
    // x = d0 (1 + N), N nilpotent with N^{n+1} = 0
    Pim nil = *this * d0i;
    nil.add_term(0, Scalar(-1));
    Pim sum(arity_, Scalar(1)), power(arity_, Scalar(1));
    for (int k = 1; k <= arity_ + 1; ++k) {
        power = power * nil;
        if (power.is_zero()) break;
        sum += (k % 2 ? -power : power);
    }
    return sum * d0i;
}

Pim Pim::conj() const {
    Pim r(arity_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, c.conj());
    return r;
}

Pim Pim::pow(unsigned e) const {
    Pim r(arity_, Scalar(1)), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

static std::string coef_str(const Scalar& c, bool& negative) {
    negative = false;
    if (c.is_rational()) {
        negative = sgn(c.re()) < 0;
        return rational_str(abs(c.re()));
    }
    return "(" + c.str() + ")";
}

std::string Pim::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        bool neg;
        std::string cs = coef_str(c, neg);
        std::string mono;
        for (int k : mask_indices(m)) mono += "I" + std::to_string(k);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (mono.empty())
            out += cs;
        else if (cs == "1")
            out += mono;
        else
            out += cs + "*" + mono;
    }
    return out;
}

Pim Pim::parse(const std::string& text, int arity) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    auto bad = [&] { throw std::invalid_argument("cannot parse Pimenov element '" + text + "'"); };
    if (s.empty()) bad();
    // split at top-level signs
    std::vector<std::pair<int, std::string>> parts;
    int depth = 0, sign = 1;
    std::string cur;
    for (std::size_t p = 0; p < s.size(); ++p) {
        char ch = s[p];
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (depth == 0 && (ch == '+' || ch == '-') && (p == 0 || s[p - 1] != '*')) {
            if (!cur.empty()) parts.emplace_back(sign, cur);
            else if (p != 0) bad();
            cur.clear();
            sign = ch == '-' ? -1 : 1;
            continue;
        }
        cur += ch;
    }
    if (depth != 0 || cur.empty()) bad();
    parts.emplace_back(sign, cur);

    std::vector<std::pair<IotaMask, Scalar>> terms;
    int top = 0;
    for (auto& [sg, t] : parts) {
        std::size_t close = t.rfind(')');
        std::size_t at = t.find('I', close == std::string::npos ? 0 : close);
        std::string coef = t.substr(0, at == std::string::npos ? t.size() : at);
        IotaMask m = 0;
        if (at != std::string::npos) {
            std::string mono = t.substr(at);
            std::size_t q = 0;
            while (q < mono.size()) {
                if (mono[q] != 'I') bad();
                std::size_t e = ++q;
                while (e < mono.size() && std::isdigit(static_cast<unsigned char>(mono[e]))) ++e;
                if (e == q) bad();
                int k = std::stoi(mono.substr(q, e - q));
                if (k < 1 || k > kMaxArity || (m & iota_bit(k))) bad();
                m |= iota_bit(k);
                top = std::max(top, k);
                q = e;
            }
        }
        if (!coef.empty() && coef.back() == '*') coef.pop_back();
        if (coef.size() >= 2 && coef.front() == '(' && coef.back() == ')') coef = coef.substr(1, coef.size() - 2);
        Scalar c = coef.empty() ? Scalar(1) : Scalar::parse(coef);
        terms.emplace_back(m, sg < 0 ? -c : c);
    }
    if (arity == 0) arity = top;
    if (top > arity) bad();
    Pim out(arity);
    for (auto& [m, c] : terms) out += monomial(arity, m, c);
    return out;
}

JValuation JValuation::ones(int n) { return JValuation(std::vector<JValue>(n)); }

JValuation JValuation::iota_at(int n, const std::vector<int>& idx) {
    JValuation v = ones(n);
    for (int k : idx) v.at(k).kind = JKind::Iota;
    return v;
}

JValuation JValuation::parse(const std::string& text) {
    std::vector<JValue> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string t;
        for (char ch : item)
            if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
        JValue v;
        if (t == "1")
            v.kind = JKind::One;
        else if (t == "i")
            v.kind = JKind::Imag;
        else if (t == "iota" || t == "I")
            v.kind = JKind::Iota;
        else {
            v.kind = JKind::Custom;
            v.custom = Scalar::parse(t);
        }
        out.push_back(v);
    }
    if (!text.empty() && text.back() == ',') throw std::invalid_argument("trailing comma in valuation");
    return JValuation(std::move(out));
}

std::vector<int> JValuation::iota_indices() const {
    std::vector<int> out;
    for (int k = 1; k <= size(); ++k)
        if (is_iota(k)) out.push_back(k);
    return out;
}

Pim JValuation::j(int k) const {
    const JValue& v = at(k);
    switch (v.kind) {
        case JKind::One: return Pim(size(), Scalar(1));
        case JKind::Imag: return Pim(size(), Scalar::i());
        case JKind::Iota: return Pim::iota(size(), k);
        case JKind::Custom: return Pim(size(), v.custom);
    }
    return Pim(size());
}

std::string JValuation::str() const {
    std::string out;
    for (int k = 1; k <= size(); ++k) {
        if (k > 1) out += ",";
        switch (at(k).kind) {
            case JKind::One: out += "1"; break;
            case JKind::Imag: out += "i"; break;
            case JKind::Iota: out += "iota"; break;
            case JKind::Custom: out += at(k).custom.str(); break;
        }
    }
    return out;
}

JMonomial::JMonomial(std::map<int, int> e) {
    for (auto [k, p] : e) {
        if (p < 0) throw std::invalid_argument("negative exponent in j-monomial");
        if (p > 0) e_[k] = p;
    }
}

JMonomial JMonomial::range(int a, int b, int power) {
    std::map<int, int> e;
    for (int l = a; l <= b; ++l) e[l] = power;
    return JMonomial(e);
}

JMonomial JMonomial::operator*(const JMonomial& o) const {
    std::map<int, int> e = e_;
    for (auto [k, p] : o.e_) e[k] += p;
    return JMonomial(e);
}

std::string JMonomial::str() const {
    if (e_.empty()) return "1";
    std::string out;
    for (auto [k, p] : e_) {
        if (!out.empty()) out += "*";
        out += "j" + std::to_string(k);
        if (p != 1) out += "^" + std::to_string(p);
    }
    return out;
}

bool JMonomial::killed_by(const JValuation& v) const {
    for (auto [k, p] : e_)
        if (k <= v.size() && v.is_iota(k) && p >= 2) return true;
    return false;
}

JMonomial JMonomial::residual(const JValuation& v) const {
    std::map<int, int> e;
    for (auto [k, p] : e_)
        if (!(k <= v.size() && v.is_iota(k))) e[k] = p;
    return JMonomial(e);
}

Pim jmono_eval(const JMonomial& m, const JValuation& v) {
    Pim r(v.size(), Scalar(1));
    for (auto [k, p] : m.exponents()) {
        if (k < 1 || k > v.size()) throw std::out_of_range("j-monomial index outside valuation");
        if (v.is_iota(k) && p >= 2) return Pim(v.size());
        r = r * v.j(k).pow(p);
    }
    return r;
}

Pim jprod(int a, int b, int power, const JValuation& v) {
    return jmono_eval(JMonomial::range(a, b, power), v);
}

Pim interval_product(int mu, int nu, const JValuation& v) {
    return jprod(std::min(mu, nu), std::max(mu, nu) - 1, 1, v);
}

}  // namespace ck
