#include "ck/rootsys.hpp"

#include "ck/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ck {

namespace {

Pim J2(int a, int b, const JValuation& v) { return jprod(a, b, 2, v); }

int so_m(int n) { return n % 2 == 0 ? n / 2 : (n + 1) / 2; }

Pim so_c(int k, const JValuation& v) { return v.j(2 * k - 1); }

PMatrix X(int a, int b, int n, const JValuation& v) { return so_generator(a, b, n, v); }

// 1-based unit matrix A(a,b) of size N
PMatrix A(int N, int a, int b, int ar) { return PMatrix::unit(N, a - 1, b - 1, ar); }

Combination single(const Pim& c, const Element& e) {
    if (c.is_zero()) return {};
    return {{c, e}};
}

Combination negate(Combination c) {
    for (auto& t : c) t.first = -t.first;
    return c;
}

}  // namespace

// ---------------------------------------------------------------- labels

int RootLabel::coef(int k) const {
    for (const auto& [i, c] : parts)
        if (i == k) return c;
    return 0;
}

RootLabel RootLabel::operator-() const {
    RootLabel r = *this;
    for (auto& p : r.parts) p.second = -p.second;
    return r;
}

std::string RootLabel::str() const {
    std::string out;
    for (const auto& [i, c] : parts) {
        if (c < 0) out += "-";
        else if (!out.empty()) out += "+";
        if (std::abs(c) != 1) out += std::to_string(std::abs(c));
        out += "e" + std::to_string(i);
    }
    return out;
}

RootLabel RootLabel::parse(const std::string& text) {
    RootLabel r;
    std::size_t p = 0;
    auto fail = [&] { throw std::invalid_argument("bad root label: " + text); };
    while (p < text.size()) {
        int sign = 1;
        if (text[p] == '+' || text[p] == '-') {
            sign = text[p] == '-' ? -1 : 1;
            ++p;
        }
        int mult = 1;
        if (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
            mult = text[p] - '0';
            ++p;
        }
        if (p >= text.size() || text[p] != 'e') fail();
        ++p;
        std::size_t q = p;
        while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q]))) ++q;
        if (q == p) fail();
        int idx = std::stoi(text.substr(p, q - p));
        p = q;
        r.parts.emplace_back(idx, sign * mult);
    }
    if (r.parts.empty()) fail();
    std::sort(r.parts.begin(), r.parts.end());
    for (std::size_t i = 1; i < r.parts.size(); ++i)
        if (r.parts[i].first == r.parts[i - 1].first) fail();
    return r;
}

RootLabel unitary_root(int a, int b) {
    RootLabel r;
    r.parts = {{a, 1}, {b, -1}};
    std::sort(r.parts.begin(), r.parts.end());
    return r;
}

bool Element::operator<(const Element& o) const {
    if (cartan != o.cartan) return cartan;
    if (cartan) return k < o.k;
    return root < o.root;
}

std::string Element::str() const { return cartan ? "H" + std::to_string(k) : "E[" + root.str() + "]"; }

Element Element::parse(const std::string& text) {
    if (!text.empty() && text[0] == 'H') return H(std::stoi(text.substr(1)));
    std::string t = text;
    if (t.size() > 3 && t[0] == 'E' && t[1] == '[' && t.back() == ']') t = t.substr(2, t.size() - 3);
    return E(RootLabel::parse(t));
}

// ---------------------------------------------------------------- Cartan

int cartan_rank(GroupKind kind, int n) {
    if (is_so(kind)) return so_m(n);
    if (kind == GroupKind::U_unitary) return n + 1;
    return n;
}

std::vector<int> cartan_indices(GroupKind kind, int n) {
    std::vector<int> r;
    int lo = kind == GroupKind::U_unitary ? 0 : 1;
    int hi = is_so(kind) ? so_m(n) : n;
    for (int k = lo; k <= hi; ++k) r.push_back(k);
    return r;
}

PMatrix cartan_element(GroupKind kind, int k, int n, const JValuation& v) {
    int ar = v.size();
    switch (kind) {
        case GroupKind::B_soOdd:
        case GroupKind::D_soEven:
            return Scalar(0, -1, 0, 0) * X(2 * k - 2, 2 * k - 1, n, v);
        case GroupKind::U_unitary:
            return PMatrix::unit(n + 1, k, k, ar);
        case GroupKind::SU_special:
        case GroupKind::A_sl:
            return PMatrix::unit(n + 1, k - 1, k - 1, ar) - PMatrix::unit(n + 1, k, k, ar);
        case GroupKind::C_sp:
            return A(2 * n, k, k, ar) - A(2 * n, k + n, k + n, ar);
    }
    throw std::logic_error("unknown kind");
}

CartanBasis cartan_basis(GroupKind kind, int n, const JValuation& v) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    CartanBasis b{kind, n, cartan_indices(kind, n), {}};
    for (int k : b.indices) b.elements.push_back({"H" + std::to_string(k), cartan_element(kind, k, n, v)});
    check_cartan_commuting(b);
    return b;
}

void check_cartan_commuting(const CartanBasis& b) {
    for (std::size_t i = 0; i < b.elements.size(); ++i)
        for (std::size_t j = i + 1; j < b.elements.size(); ++j)
            if (!mat_commutator(b.elements[i].m, b.elements[j].m).is_zero())
                throw std::logic_error("Cartan elements " + b.elements[i].label + ", " + b.elements[j].label +
                                       " do not commute");
}

// ---------------------------------------------------------------- roots

std::vector<RootLabel> root_system(GroupKind kind, int n) {
    std::vector<RootLabel> out;
    if (is_unitary(kind)) {
        for (int a = 0; a <= n; ++a)
            for (int b = 0; b <= n; ++b)
                if (a != b) out.push_back(unitary_root(a, b));
        return out;
    }
    int m = cartan_rank(kind, n);
    for (int r = 1; r <= m; ++r)
        for (int s = r + 1; s <= m; ++s)
            for (int a : {1, -1})
                for (int b : {1, -1}) out.push_back(RootLabel{{{r, a}, {s, b}}});
    if (kind == GroupKind::D_soEven) return out;
    int unit = kind == GroupKind::C_sp ? 2 : 1;
    for (int k = 1; k <= m; ++k)
        for (int s : {1, -1}) out.push_back(RootLabel{{{k, s * unit}}});
    return out;
}

bool is_root(GroupKind kind, int n, const RootLabel& r) {
    const auto& p = r.parts;
    if (is_unitary(kind))
        return p.size() == 2 && p[0].first >= 0 && p[1].first <= n && p[0].first < p[1].first &&
               p[0].second * p[1].second == -1 && std::abs(p[0].second) == 1;
    int m = cartan_rank(kind, n);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].first < 1 || p[i].first > m) return false;
        if (i && p[i].first <= p[i - 1].first) return false;
    }
    if (p.size() == 2) return std::abs(p[0].second) == 1 && std::abs(p[1].second) == 1;
    if (p.size() != 1) return false;
    if (kind == GroupKind::B_soOdd) return std::abs(p[0].second) == 1;
    if (kind == GroupKind::C_sp) return std::abs(p[0].second) == 2;
    return false;
}

RootVector root_vector(GroupKind kind, const RootLabel& label, int n, const JValuation& v, RootModel model) {
    if (!is_root(kind, n, label)) throw std::invalid_argument("not a root of " + kind_name(kind) + ": " + label.str());
    int ar = v.size();
    const auto& p = label.parts;
    if (is_so(kind)) {
        Scalar I = Scalar::i();
        if (p.size() == 1) {
            int k = p[0].first, s = p[0].second;
            return {label, -X(2 * k - 2, n, n, v) + (Scalar(s) * I) * (so_c(k, v) * X(2 * k - 1, n, n, v))};
        }
        int r = p[0].first, a = p[0].second, s = p[1].first, b = p[1].second;
        Pim cr = so_c(r, v), cs = so_c(s, v);
        PMatrix m = -(cs * X(2 * r - 2, 2 * s - 2, n, v)) + (Scalar(b) * I) * X(2 * r - 2, 2 * s - 1, n, v);
        PMatrix tail = Scalar(b) * (cr * X(2 * r - 1, 2 * s - 1, n, v)) + I * ((cr * cs) * X(2 * r - 1, 2 * s - 2, n, v));
        if (a == 1) m += tail;
        else m -= tail;
        return {label, m};
    }
    if (kind == GroupKind::C_sp) {
        int N = 2 * n;
        if (p.size() == 1) {
            int k = p[0].first;
            return {label, p[0].second > 0 ? A(N, k, k + n, ar) : A(N, k + n, k, ar)};
        }
        int k = p[0].first, a = p[0].second, m = p[1].first, b = p[1].second;
        Pim q = J2(k + 1, m, v);
        PMatrix r;
        if (a > 0 && b < 0) r = q * A(N, k, m, ar) - A(N, m + n, k + n, ar);
        else if (a < 0 && b > 0) r = A(N, m, k, ar) - q * A(N, k + n, m + n, ar);
        else if (a < 0 && b < 0) r = q * A(N, k + n, m, ar) + A(N, m + n, k, ar);
        else r = q * A(N, k, m + n, ar) + A(N, m, k + n, ar);
        return {label, r};
    }
    // unitary families: e_a - e_b
    int a = p[0].second > 0 ? p[0].first : p[1].first;
    int b = p[0].second > 0 ? p[1].first : p[0].first;
    PMatrix e = PMatrix::unit(n + 1, a, b, ar);
    if (model == RootModel::Balanced) return {label, interval_product(a + 1, b + 1, v) * e};
    if (a < b) return {label, J2(a + 1, b, v) * e};
    return {label, e};
}

std::vector<Element> cartan_weyl_basis(GroupKind kind, int n) {
    std::vector<Element> out;
    for (int k : cartan_indices(kind, n)) out.push_back(Element::H(k));
    for (auto& r : root_system(kind, n)) out.push_back(Element::E(r));
    return out;
}

PMatrix element_matrix(GroupKind kind, const Element& e, int n, const JValuation& v, RootModel model) {
    if (e.cartan) {
        auto idx = cartan_indices(kind, n);
        if (std::find(idx.begin(), idx.end(), e.k) == idx.end())
            throw std::invalid_argument("no Cartan element H" + std::to_string(e.k));
        return cartan_element(kind, e.k, n, v);
    }
    return root_vector(kind, e.root, n, v, model).matrix;
}

Pim root_value(GroupKind kind, const RootLabel& r, int k, int n, const JValuation& v) {
    int ar = v.size();
    switch (kind) {
        case GroupKind::B_soOdd:
        case GroupKind::D_soEven:
            return Scalar(r.coef(k)) * so_c(k, v);
        case GroupKind::C_sp:
        case GroupKind::U_unitary:
            return Pim(ar, Scalar(r.coef(k)));
        case GroupKind::SU_special:
        case GroupKind::A_sl:
            return Pim(ar, Scalar(r.coef(k - 1) - r.coef(k)));
    }
    (void)n;
    return Pim(ar);
}

// ---------------------------------------------------------------- closed forms

namespace {

RootLabel label_of(const std::vector<int>& w, int lo) {
    RootLabel r;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0) r.parts.emplace_back(static_cast<int>(i) + lo, w[i]);
    return r;
}

std::vector<int> weight_of(const RootLabel& r, int size, int lo) {
    std::vector<int> w(size, 0);
    for (const auto& [i, c] : r.parts) w[i - lo] += c;
    return w;
}

Combination so_bracket(GroupKind kind, const RootLabel& a, const RootLabel& b, int n, const JValuation& v) {
    int m = so_m(n);
    auto c = [&](int k) { return so_c(k, v); };
    auto J = [&](int x, int y) { return J2(x, y, v); };
    auto wa = weight_of(a, m, 1), wb = weight_of(b, m, 1);
    std::vector<int> w(m);
    bool zero = true, big = false;
    for (int i = 0; i < m; ++i) {
        w[i] = wa[i] + wb[i];
        zero = zero && w[i] == 0;
        big = big || std::abs(w[i]) > 1;
    }
    if (zero) {
        if (a.parts.size() == 1) {
            auto [k, e] = a.parts[0];
            return single(Scalar(-2 * e) * c(k) * J(2 * k, n), Element::H(k));
        }
        auto [r, e] = a.parts[0];
        auto [s, d] = a.parts[1];
        Pim f = Scalar(-4) * c(r) * c(s) * J(2 * r, 2 * s - 2);
        Combination out;
        for (auto& t : single(f * Scalar(e) * c(s), Element::H(r))) out.push_back(t);
        for (auto& t : single(f * Scalar(d) * c(r), Element::H(s))) out.push_back(t);
        return out;
    }
    RootLabel t = label_of(w, 1);
    if (big || !is_root(kind, n, t)) return {};
    Element Et = Element::E(t);
    if (a.parts.size() == 1 && b.parts.size() == 1) {
        int r = a.parts[0].first, s = b.parts[0].first;
        if (r < s) return single(-(c(s) * J(2 * s, n)), Et);
        return single(c(r) * J(2 * r, n), Et);
    }
    if (a.parts.size() == 2 && b.parts.size() == 1) return negate(so_bracket(kind, b, a, n, v));
    if (a.parts.size() == 1) {
        int k = a.parts[0].first;
        int other = t.parts[0].first;
        if (k < other) return single(Scalar(2) * c(other) * J(2 * k - 1, 2 * other - 2), Et);
        return single(Scalar(-2) * c(k), Et);
    }
    std::set<int> sa{a.parts[0].first, a.parts[1].first}, sb{b.parts[0].first, b.parts[1].first};
    int s = 0, r = 0, mm = 0;
    for (int x : sa)
        if (sb.count(x)) s = x;
    for (int x : sa)
        if (x != s) r = x;
    for (int x : sb)
        if (x != s) mm = x;
    Pim coef;
    if (r < s && s < mm) coef = Scalar(2) * c(s);
    else if (r < mm && mm < s) coef = Scalar(-2) * c(mm) * J(2 * mm, 2 * s - 1);
    else if (s < r && r < mm) coef = Scalar(-2) * c(r) * J(2 * s - 1, 2 * r - 2);
    else if (s < mm && mm < r) coef = Scalar(2) * c(mm) * J(2 * s - 1, 2 * mm - 2);
    else if (mm < r && r < s) coef = Scalar(2) * c(r) * J(2 * r, 2 * s - 1);
    else coef = Scalar(-2) * c(s);
    return single(coef, Et);
}

Combination sp_bracket(const RootLabel& a, const RootLabel& b, int n, const JValuation& v) {
    int ar = v.size();
    auto J = [&](int x, int y) { return J2(x, y, v); };
    auto wa = weight_of(a, n, 1), wb = weight_of(b, n, 1);
    std::vector<int> w(n);
    bool zero = true;
    for (int i = 0; i < n; ++i) {
        w[i] = wa[i] + wb[i];
        zero = zero && w[i] == 0;
    }
    if (zero) {
        if (a.parts.size() == 1) {
            auto [k, e] = a.parts[0];
            return single(Pim(ar, Scalar(e > 0 ? 1 : -1)), Element::H(k));
        }
        auto [k, x] = a.parts[0];
        auto [m, y] = a.parts[1];
        Pim f = J(k + 1, m);
        Combination out;
        for (auto& t : single(f * Scalar(x), Element::H(k))) out.push_back(t);
        for (auto& t : single(f * Scalar(y), Element::H(m))) out.push_back(t);
        return out;
    }
    RootLabel t = label_of(w, 1);
    if (!is_root(GroupKind::C_sp, n, t)) return {};
    Element Et = Element::E(t);
    bool la = a.parts.size() == 1, lb = b.parts.size() == 1;
    if (la && lb) return {};
    if (!la && !lb) {
        if (t.parts.size() == 1) {
            // a = x e_k + y e_m, b = -x e_k + y e_m
            int mi = t.parts[0].first;
            int yv = t.parts[0].second / 2;
            int ki = a.parts[0].first == mi ? a.parts[1].first : a.parts[0].first;
            int x = a.coef(ki);
            (void)yv;
            return single(Scalar(-2 * x) * J(std::min(ki, mi) + 1, std::max(ki, mi)), Et);
        }
        // share exactly one index k with opposite signs
        int k = 0;
        for (const auto& [i, c] : a.parts)
            if (b.coef(i) == -c) k = i;
        int x = a.coef(k);
        int mi = 0, pi = 0;
        for (const auto& [i, c] : a.parts)
            if (i != k) mi = i;
        for (const auto& [i, c] : b.parts)
            if (i != k) pi = i;
        int bb = a.coef(mi), cc = b.coef(pi);
        int sgn;
        if (x == 1) sgn = (bb == 1 && cc == -1) ? 1 : -1;
        else sgn = -((cc == 1 && bb == -1) ? 1 : -1);
        Pim jp;
        if (k < mi && k < pi) jp = J(k + 1, std::min(mi, pi));
        else if (k > mi && k > pi) jp = J(std::max(mi, pi) + 1, k);
        else jp = Pim(ar, Scalar(1));
        return single(Scalar(sgn) * jp, Et);
    }
    if (la) return negate(sp_bracket(b, a, n, v));
    // a short = -x e_k + y e_m, b long = 2x e_k
    int k = b.parts[0].first;
    int mi = a.parts[0].first == k ? a.parts[1].first : a.parts[0].first;
    return single(Pim(ar, Scalar(a.coef(mi))), Et);
}

std::pair<int, int> ends(const RootLabel& r) {
    return r.parts[0].second > 0 ? std::make_pair(r.parts[0].first, r.parts[1].first)
                                 : std::make_pair(r.parts[1].first, r.parts[0].first);
}

Combination unitary_bracket(GroupKind kind, const RootLabel& x, const RootLabel& y, int n, const JValuation& v) {
    auto J = [&](int a, int b) { return J2(a, b, v); };
    auto [k, m] = ends(x);
    auto [p, q] = ends(y);
    if (k == q && m == p) {
        if (k > m) return negate(unitary_bracket(kind, y, x, n, v));
        Pim f = J(k + 1, m);
        Combination out;
        if (kind == GroupKind::U_unitary) {
            out.push_back({f, Element::H(k)});
            out.push_back({-f, Element::H(m)});
        } else {
            for (int r = k + 1; r <= m; ++r) out.push_back({f, Element::H(r)});
        }
        return out;
    }
    if (m == p && k != q) {
        Element Et = Element::E(unitary_root(k, q));
        int ar = v.size();
        if ((k < m && m < q) || (q < m && m < k)) return single(Pim(ar, Scalar(1)), Et);
        if (m > k && m > q) return single(J(1 + std::max(k, q), m), Et);
        return single(J(m + 1, std::min(k, q)), Et);
    }
    if (q == k && p != m) return negate(unitary_bracket(kind, y, x, n, v));
    return {};
}

}  // namespace

Combination predicted_bracket(GroupKind kind, const Element& x, const Element& y, int n, const JValuation& v) {
    if (x.cartan && y.cartan) return {};
    if (!x.cartan && y.cartan) return negate(predicted_bracket(kind, y, x, n, v));
    if (x.cartan) return single(root_value(kind, y.root, x.k, n, v), y);
    if (is_so(kind)) return so_bracket(kind, x.root, y.root, n, v);
    if (kind == GroupKind::C_sp) return sp_bracket(x.root, y.root, n, v);
    return unitary_bracket(kind, x.root, y.root, n, v);
}

PMatrix predicted_commutator(GroupKind kind, const Element& x, const Element& y, int n, const JValuation& v,
                             RootModel model) {
    int N = matrix_size(kind, n);
    PMatrix out(N, N, v.size());
    for (const auto& [c, e] : predicted_bracket(kind, x, y, n, v)) out += c * element_matrix(kind, e, n, v, model);
    return out;
}

std::string combination_str(const Combination& c) {
    if (c.empty()) return "0";
    std::string out;
    for (const auto& [coef, e] : c) {
        if (!out.empty()) out += " + ";
        out += "(" + coef.str() + ")" + e.str();
    }
    return out;
}

CwReport verify_cartan_weyl(GroupKind kind, int n, const JValuation& v, RootModel model, const Predictor& predictor) {
    CwReport rep{kind, n, v, 0, {}};
    auto basis = cartan_weyl_basis(kind, n);
    std::map<Element, PMatrix> mats;
    for (const auto& e : basis) mats.emplace(e, element_matrix(kind, e, n, v, model));
    int N = matrix_size(kind, n);
    for (const auto& x : basis)
        for (const auto& y : basis) {
            ++rep.pairs;
            PMatrix computed = mat_commutator(mats.at(x), mats.at(y));
            PMatrix predicted(N, N, v.size());
            if (predictor) {
                predicted = predictor(x, y);
            } else {
                for (const auto& [c, e] : predicted_bracket(kind, x, y, n, v)) predicted += c * mats.at(e);
            }
            if (computed != predicted) rep.mismatches.push_back({x.str(), y.str(), computed, predicted});
        }
    return rep;
}

// ---------------------------------------------------------------- Dynkin data

std::vector<std::vector<int>> simple_roots(GroupKind kind, int n) {
    std::vector<std::vector<int>> out;
    if (is_unitary(kind)) {
        for (int k = 1; k <= n; ++k) {
            std::vector<int> r(n + 1, 0);
            r[k - 1] = 1;
            r[k] = -1;
            out.push_back(r);
        }
        return out;
    }
    int m = cartan_rank(kind, n);
    for (int k = 1; k < m; ++k) {
        std::vector<int> r(m, 0);
        r[k - 1] = 1;
        r[k] = -1;
        out.push_back(r);
    }
    std::vector<int> last(m, 0);
    if (kind == GroupKind::B_soOdd) last[m - 1] = 1;
    else if (kind == GroupKind::C_sp) last[m - 1] = 2;
    else {
        if (m < 2) return out;
        last[m - 2] = 1;
        last[m - 1] = 1;
    }
    out.push_back(last);
    return out;
}

namespace {
int dot(const std::vector<int>& a, const std::vector<int>& b) {
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}
}  // namespace

CartanMatrix cartan_matrix(GroupKind kind, int n) {
    auto sr = simple_roots(kind, n);
    CartanMatrix cm;
    int r = static_cast<int>(sr.size());
    cm.a.assign(r, std::vector<int>(r, 0));
    for (int k = 0; k < r; ++k)
        for (int m = 0; m < r; ++m) cm.a[k][m] = 2 * dot(sr[k], sr[m]) / dot(sr[k], sr[k]);
    return cm;
}

long CartanMatrix::det() const {
    int r = size();
    if (r == 0) return 1;
    SMatrix m(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m(i, j) = Scalar(static_cast<long>(a[i][j]));
    return det_bareiss(m).re().get_num().get_si();
}

bool CartanMatrix::check_properties(std::string* why) const {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    int r = size();
    for (int k = 0; k < r; ++k) {
        if (a[k][k] != 2) return fail("diagonal entry is not 2");
        for (int m = 0; m < r; ++m) {
            if (m == k) continue;
            if (a[k][m] > 0 || a[k][m] < -4) return fail("off-diagonal entry outside {0,...,-4}");
            if (a[k][m] * a[m][k] >= 4) return fail("A_km A_mk >= 4");
            if ((a[k][m] == 0) != (a[m][k] == 0)) return fail("zero pattern not symmetric");
        }
    }
    if (det() <= 0) return fail("determinant not positive");
    return true;
}

std::string CartanMatrix::str() const {
    std::ostringstream os;
    for (const auto& row : a) {
        os << "[";
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
        os << "]\n";
    }
    return os.str();
}

DynkinDiagram dynkin_diagram(GroupKind kind, int n) {
    auto sr = simple_roots(kind, n);
    auto cm = cartan_matrix(kind, n);
    DynkinDiagram d;
    int r = cm.size();
    char letter = is_unitary(kind) ? 'A' : kind == GroupKind::B_soOdd ? 'B' : kind == GroupKind::C_sp ? 'C' : 'D';
    d.type = std::string(1, letter) + std::to_string(is_unitary(kind) ? n : cartan_rank(kind, n));
    for (const auto& s : sr) d.weights.push_back(dot(s, s));
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b) {
            int mult = cm.a[a][b] * cm.a[b][a];
            if (!mult) continue;
            int longer = d.weights[a] == d.weights[b] ? -1 : (d.weights[a] > d.weights[b] ? a : b);
            d.edges.push_back({a, b, mult, longer});
        }
    return d;
}

std::string DynkinDiagram::ascii() const {
    int r = static_cast<int>(weights.size());
    if (r == 0) return "(empty)\n";
    int fork = (type[0] == 'D' && r >= 3) ? r - 3 : -1;
    auto link = [&](int a, int b) -> std::string {
        for (const auto& e : edges)
            if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) {
                if (e.multiplicity == 1) return "---";
                std::string bar(1, e.multiplicity == 2 ? '=' : '#');
                if (e.longer == a) return bar + ">" + bar;
                return bar + "<" + bar;
            }
        return "   ";
    };
    std::string top, labels;
    int chain = fork >= 0 ? fork + 2 : r;  // fork: nodes 0..fork+1 on the line, last node below
    for (int i = 0; i < chain; ++i) {
        if (i) top += link(i - 1, i);
        top += "o";
        std::string num = std::to_string(i + 1);
        labels += num + std::string(i + 1 < chain ? 4 - num.size() : 0, ' ');
    }
    std::string out = type + "\n" + top + "\n";
    if (fork >= 0) {
        std::string pad(static_cast<std::size_t>(fork) * 4, ' ');
        out += pad + "|\n" + pad + "o " + std::to_string(r) + "\n";
    }
    out += labels + "\n";
    return out;
}

}  // namespace ck
