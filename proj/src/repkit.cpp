#include "ck/repkit.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <deque>
#include <map>
#include <stdexcept>

namespace ck {

namespace {

std::size_t initial_cap() {
    if (const char* e = std::getenv("CK_ALGEBRA_MAX_DIM")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(e, &end, 10);
        if (end != e && v > 0) return static_cast<std::size_t>(v);
    }
    return 1024;
}

std::atomic<std::size_t>& cap_ref() {
    static std::atomic<std::size_t> cap{initial_cap()};
    return cap;
}

void check_exterior(int rank) {
    if (rank > 20 || (std::size_t{1} << rank) > max_exterior_dim())
        throw std::length_error("exterior algebra of rank " + std::to_string(rank) + " exceeds the dimension cap");
}

SparseVec to_sparse(const std::vector<Scalar>& v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s.emplace_back(i, v[i]);
    return s;
}

std::vector<Scalar> mat_vec(const SMatrix& m, const std::vector<Scalar>& x) {
    std::vector<Scalar> y(m.rows());
    for (int j = 0; j < m.cols(); ++j) {
        if (x[j].is_zero()) continue;
        for (int i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) y[i] += m(i, j) * x[j];
    }
    return y;
}

SMatrix kron(const SMatrix& a, const SMatrix& b) {
    SMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (int r = 0; r < b.rows(); ++r)
                for (int c = 0; c < b.cols(); ++c)
                    if (!b(r, c).is_zero()) k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
        }
    return k;
}

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<int> pivots_of(const SMatrix& rref_rows) {
    std::vector<int> p;
    for (int i = 0; i < rref_rows.rows(); ++i) {
        int j = 0;
        while (rref_rows(i, j).is_zero()) ++j;
        p.push_back(j);
    }
    return p;
}

}  // namespace

std::size_t max_exterior_dim() { return cap_ref().load(); }
void set_max_exterior_dim(std::size_t cap) { cap_ref().store(cap); }

SMatrix normalize_projective(const SMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return m * m(i, j).inv();
    return m;
}

std::optional<Scalar> proportionality(const SMatrix& a, const SMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
    std::optional<Scalar> lambda;
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            if (!b(i, j).is_zero()) {
                lambda = a(i, j) / b(i, j);
                i = b.rows();
                break;
            }
    if (!lambda) return std::nullopt;
    if (a != b * *lambda) return std::nullopt;
    return lambda;
}

// ---------------------------------------------------------------- spin

std::vector<SMatrix> intertwining_solutions(const LinearRelation& p, const CKObject& v, const CKObject& w,
                                            int epsilon) {
    if (p.is_null()) throw std::invalid_argument("intertwining system of null");
    if (p.source() != v.dim || p.target() != w.dim) throw std::invalid_argument("relation does not match objects");
    check_exterior(v.rank);
    check_exterior(w.rank);
    const int dv = 1 << v.rank, dw = 1 << w.rank;
    const std::uint64_t n_unknowns = static_cast<std::uint64_t>(dv) * dw;
    EchelonBasis eb;
    const SMatrix& basis = p.space().basis();
    for (int r = 0; r < basis.rows(); ++r) {
        auto row = basis.row(r);
        std::vector<Scalar> x(row.begin(), row.begin() + v.dim), y(row.begin() + v.dim, row.end());
        SMatrix av = clifford_action(v, x), aw = clifford_action(w, y) * Scalar(epsilon);
        std::vector<std::vector<std::pair<int, Scalar>>> aw_rows(dw), av_cols(dv);
        for (int i = 0; i < dw; ++i)
            for (int k = 0; k < dw; ++k)
                if (!aw(i, k).is_zero()) aw_rows[i].emplace_back(k, aw(i, k));
        for (int j = 0; j < dv; ++j)
            for (int k = 0; k < dv; ++k)
                if (!av(k, j).is_zero()) av_cols[j].emplace_back(k, av(k, j));
        // (S a_V - eps a_W S)(i, j) = 0
        for (int i = 0; i < dw; ++i)
            for (int j = 0; j < dv; ++j) {
                SparseVec eq;
                for (const auto& [k, c] : av_cols[j]) eq.emplace_back(static_cast<std::uint64_t>(i) * dv + k, c);
                for (const auto& [k, c] : aw_rows[i]) eq.emplace_back(static_cast<std::uint64_t>(k) * dv + j, -c);
                std::sort(eq.begin(), eq.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                SparseVec merged;
                for (auto& [key, c] : eq) {
                    if (!merged.empty() && merged.back().first == key) merged.back().second += c;
                    else merged.emplace_back(key, c);
                }
                std::erase_if(merged, [](const auto& t) { return t.second.is_zero(); });
                if (!merged.empty()) eb.add(merged);
            }
    }
    std::vector<SMatrix> out;
    for (const auto& sol : eb.nullspace(n_unknowns)) {
        SMatrix s(dw, dv);
        for (const auto& [key, c] : sol) s(static_cast<int>(key / dv), static_cast<int>(key % dv)) = c;
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

SpinOperator solve_spin(const LinearRelation& p, const CKObject& v, const CKObject& w, bool allow_flip) {
    SpinOperator s;
    if (p.is_null()) {
        s.matrix = SMatrix(1 << w.rank, 1 << v.rank);
        return s;
    }
    auto sols = intertwining_solutions(p, v, w, 1);
    if (sols.empty() && allow_flip) {
        sols = intertwining_solutions(p, v, w, -1);
        s.epsilon = -1;
    }
    s.solution_dim = static_cast<int>(sols.size());
    if (sols.size() != 1)
        throw std::runtime_error("intertwining solution space has dimension " + std::to_string(sols.size()) +
                                 "; relation is not a maximal isotropic morphism");
    s.matrix = normalize_projective(sols.front());
    return s;
}

}  // namespace

SpinOperator spin_operator(const LinearRelation& p, const CKObject& v, const CKObject& w) {
    for (const CKObject* o : {&v, &w})
        if (o->cat != Category::GD && o->cat != Category::D) throw std::invalid_argument("Spin needs GD or D objects");
    return solve_spin(p, v, w, false);
}

SpinOperator spin_B(const LinearRelation& p, const CKObject& v, const CKObject& w) {
    if (v.cat != Category::B || w.cat != Category::B) throw std::invalid_argument("spin_B needs B objects");
    return solve_spin(p, v, w, true);
}

// ---------------------------------------------------------------- Berezin kernels

namespace {

// (-1)^{|T|(|S|+1)} times the sign of reversing etabar_S
int pairing_sign(std::uint32_t t, std::uint32_t s) {
    int kt = std::popcount(t), ks = std::popcount(s);
    int e = ks * (ks - 1) / 2 + kt * (ks + 1);
    return e % 2 ? -1 : 1;
}

}  // namespace

SMatrix kernel_operator(const GrassmannElement& k, int m, int n) {
    if (k.vars() != m + n) throw std::invalid_argument("kernel variable count must be m + n");
    check_exterior(m);
    check_exterior(n);
    SMatrix op(1 << m, 1 << n);
    for (const auto& [mask, c] : k.terms()) {
        std::uint32_t t = mask & ((1u << m) - 1), s = mask >> m;
        op(static_cast<int>(t), static_cast<int>(s)) = c * Scalar(pairing_sign(t, s));
    }
    return op;
}

GrassmannElement operator_kernel(const SMatrix& op) {
    int m = std::countr_zero(static_cast<unsigned>(op.rows())), n = std::countr_zero(static_cast<unsigned>(op.cols()));
    if ((1 << m) != op.rows() || (1 << n) != op.cols()) throw std::invalid_argument("operator is not 2^m x 2^n");
    GrassmannElement k(m + n);
    for (int t = 0; t < op.rows(); ++t)
        for (int s = 0; s < op.cols(); ++s)
            if (!op(t, s).is_zero())
                k.add_term(static_cast<std::uint32_t>(t) | static_cast<std::uint32_t>(s) << m,
                           op(t, s) * Scalar(pairing_sign(static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(s))));
    return k;
}

BerezinKernel empty_kernel(int m, int n) {
    BerezinKernel k;
    k.m = m;
    k.n = n;
    k.K = SMatrix(m, m);
    k.L = SMatrix(m, n);
    k.M = SMatrix(n, n);
    k.p.assign(m, Scalar());
    k.q.assign(n, Scalar());
    return k;
}

GrassmannElement BerezinKernel::kernel() const {
    const int N = m + n;
    if (K.rows() != m || K.cols() != m || L.rows() != m || L.cols() != n || M.rows() != n || M.cols() != n ||
        static_cast<int>(p.size()) != m || static_cast<int>(q.size()) != n)
        throw std::invalid_argument("Berezin kernel block shapes are inconsistent");
    if (!(K + K.transpose()).is_zero()) throw std::invalid_argument("K must be skew-symmetric");
    SMatrix a(N, N);
    a.set_block(0, 0, K);
    a.set_block(0, m, L);
    a.set_block(m, 0, L.transpose() * Scalar(-1));
    a.set_block(m, m, M);
    GrassmannElement e(N);
    for (int r = 0; r < N; ++r)
        for (int s = 0; s < N; ++s) {
            if (r == s || a(r, s).is_zero()) continue;
            std::uint32_t ra = 1u << r, sb = 1u << s;
            e.add_term(ra | sb, a(r, s) * Scalar::frac(merge_sign(ra, sb), 2));
        }
    for (int i = 0; i < m; ++i) e.add_term(1u << i, p[i]);
    for (int i = 0; i < n; ++i) e.add_term(1u << (m + i), q[i]);
    GrassmannElement k = GrassmannElement::constant(N, scale);
    for (const auto& f : factors) {
        if (static_cast<int>(f.size()) != N + 1) throw std::invalid_argument("factor length must be 1 + m + n");
        k = k * GrassmannElement::linear(N, std::vector<Scalar>(f.begin() + 1, f.end()), f[0]);
    }
    return k * grassmann_exp(e);
}

SMatrix berezin_operator(const BerezinKernel& k) { return kernel_operator(k.kernel(), k.m, k.n); }

BerezinShape berezin_shape(const GrassmannElement& g) {
    BerezinShape out;
    if (g.is_zero()) {
        out.detail = "zero kernel";
        return out;
    }
    const int N = g.vars();
    // linear forms l with l g = 0
    std::vector<std::uint32_t> masks;
    std::vector<GrassmannElement> cols;
    for (int i = 0; i < N; ++i) cols.push_back(GrassmannElement::generator(N, i) * g);
    for (const auto& c : cols)
        for (const auto& [mask, x] : c.terms()) masks.push_back(mask);
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    SMatrix sys(static_cast<int>(masks.size()), N);
    for (int i = 0; i < N; ++i)
        for (const auto& [mask, x] : cols[i].terms())
            sys(static_cast<int>(std::lower_bound(masks.begin(), masks.end(), mask) - masks.begin()), i) = x;
    auto ann = masks.empty() ? nullspace(SMatrix(1, N)) : nullspace(sys);
    const int s = static_cast<int>(ann.size());
    out.factors = s;
    // new generators y = C z with the annihilating forms first
    SMatrix c(N, N);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < N; ++j) c(i, j) = ann[i][j];
    if (s > 0) {
        auto piv = rref(c.block(0, 0, s, N)).pivots;
        int row = s;
        for (int j = 0; j < N; ++j)
            if (std::find(piv.begin(), piv.end(), j) == piv.end()) c(row++, j) = Scalar(1);
    } else {
        c = SMatrix::identity(N);
    }
    auto cinv = inverse(c);
    if (!cinv) {
        out.detail = "annihilator basis did not extend";
        return out;
    }
    GrassmannElement gy = substitute(g, *cinv);
    const std::uint32_t low = (1u << s) - 1;
    GrassmannElement h(N);
    for (const auto& [mask, x] : gy.terms()) {
        if ((mask & low) != low) {
            out.detail = "kernel is not divisible by its annihilating forms";
            return out;
        }
        h.add_term(mask & ~low, x);
    }
    Scalar h0 = h.constant_term();
    if (h0.is_zero()) {
        out.detail = "reduced kernel has zero constant term";
        return out;
    }
    GrassmannElement x = h * h0.inv() - GrassmannElement::constant(N, Scalar(1));
    GrassmannElement lg = grassmann_log1p(x);
    if (lg.degree() > 2) {
        out.detail = "exponent has degree " + std::to_string(lg.degree());
        return out;
    }
    out.berezin = true;
    out.detail = std::to_string(s) + " linear factors times a Gaussian";
    return out;
}

// ---------------------------------------------------------------- fundamental GA representation

CKObject M_functor(const CKObject& v) { return gd_object(v.dim); }

LinearRelation M_morphism(const LinearRelation& p) {
    const int a = p.source(), b = p.target();
    if (p.is_null()) return LinearRelation::null(2 * a, 2 * b);
    LinearRelation d = dual_relation(p);
    const int amb = 2 * a + 2 * b;
    std::vector<std::vector<Scalar>> rows;
    for (int r = 0; r < p.dim(); ++r) {
        std::vector<Scalar> x(amb);
        auto src = p.space().row(r);
        for (int i = 0; i < a; ++i) x[i] = src[i];
        for (int i = 0; i < b; ++i) x[2 * a + i] = src[a + i];
        rows.push_back(std::move(x));
    }
    for (int r = 0; r < d.dim(); ++r) {
        std::vector<Scalar> x(amb);
        auto src = d.space().row(r);
        for (int i = 0; i < a; ++i) x[a + i] = src[i];
        for (int i = 0; i < b; ++i) x[2 * a + b + i] = src[a + i];
        rows.push_back(std::move(x));
    }
    return LinearRelation::from_subspace(2 * a, 2 * b, Subspace::span(amb, rows));
}

SMatrix fundamental_GA(const LinearRelation& p) {
    if (p.is_null()) {
        check_exterior(p.source());
        check_exterior(p.target());
        return SMatrix(1 << p.target(), 1 << p.source());
    }
    return spin_operator(M_morphism(p), gd_object(p.source()), gd_object(p.target())).matrix;
}

SMatrix grade_block(const SMatrix& op, int n_src, int k_src, int n_tgt, int k_tgt) {
    if (op.rows() != (1 << n_tgt) || op.cols() != (1 << n_src)) throw std::invalid_argument("operator shape");
    auto rows = graded_basis(n_tgt, k_tgt), cols = graded_basis(n_src, k_src);
    SMatrix b(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            b(static_cast<int>(i), static_cast<int>(j)) = op(static_cast<int>(rows[i]), static_cast<int>(cols[j]));
    return b;
}

// ---------------------------------------------------------------- category representations

int rank_of(Category c, int d) {
    switch (c) {
        case Category::A: return d - 1;
        case Category::B: return (d - 1) / 2;
        case Category::C:
        case Category::D:
        case Category::GD: return d / 2;
        case Category::GA: return d;
    }
    return d;
}

std::optional<SMatrix> graph_operator(const LinearRelation& p) {
    if (p.is_null()) return std::nullopt;
    const int a = p.source(), b = p.target();
    if (p.dim() != a) return std::nullopt;
    const SMatrix& m = p.space().basis();
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j)
            if (m(i, j) != Scalar(i == j ? 1 : 0)) return std::nullopt;
    SMatrix op(b, a);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) op(j, i) = m(i, a + j);
    return op;
}

CategoryRep self_rep() {
    CategoryRep r;
    r.cat = Category::A;
    r.name = "self";
    r.dim = [](int rank) { return rank + 1; };
    r.act = [](const LinearRelation& p) {
        if (p.is_null()) return SMatrix(p.target(), p.source());
        auto op = graph_operator(p);
        if (!op) throw std::invalid_argument("category A morphisms are operator graphs");
        return *op;
    };
    return r;
}

CategoryRep exterior_power_rep(const CategoryRep& base, int k) {
    CategoryRep r;
    r.cat = base.cat;
    r.name = "L" + std::to_string(k) + "(" + base.name + ")";
    auto bd = base.dim;
    r.dim = [bd, k](int rank) { return static_cast<int>(binom(bd(rank), k)); };
    auto ba = base.act;
    r.act = [ba, k](const LinearRelation& p) { return compound_matrix(ba(p), k); };
    return r;
}

CategoryRep tensor_rep(const CategoryRep& a, const CategoryRep& b) {
    CategoryRep r;
    r.cat = a.cat;
    r.name = a.name + "(x)" + b.name;
    auto ad = a.dim, bd = b.dim;
    r.dim = [ad, bd](int rank) { return ad(rank) * bd(rank); };
    auto aa = a.act, ba = b.act;
    r.act = [aa, ba](const LinearRelation& p) { return kron(aa(p), ba(p)); };
    return r;
}

CategoryRep direct_sum_rep(const CategoryRep& a, const CategoryRep& b) {
    CategoryRep r;
    r.cat = a.cat;
    r.name = a.name + "(+)" + b.name;
    auto ad = a.dim, bd = b.dim;
    r.dim = [ad, bd](int rank) { return ad(rank) + bd(rank); };
    auto aa = a.act, ba = b.act;
    r.act = [aa, ba](const LinearRelation& p) { return SMatrix::block_diag(aa(p), ba(p)); };
    return r;
}

CategoryRep quotient_rep(const CategoryRep& base, std::function<Subspace(int)> sub, std::string name) {
    CategoryRep r;
    r.cat = base.cat;
    r.name = std::move(name);
    auto bd = base.dim;
    r.dim = [bd, sub](int rank) { return bd(rank) - sub(rank).dim(); };
    auto ba = base.act;
    Category cat = base.cat;
    r.act = [ba, sub, cat](const LinearRelation& p) {
        SMatrix m = ba(p);
        Subspace ss = sub(rank_of(cat, p.source())), st = sub(rank_of(cat, p.target()));
        auto ps = pivots_of(ss.basis()), pt = pivots_of(st.basis());
        std::vector<int> cs, ct;
        for (int j = 0; j < m.cols(); ++j)
            if (std::find(ps.begin(), ps.end(), j) == ps.end()) cs.push_back(j);
        for (int j = 0; j < m.rows(); ++j)
            if (std::find(pt.begin(), pt.end(), j) == pt.end()) ct.push_back(j);
        SMatrix out(static_cast<int>(ct.size()), static_cast<int>(cs.size()));
        for (std::size_t c = 0; c < cs.size(); ++c) {
            auto y = m.col(cs[c]);
            for (int i = 0; i < st.dim(); ++i) {
                Scalar f = y[pt[i]];
                if (f.is_zero()) continue;
                for (int j = 0; j < m.rows(); ++j)
                    if (!st.basis()(i, j).is_zero()) y[j] -= f * st.basis()(i, j);
            }
            for (std::size_t t = 0; t < ct.size(); ++t) out(static_cast<int>(t), static_cast<int>(c)) = y[ct[t]];
        }
        return out;
    };
    return r;
}

CategoryRep fundamental_grade_rep(Category c, int j) {
    if (c != Category::B && c != Category::C && c != Category::D)
        throw std::invalid_argument("grade representations are defined for B, C, D");
    CategoryRep r;
    r.cat = c;
    r.name = "L_" + std::to_string(j);
    r.dim = [c, j](int rank) {
        int d = make_object(c, rank).dim;
        return static_cast<int>(binom(d, d / 2 - j + 1));
    };
    r.act = [j](const LinearRelation& p) {
        const int a = p.source(), b = p.target();
        const int ka = a / 2 - j + 1, kb = b / 2 - j + 1;
        SMatrix full = fundamental_GA(p);
        if (ka < 0 || ka > a || kb < 0 || kb > b)
            return SMatrix(static_cast<int>(binom(b, kb)), static_cast<int>(binom(a, ka)));
        return grade_block(full, a, ka, b, kb);
    };
    return r;
}

GrassmannElement symplectic_invariant(int rank) {
    GrassmannElement q(2 * rank);
    for (int i = 0; i < rank; ++i) q.add_term((1u << i) | (1u << (rank + i)), Scalar(1));
    return q;
}

Subspace q_wedge_image(int rank, int k) {
    const int n = 2 * rank;
    auto target = graded_basis(n, k);
    Subspace out(static_cast<int>(target.size()));
    if (k < 2) return out;
    std::map<std::uint32_t, int> index;
    for (std::size_t i = 0; i < target.size(); ++i) index[target[i]] = static_cast<int>(i);
    GrassmannElement q = symplectic_invariant(rank);
    std::vector<std::vector<Scalar>> rows;
    for (std::uint32_t u : graded_basis(n, k - 2)) {
        GrassmannElement x(n);
        x.add_term(u, Scalar(1));
        GrassmannElement y = q * x;
        std::vector<Scalar> row(target.size());
        for (const auto& [mask, c] : y.terms()) row[index.at(mask)] = c;
        rows.push_back(std::move(row));
    }
    return Subspace::span(static_cast<int>(target.size()), rows);
}

CategoryRep c_quotient_rep(int j) {
    CategoryRep base = fundamental_grade_rep(Category::C, j);
    auto sub = [j](int rank) { return q_wedge_image(rank, rank - j + 1); };
    return quotient_rep(base, sub, "Pi_" + std::to_string(j));
}

SemigroupRep restrict_rep(const CategoryRep& r, int rank) {
    return SemigroupRep{r.cat, rank, r.dim(rank), r.act};
}

std::vector<LinearRelation> aut_generators(Category c, int rank, bool with_theta) {
    std::vector<LinearRelation> out;
    if (c == Category::A) {
        const int d = rank + 1;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                if (i == j) continue;
                SMatrix t = SMatrix::identity(d);
                t(i, j) = Scalar(1);
                out.push_back(LinearRelation::graph(t));
            }
        for (int i = 0; i < d; ++i) {
            SMatrix t = SMatrix::identity(d);
            t(i, i) = Scalar(2);
            out.push_back(LinearRelation::graph(t));
        }
    } else if (c == Category::C) {
        const int d = 2 * rank;
        SMatrix g = c_object(rank).form->gram();
        std::vector<std::vector<Scalar>> dirs;
        for (int i = 0; i < d; ++i) {
            std::vector<Scalar> u(d);
            u[i] = Scalar(1);
            dirs.push_back(u);
        }
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                std::vector<Scalar> u(d);
                u[i] = Scalar(1);
                u[j] = Scalar(1);
                dirs.push_back(u);
            }
        // x -> x + {x, u} u
        for (const auto& u : dirs) {
            auto gu = mat_vec(g, u);
            SMatrix t = SMatrix::identity(d);
            for (int r = 0; r < d; ++r)
                for (int s = 0; s < d; ++s) t(r, s) += u[r] * gu[s];
            out.push_back(LinearRelation::graph(t));
        }
        for (int i = 0; i < rank; ++i) {
            SMatrix t = SMatrix::identity(d);
            t(i, i) = Scalar(2);
            t(rank + i, rank + i) = Scalar::frac(1, 2);
            out.push_back(LinearRelation::graph(t));
        }
    } else {
        throw std::invalid_argument("automorphism generators are provided for A and C");
    }
    if (with_theta && rank >= 1) out.push_back(OrderedCategory(c).theta(rank, rank - 1));
    return out;
}

Subspace cyclic_span(const SemigroupRep& r, const std::vector<std::vector<Scalar>>& seeds,
                     const std::vector<LinearRelation>& gens) {
    std::vector<SMatrix> ops;
    for (const auto& g : gens) ops.push_back(r.act(g));
    EchelonBasis eb;
    std::deque<std::vector<Scalar>> queue;
    std::vector<std::vector<Scalar>> kept;
    for (const auto& s : seeds)
        if (eb.add(to_sparse(s))) {
            queue.push_back(s);
            kept.push_back(s);
        }
    while (!queue.empty()) {
        auto x = std::move(queue.front());
        queue.pop_front();
        for (const auto& op : ops) {
            auto y = mat_vec(op, x);
            if (eb.add(to_sparse(y))) {
                queue.push_back(y);
                kept.push_back(y);
            }
        }
    }
    return Subspace::span(r.dim, kept);
}

int intertwiner_space(const SemigroupRep& a, const SemigroupRep& b, const std::vector<LinearRelation>& gens) {
    const int da = a.dim, db = b.dim;
    EchelonBasis eb;
    for (const auto& g : gens) {
        SMatrix ta = a.act(g), tb = b.act(g);
        // (X ta - tb X)(i, j)
        for (int i = 0; i < db; ++i)
            for (int j = 0; j < da; ++j) {
                std::vector<std::pair<std::uint64_t, Scalar>> eq;
                for (int k = 0; k < da; ++k)
                    if (!ta(k, j).is_zero()) eq.emplace_back(static_cast<std::uint64_t>(i) * da + k, ta(k, j));
                for (int k = 0; k < db; ++k)
                    if (!tb(i, k).is_zero()) eq.emplace_back(static_cast<std::uint64_t>(k) * da + j, -tb(i, k));
                std::sort(eq.begin(), eq.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
                SparseVec merged;
                for (auto& [key, c] : eq) {
                    if (!merged.empty() && merged.back().first == key) merged.back().second += c;
                    else merged.emplace_back(key, c);
                }
                std::erase_if(merged, [](const auto& t) { return t.second.is_zero(); });
                if (!merged.empty()) eb.add(merged);
            }
    }
    return da * db - eb.dim();
}

std::string branch_name(LoweringBranch b) {
    switch (b) {
        case LoweringBranch::Zero: return "zero";
        case LoweringBranch::ZeroExtension: return "zero-extension";
        case LoweringBranch::MaximalExtension: return "maximal-extension";
    }
    return "?";
}

LoweredRep lowering_functor(const SemigroupRep& r, int alpha) {
    const int beta = r.rank;
    if (alpha < 0 || alpha >= beta) throw std::invalid_argument("lowering needs 0 <= alpha < beta");
    OrderedCategory oc(r.cat);
    SMatrix theta = r.act(oc.theta(beta, alpha));
    Subspace im = Subspace::from_matrix(theta.transpose());
    const int k = im.dim();
    SMatrix basis = k ? im.basis().transpose() : SMatrix(r.dim, 0);
    std::vector<int> sel;
    SMatrix binv(k, k);
    if (k) {
        sel = rref(im.basis()).pivots;
        SMatrix br(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) br(i, j) = basis(sel[i], j);
        binv = *inverse(br);
    }
    SemigroupRep low;
    low.cat = r.cat;
    low.rank = alpha;
    low.dim = k;
    auto parent = r.act;
    low.act = [parent, oc, alpha, beta, basis, binv, sel, k](const LinearRelation& p) {
        if (k == 0) return SMatrix(0, 0);
        SMatrix y = parent(oc.end_embedding(p, alpha, beta)) * basis;
        SMatrix yr(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) yr(i, j) = y(sel[i], j);
        SMatrix c = binv * yr;
        if (basis * c != y) throw std::runtime_error("lowered operator leaves im tau(theta)");
        return c;
    };
    LoweredRep out{low, basis, LoweringBranch::MaximalExtension};
    if (k == 0) out.branch = LoweringBranch::Zero;
    else if (alpha >= 1 && low.act(oc.theta(alpha, alpha - 1)).is_zero()) out.branch = LoweringBranch::ZeroExtension;
    return out;
}

}  // namespace ck
