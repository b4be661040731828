#include "ck/relcat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ck {

// ---------------------------------------------------------------- subspaces

Subspace Subspace::from_matrix(const SMatrix& rows) {
    Subspace s(rows.cols());
    if (rows.rows() == 0) return s;
    s.basis_ = rref(rows).r;
    if (s.basis_.rows() == 0) s.basis_ = SMatrix(0, rows.cols());
    return s;
}

Subspace Subspace::span(int ambient, const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty()) return Subspace(ambient);
    return from_matrix(SMatrix::from_rows(rows, ambient));
}

Subspace Subspace::whole(int ambient) { return from_matrix(SMatrix::identity(ambient)); }

Subspace Subspace::coordinate(int ambient, const std::vector<int>& idx) {
    std::vector<std::vector<Scalar>> rows;
    for (int k : idx) {
        std::vector<Scalar> r(ambient);
        r[k] = Scalar(1);
        rows.push_back(r);
    }
    return span(ambient, rows);
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
    std::vector<Scalar> w = v;
    for (int i = 0; i < dim(); ++i) {
        int p = 0;
        while (basis_(i, p).is_zero()) ++p;
        if (w[p].is_zero()) continue;
        Scalar c = w[p];
        for (int j = p; j < ambient_; ++j)
            if (!basis_(i, j).is_zero()) w[j] -= c * basis_(i, j);
    }
    for (const auto& x : w)
        if (!x.is_zero()) return false;
    return true;
}

bool Subspace::contains(const Subspace& o) const {
    for (int i = 0; i < o.dim(); ++i)
        if (!contains(o.row(i))) return false;
    return true;
}

Subspace Subspace::operator+(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw std::invalid_argument("ambient dimension mismatch");
    return from_matrix(SMatrix::vstack(basis_, o.basis_));
}

Subspace Subspace::annihilator() const {
    if (dim() == 0) return whole(ambient_);
    return span(ambient_, nullspace(basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw std::invalid_argument("ambient dimension mismatch");
    return (annihilator() + o.annihilator()).annihilator();
}

Subspace Subspace::image(const SMatrix& m) const {
    if (dim() == 0) return Subspace(m.cols());
    return from_matrix(basis_ * m);
}

std::string Subspace::str() const {
    std::ostringstream os;
    os << "span(dim " << dim() << " in " << ambient_ << ")";
    for (int i = 0; i < dim(); ++i) {
        os << "\n  [";
        for (int j = 0; j < ambient_; ++j) os << (j ? " " : "") << basis_(i, j).str();
        os << "]";
    }
    return os.str();
}

// ---------------------------------------------------------------- forms and objects

BilinearForm::BilinearForm(SMatrix gram, bool skew) : gram_(std::move(gram)), skew_(skew) {
    if (gram_.rows() != gram_.cols()) throw std::invalid_argument("gram matrix must be square");
    SMatrix t = gram_.transpose();
    if (t != (skew_ ? gram_ * Scalar(-1) : gram_)) throw std::invalid_argument("gram matrix symmetry mismatch");
    if (rank_bareiss(gram_) != gram_.rows()) throw std::invalid_argument("form is degenerate");
}

Scalar BilinearForm::operator()(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const {
    Scalar s;
    for (int i = 0; i < dim(); ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < dim(); ++j)
            if (!gram_(i, j).is_zero() && !v[j].is_zero()) s += u[i] * gram_(i, j) * v[j];
    }
    return s;
}

std::string category_name(Category c) {
    switch (c) {
        case Category::GA: return "GA";
        case Category::GD: return "GD";
        case Category::A: return "A";
        case Category::B: return "B";
        case Category::C: return "C";
        case Category::D: return "D";
    }
    return "?";
}

Category parse_category(const std::string& s) {
    for (Category c : {Category::GA, Category::GD, Category::A, Category::B, Category::C, Category::D})
        if (category_name(c) == s) return c;
    throw std::invalid_argument("unknown category: " + s);
}

namespace {

std::vector<int> range(int a, int b) {
    std::vector<int> r;
    for (int k = a; k < b; ++k) r.push_back(k);
    return r;
}

CKObject split_object(Category cat, int rank, bool skew, bool extra_line) {
    int d = 2 * rank + (extra_line ? 1 : 0);
    SMatrix g(d, d);
    for (int i = 0; i < rank; ++i) {
        g(i, rank + i) = Scalar(1);
        g(rank + i, i) = Scalar(skew ? -1 : 1);
    }
    if (extra_line) g(d - 1, d - 1) = Scalar(1);
    CKObject o;
    o.cat = cat;
    o.dim = d;
    o.rank = rank;
    o.form = BilinearForm(g, skew);
    o.plus = Subspace::coordinate(d, range(0, rank));
    o.minus = Subspace::coordinate(d, range(rank, 2 * rank));
    return o;
}

}  // namespace

CKObject ga_object(int dim) { return CKObject{Category::GA, dim, dim, std::nullopt, std::nullopt, std::nullopt}; }
CKObject a_object(int rank) { return CKObject{Category::A, rank + 1, rank, std::nullopt, std::nullopt, std::nullopt}; }
CKObject gd_object(int rank) { return split_object(Category::GD, rank, false, false); }
CKObject b_object(int rank) { return split_object(Category::B, rank, false, true); }
CKObject c_object(int rank) { return split_object(Category::C, rank, true, false); }
CKObject d_object(int rank) { return split_object(Category::D, rank, false, false); }

CKObject make_object(Category c, int rank) {
    switch (c) {
        case Category::GA: return ga_object(rank);
        case Category::GD: return gd_object(rank);
        case Category::A: return a_object(rank);
        case Category::B: return b_object(rank);
        case Category::C: return c_object(rank);
        case Category::D: return d_object(rank);
    }
    throw std::invalid_argument("unknown category");
}

// ---------------------------------------------------------------- relations

LinearRelation LinearRelation::null(int source, int target) {
    LinearRelation r;
    r.null_ = true;
    r.source_ = source;
    r.target_ = target;
    r.space_ = Subspace(source + target);
    return r;
}

LinearRelation LinearRelation::from_subspace(int source, int target, Subspace s) {
    if (s.ambient() != source + target) throw std::invalid_argument("subspace ambient must be source + target");
    LinearRelation r;
    r.source_ = source;
    r.target_ = target;
    r.space_ = std::move(s);
    return r;
}

LinearRelation LinearRelation::graph(const SMatrix& a) {
    int src = a.cols(), tgt = a.rows();
    SMatrix rows(src, src + tgt);
    for (int i = 0; i < src; ++i) {
        rows(i, i) = Scalar(1);
        for (int j = 0; j < tgt; ++j) rows(i, src + j) = a(j, i);
    }
    return from_subspace(src, tgt, Subspace::from_matrix(rows));
}

LinearRelation LinearRelation::identity(int d) { return graph(SMatrix::identity(d)); }

const Subspace& LinearRelation::space() const {
    if (null_) throw std::invalid_argument("null relation has no subspace");
    return space_;
}

bool LinearRelation::operator==(const LinearRelation& o) const {
    if (source_ != o.source_ || target_ != o.target_ || null_ != o.null_) return false;
    return null_ || space_ == o.space_;
}

std::string LinearRelation::str() const {
    if (null_) return "null(" + std::to_string(source_) + "," + std::to_string(target_) + ")";
    return "relation " + std::to_string(source_) + "->" + std::to_string(target_) + " " + space_.str();
}

namespace {

SMatrix columns(const SMatrix& m, int c0, int nc) { return m.block(0, c0, m.rows(), nc); }

void require(const LinearRelation& p) {
    if (p.is_null()) throw std::invalid_argument("operation undefined on null");
}

}  // namespace

Subspace rel_kernel(const LinearRelation& p) {
    require(p);
    int a = p.source(), b = p.target();
    auto s = p.space().intersect(Subspace::coordinate(a + b, range(0, a)));
    return Subspace::from_matrix(s.dim() ? columns(s.basis(), 0, a) : SMatrix(0, a));
}

Subspace rel_indef(const LinearRelation& p) {
    require(p);
    int a = p.source(), b = p.target();
    auto s = p.space().intersect(Subspace::coordinate(a + b, range(a, a + b)));
    return Subspace::from_matrix(s.dim() ? columns(s.basis(), a, b) : SMatrix(0, b));
}

Subspace rel_domain(const LinearRelation& p) {
    require(p);
    return Subspace::from_matrix(p.dim() ? columns(p.space().basis(), 0, p.source()) : SMatrix(0, p.source()));
}

Subspace rel_image(const LinearRelation& p) {
    require(p);
    return Subspace::from_matrix(p.dim() ? columns(p.space().basis(), p.source(), p.target())
                                         : SMatrix(0, p.target()));
}

LinearRelation relation_product(const LinearRelation& q, const LinearRelation& p) {
    if (p.target() != q.source()) throw std::invalid_argument("composition dimension mismatch");
    require(p);
    require(q);
    int a = p.source(), b = p.target(), c = q.target();
    int np = p.dim(), nq = q.dim();
    if (np + nq == 0) return LinearRelation::from_subspace(a, c, Subspace(a + c));
    const SMatrix& P = p.space().basis();
    const SMatrix& Q = q.space().basis();
    // x Pw = y Qw
    SMatrix sys(b, np + nq);
    for (int j = 0; j < b; ++j) {
        for (int i = 0; i < np; ++i) sys(j, i) = P(i, a + j);
        for (int i = 0; i < nq; ++i) sys(j, np + i) = -Q(i, j);
    }
    std::vector<std::vector<Scalar>> rows;
    auto combos = b == 0 ? nullspace(SMatrix(1, np + nq)) : nullspace(sys);
    for (const auto& xy : combos) {
        std::vector<Scalar> r(a + c);
        for (int i = 0; i < np; ++i)
            if (!xy[i].is_zero())
                for (int k = 0; k < a; ++k) r[k] += xy[i] * P(i, k);
        for (int i = 0; i < nq; ++i)
            if (!xy[np + i].is_zero())
                for (int k = 0; k < c; ++k) r[a + k] += xy[np + i] * Q(i, b + k);
        rows.push_back(std::move(r));
    }
    return LinearRelation::from_subspace(a, c, Subspace::span(a + c, rows));
}

LinearRelation compose_GA(const LinearRelation& q, const LinearRelation& p) {
    if (p.target() != q.source()) throw std::invalid_argument("composition dimension mismatch");
    if (p.is_null() || q.is_null()) return LinearRelation::null(p.source(), q.target());
    if (rel_kernel(q).intersect(rel_indef(p)).dim() != 0) return LinearRelation::null(p.source(), q.target());
    if ((rel_image(p) + rel_domain(q)).dim() != p.target()) return LinearRelation::null(p.source(), q.target());
    return relation_product(q, p);
}

LinearRelation compose_GD(const LinearRelation& q, const LinearRelation& p) {
    if (p.target() != q.source()) throw std::invalid_argument("composition dimension mismatch");
    if (p.is_null() || q.is_null()) return LinearRelation::null(p.source(), q.target());
    if (rel_kernel(q).intersect(rel_indef(p)).dim() != 0) return LinearRelation::null(p.source(), q.target());
    return relation_product(q, p);
}

LinearRelation compose(Category c, const LinearRelation& q, const LinearRelation& p) {
    if (c == Category::GA || c == Category::A) return compose_GA(q, p);
    return compose_GD(q, p);
}

LinearRelation dual_relation(const LinearRelation& p) {
    if (p.is_null()) return LinearRelation::null(p.source(), p.target());
    int a = p.source(), b = p.target();
    SMatrix p0 = p.space().basis();
    for (int i = 0; i < p0.rows(); ++i)
        for (int j = a; j < a + b; ++j) p0(i, j) = -p0(i, j);
    return LinearRelation::from_subspace(a, b, Subspace::from_matrix(p0).annihilator());
}

LinearRelation adjoint_relation(const LinearRelation& p) {
    if (p.is_null()) return LinearRelation::null(p.target(), p.source());
    int a = p.source(), b = p.target();
    const SMatrix& m = p.space().basis();
    SMatrix s(m.rows(), a + b);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < b; ++j) s(i, j) = m(i, a + j);
        for (int j = 0; j < a; ++j) s(i, b + j) = m(i, j);
    }
    return LinearRelation::from_subspace(b, a, Subspace::from_matrix(s));
}

// ---------------------------------------------------------------- isotropy

BilinearForm difference_form(const CKObject& v, const CKObject& w) {
    if (!v.form || !w.form) throw std::invalid_argument("objects carry no bilinear form");
    if (v.form->skew() != w.form->skew()) throw std::invalid_argument("form symmetry tags differ");
    return BilinearForm(SMatrix::block_diag(v.form->gram(), w.form->gram() * Scalar(-1)), v.form->skew());
}

bool is_isotropic(const Subspace& s, const BilinearForm& f) {
    if (s.ambient() != f.dim()) throw std::invalid_argument("ambient dimension mismatch");
    if (s.dim() == 0) return true;
    return (s.basis() * f.gram() * s.basis().transpose()).is_zero();
}

bool is_maximal_isotropic(const Subspace& s, const BilinearForm& f) {
    return s.dim() == f.dim() / 2 && is_isotropic(s, f);
}

std::string parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

Parity grassmann_component(const Subspace& h1, const Subspace& h2, const BilinearForm& f) {
    if (!is_maximal_isotropic(h1, f) || !is_maximal_isotropic(h2, f))
        throw std::invalid_argument("component parity needs maximal isotropic subspaces");
    int codim = h1.dim() - h1.intersect(h2).dim();
    return codim % 2 == 0 ? Parity::Even : Parity::Odd;
}

Subspace d_reference(const CKObject& v, const CKObject& w) {
    if (!v.plus || !w.minus) throw std::invalid_argument("objects carry no split");
    std::vector<int> idx = range(0, v.rank);
    for (int j = 0; j < w.rank; ++j) idx.push_back(v.dim + w.rank + j);
    return Subspace::coordinate(v.dim + w.dim, idx);
}

bool is_D_morphism(const LinearRelation& p, const CKObject& v, const CKObject& w) {
    if (p.is_null()) return false;
    BilinearForm f = difference_form(v, w);
    if (!is_maximal_isotropic(p.space(), f)) return false;
    return grassmann_component(p.space(), d_reference(v, w), f) == Parity::Even;
}

bool is_morphism(const LinearRelation& p, const CKObject& v, const CKObject& w) {
    if (p.source() != v.dim || p.target() != w.dim) return false;
    if (p.is_null()) return true;
    if (v.cat == Category::GA || v.cat == Category::A) return true;
    if (v.cat == Category::D) return is_D_morphism(p, v, w);
    return is_maximal_isotropic(p.space(), difference_form(v, w));
}

std::vector<std::pair<std::vector<Scalar>, std::vector<Scalar>>> witt_basis(const CKObject& v, const CKObject& w) {
    if (!v.form || !w.form) throw std::invalid_argument("objects carry no bilinear form");
    int d = v.dim + w.dim;
    std::vector<std::pair<std::vector<Scalar>, std::vector<Scalar>>> out;
    auto unit = [&](int k, Scalar c) {
        std::vector<Scalar> r(d);
        r[k] = c;
        return r;
    };
    for (int i = 0; i < v.rank; ++i) out.push_back({unit(i, 1), unit(v.rank + i, 1)});
    for (int j = 0; j < w.rank; ++j) out.push_back({unit(v.dim + j, 1), unit(v.dim + w.rank + j, -1)});
    bool odd_v = v.dim % 2 == 1, odd_w = w.dim % 2 == 1;
    if (odd_v != odd_w) throw std::invalid_argument("objects of different parity");
    if (odd_v) {
        std::vector<Scalar> p(d), q(d);
        p[v.dim - 1] = Scalar(1);
        p[d - 1] = Scalar(1);
        q[v.dim - 1] = Scalar::frac(1, 2);
        q[d - 1] = Scalar::frac(-1, 2);
        out.push_back({p, q});
    }
    return out;
}

// ---------------------------------------------------------------- random data

Scalar random_scalar(std::mt19937_64& rng, double sparsity, bool gaussian) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    if (u(rng) < sparsity) return Scalar();
    std::uniform_int_distribution<int> d(-2, 2);
    long re = d(rng), im = gaussian ? d(rng) : 0;
    if (re == 0 && im == 0) re = 1;
    return Scalar(Rational(re), Rational(im), Rational(0), Rational(0));
}

SMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, double sparsity, bool gaussian) {
    SMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = random_scalar(rng, sparsity, gaussian);
    return m;
}

LinearRelation random_relation(std::mt19937_64& rng, int source, int target) {
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_real_distribution<double> sp(0.0, 0.8);
    int kind = pick(rng);
    if (kind == 0) return LinearRelation::graph(random_matrix(rng, target, source, sp(rng)));
    if (kind == 1) return adjoint_relation(LinearRelation::graph(random_matrix(rng, source, target, sp(rng))));
    std::uniform_int_distribution<int> dd(0, source + target);
    int dim = dd(rng);
    return LinearRelation::from_subspace(source, target,
                                         Subspace::from_matrix(random_matrix(rng, dim, source + target, sp(rng))));
}

LinearRelation random_isotropic_morphism(std::mt19937_64& rng, const CKObject& v, const CKObject& w,
                                         double sparsity) {
    auto pairs = witt_basis(v, w);
    bool skew = v.form->skew();
    int N = static_cast<int>(pairs.size());
    int d = v.dim + w.dim;
    std::bernoulli_distribution coin(0.5);
    for (auto& [p, q] : pairs)
        if (coin(rng)) {
            std::swap(p, q);
            if (skew)
                for (auto& x : q) x = -x;
        }
    SMatrix k(N, N);
    for (int a = 0; a < N; ++a)
        for (int b = skew ? a : a + 1; b < N; ++b) {
            Scalar s = random_scalar(rng, sparsity);
            k(a, b) = s;
            k(b, a) = skew ? s : -s;
        }
    std::vector<std::vector<Scalar>> rows;
    for (int a = 0; a < N; ++a) {
        std::vector<Scalar> r = pairs[a].first;
        for (int b = 0; b < N; ++b)
            if (!k(a, b).is_zero())
                for (int x = 0; x < d; ++x)
                    if (!pairs[b].second[x].is_zero()) r[x] += k(a, b) * pairs[b].second[x];
        rows.push_back(std::move(r));
    }
    return LinearRelation::from_subspace(v.dim, w.dim, Subspace::span(d, rows));
}

// ---------------------------------------------------------------- ordered categories

OrderedCategory::OrderedCategory(Category c) : cat_(c) {
    if (c == Category::GA || c == Category::GD) throw std::invalid_argument("GA and GD carry no ordered structure");
}

CKObject OrderedCategory::object(int rank) const { return make_object(cat_, rank); }

LinearRelation OrderedCategory::identity(int rank) const { return LinearRelation::identity(object(rank).dim); }

LinearRelation OrderedCategory::compose(const LinearRelation& q, const LinearRelation& p) const {
    return ck::compose(cat_, q, p);
}

namespace {

// coordinate of basis vector k of V_from inside V_to
int embed_index(Category c, int k, int from, int to) {
    if (c == Category::A) return k;
    if (k < from) return k;                            // e_i
    if (k < 2 * from) return to + (k - from);          // f_i
    return 2 * to;                                     // l
}

}  // namespace

LinearRelation OrderedCategory::lambda_chain(int from, int to) const {
    if (from >= to) throw std::invalid_argument("lambda needs from < to");
    CKObject a = object(from), b = object(to);
    int d = a.dim + b.dim;
    std::vector<std::vector<Scalar>> rows;
    for (int k = 0; k < a.dim; ++k) {
        std::vector<Scalar> r(d);
        r[k] = Scalar(1);
        r[a.dim + embed_index(cat_, k, from, to)] = Scalar(1);
        rows.push_back(std::move(r));
    }
    if (cat_ != Category::A) {
        // the new hyperbolic planes contribute e_k (B, C) or f_k (D) on the target side
        for (int k = from; k < to; ++k) {
            std::vector<Scalar> r(d);
            r[a.dim + (cat_ == Category::D ? to + k : k)] = Scalar(1);
            rows.push_back(std::move(r));
        }
    }
    return LinearRelation::from_subspace(a.dim, b.dim, Subspace::span(d, rows));
}

LinearRelation OrderedCategory::mu_chain(int from, int to) const {
    if (from <= to) throw std::invalid_argument("mu needs from > to");
    CKObject a = object(from), b = object(to);
    int d = a.dim + b.dim;
    std::vector<std::vector<Scalar>> rows;
    for (int k = 0; k < b.dim; ++k) {
        std::vector<Scalar> r(d);
        r[embed_index(cat_, k, to, from)] = Scalar(1);
        r[a.dim + k] = Scalar(1);
        rows.push_back(std::move(r));
    }
    for (int k = to; k < from; ++k) {
        std::vector<Scalar> r(d);
        if (cat_ == Category::A) r[k + 1] = Scalar(1);  // dropped coordinates x_{to+1}..x_from
        else r[cat_ == Category::D ? k : from + k] = Scalar(1);
        rows.push_back(std::move(r));
    }
    return LinearRelation::from_subspace(a.dim, b.dim, Subspace::span(d, rows));
}

LinearRelation OrderedCategory::lambda(int rank) const { return lambda_chain(rank, rank + 1); }
LinearRelation OrderedCategory::mu(int rank) const { return mu_chain(rank + 1, rank); }

LinearRelation OrderedCategory::theta(int tau, int sigma) const {
    if (sigma >= tau) throw std::invalid_argument("theta needs sigma < tau");
    return compose(lambda_chain(sigma, tau), mu_chain(tau, sigma));
}

LinearRelation OrderedCategory::end_embedding(const LinearRelation& p, int alpha, int beta) const {
    if (alpha >= beta) throw std::invalid_argument("end_embedding needs alpha < beta");
    return compose(lambda_chain(alpha, beta), compose(p, mu_chain(beta, alpha)));
}

LinearRelation OrderedCategory::random_endomorphism(std::mt19937_64& rng, int rank) const {
    CKObject o = object(rank);
    if (cat_ == Category::A) {
        std::uniform_real_distribution<double> sp(0.0, 0.7);
        return LinearRelation::graph(random_matrix(rng, o.dim, o.dim, sp(rng)));
    }
    for (;;) {
        LinearRelation p = random_isotropic_morphism(rng, o, o);
        if (cat_ != Category::D || is_D_morphism(p, o, o)) return p;
    }
}

}  // namespace ck
