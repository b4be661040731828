#include "common.hpp"

#include "ck/grassmann.hpp"
#include "ck/parallel.hpp"
#include "ck/relcat.hpp"
#include "ck/repkit.hpp"

#include <bit>

namespace ck::detail {

namespace {

std::string dims_str(std::initializer_list<int> d) {
    std::string s;
    for (int x : d) s += (s.empty() ? "" : "x") + std::to_string(x);
    return s;
}

std::string rel_str(const LinearRelation& p) { return p.is_null() ? "null" : p.str(); }

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

void criterion_category_axioms(CriterionReport& r, const SelftestOptions& opt) {
    Collector c(r);
    const std::size_t triples = 1000;
    parallel_for(
        triples,
        [&](std::size_t t) {
            auto rng = case_rng(opt.seed, 5, t);
            int a = uniform(rng, 1, 6), b = uniform(rng, 1, 6), cc = uniform(rng, 1, 6), d = uniform(rng, 1, 6);
            auto p = random_relation(rng, a, b), q = random_relation(rng, b, cc), s = random_relation(rng, cc, d);
            std::string where = "triple " + std::to_string(t) + " dims " + dims_str({a, b, cc, d});
            auto qp = compose_GA(q, p), sq = compose_GA(s, q);
            auto left = compose_GA(s, qp), right = compose_GA(sq, p);
            c.count();
            c.expect(left == right, where + ": R(QP) = (RQ)P", rel_str(left), rel_str(right));
            if (!qp.is_null())
                c.expect(qp.dim() == p.dim() + q.dim() - b, where + ": dim QP = dim P + dim Q - dim W",
                         std::to_string(qp.dim()), std::to_string(p.dim() + q.dim() - b));
            if (!sq.is_null())
                c.expect(sq.dim() == q.dim() + s.dim() - cc, where + ": dim RQ = dim Q + dim R - dim Y",
                         std::to_string(sq.dim()), std::to_string(q.dim() + s.dim() - cc));

            // involution (w, v) <-> (v, w)
            c.expect(adjoint_relation(adjoint_relation(p)) == p, where + ": P** = P");
            auto lhs = adjoint_relation(qp), rhs = compose_GA(adjoint_relation(p), adjoint_relation(q));
            c.expect(lhs == rhs, where + ": (QP)* = P*Q*", rel_str(lhs), rel_str(rhs));

            if (t >= 500) return;
            // duality on the first 500 pairs
            auto pd = dual_relation(p), qd = dual_relation(q);
            c.expect(dual_relation(pd) == p, where + ": P'' = P");
            c.expect(pd.dim() + p.dim() == a + b, where + ": dim P' + dim P = dim V + dim W",
                     std::to_string(pd.dim() + p.dim()), std::to_string(a + b));
            c.expect(rel_kernel(pd) == rel_domain(p).annihilator(), where + ": ker P' = Ann D(P)");
            c.expect(rel_domain(pd) == rel_kernel(p).annihilator(), where + ": D(P') = Ann ker P");
            c.expect(rel_indef(pd) == rel_image(p).annihilator(), where + ": Indef P' = Ann im P");
            c.expect(rel_image(pd) == rel_indef(p).annihilator(), where + ": im P' = Ann Indef P");
            auto qdpd = compose_GA(qd, pd);
            c.expect(qdpd.is_null() == qp.is_null(), where + ": Q'P' null iff QP null",
                     qdpd.is_null() ? "null" : "non-null", qp.is_null() ? "null" : "non-null");
            if (!qp.is_null()) c.expect(dual_relation(qp) == qdpd, where + ": (QP)' = Q'P'", rel_str(dual_relation(qp)), rel_str(qdpd));
        },
        opt.workers);
}

namespace {

// ranks r1..r3 with every pairwise ambient dimension within the cap
std::vector<int> pick_ranks(std::mt19937_64& rng, Category cat, int ambient_cap, int count) {
    auto dim = [&](int k) { return make_object(cat, k).dim; };
    for (;;) {
        std::vector<int> r(count);
        for (auto& x : r) x = uniform(rng, 1, 4);
        bool ok = true;
        for (int i = 0; i < count; ++i)
            for (int j = i + 1; j < count; ++j) ok = ok && dim(r[i]) + dim(r[j]) <= ambient_cap;
        if (ok) return r;
    }
}

LinearRelation random_morphism(std::mt19937_64& rng, const CKObject& v, const CKObject& w) {
    for (;;) {
        auto p = random_isotropic_morphism(rng, v, w);
        if (v.cat != Category::D || is_D_morphism(p, v, w)) return p;
    }
}

}  // namespace

void criterion_isotropic(CriterionReport& r, const SelftestOptions& opt) {
    Collector c(r);
    struct Job {
        Category cat;
        int cap;
    };
    std::vector<Job> jobs;
    for (int t = 0; t < 600; ++t) jobs.push_back({t % 3 == 0 ? Category::GD : t % 3 == 1 ? Category::B : Category::C, 10});
    for (int t = 0; t < 200; ++t) jobs.push_back({Category::D, 8});
    parallel_for(
        jobs.size(),
        [&](std::size_t t) {
            auto rng = case_rng(opt.seed, 6, t);
            const Job& job = jobs[t];
            auto rk = pick_ranks(rng, job.cat, job.cap, 3);
            auto o1 = make_object(job.cat, rk[0]), o2 = make_object(job.cat, rk[1]), o3 = make_object(job.cat, rk[2]);
            auto p = random_morphism(rng, o1, o2), q = random_morphism(rng, o2, o3);
            std::string where = category_name(job.cat) + " case " + std::to_string(t) + " ranks " +
                                dims_str({rk[0], rk[1], rk[2]});
            c.count();
            c.expect(is_morphism(p, o1, o2) && is_morphism(q, o2, o3), where + ": inputs are morphisms");
            auto qp = compose(job.cat, q, p);
            if (qp.is_null()) return;
            auto f = difference_form(o1, o3);
            c.expect(is_maximal_isotropic(qp.space(), f), where + ": QP maximal isotropic", qp.str());
            c.expect(2 * qp.dim() == o1.dim + o3.dim, where + ": dim QP = (dim V + dim Y)/2",
                     std::to_string(qp.dim()), std::to_string((o1.dim + o3.dim) / 2));
            if (job.cat == Category::D) c.expect(is_D_morphism(qp, o1, o3), where + ": QP lies in the D component");
        },
        opt.workers);

    // parity of codim(H1 ∩ H2) is additive: par(H1,H3) = par(H1,H2) + par(H2,H3)
    parallel_for(
        250,
        [&](std::size_t t) {
            auto rng = case_rng(opt.seed, 6, 10000 + t);
            int a = uniform(rng, 1, 3), b = uniform(rng, 1, 3);
            auto v = gd_object(a), w = gd_object(b);
            auto f = difference_form(v, w);
            LinearRelation h[3];
            for (auto& x : h) x = random_isotropic_morphism(rng, v, w);
            auto par = [&](int i, int j) { return grassmann_component(h[i].space(), h[j].space(), f) == Parity::Odd; };
            c.count();
            bool lhs = par(0, 2), rhs = par(0, 1) != par(1, 2);
            c.expect(lhs == rhs, "parity triple " + std::to_string(t) + " ranks " + dims_str({a, b}),
                     lhs ? "odd" : "even", rhs ? "odd" : "even");
        },
        opt.workers);
}

namespace {

// 0 = even-preserving, 1 = parity-reversing, -1 = mixed
int operator_parity(const SMatrix& m) {
    int seen = -2;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            int p = (std::popcount(static_cast<unsigned>(i)) + std::popcount(static_cast<unsigned>(j))) % 2;
            if (seen == -2) seen = p;
            else if (seen != p) return -1;
        }
    return seen == -2 ? 0 : seen;
}

}  // namespace

void criterion_spin(CriterionReport& r, const SelftestOptions& opt) {
    Collector c(r);
    parallel_for(
        200,
        [&](std::size_t t) {
            auto rng = case_rng(opt.seed, 7, t);
            Category cat = t % 2 ? Category::D : Category::GD;
            int a = uniform(rng, 1, 4), b = uniform(rng, 1, 4), d = uniform(rng, 1, 4);
            auto V = make_object(cat, a), W = make_object(cat, b), Y = make_object(cat, d);
            auto p = random_morphism(rng, V, W), q = random_morphism(rng, W, Y);
            std::string where = category_name(cat) + " case " + std::to_string(t) + " ranks " + dims_str({a, b, d});
            c.count();
            auto sp = spin_operator(p, V, W), sq = spin_operator(q, W, Y);
            c.expect(sp.solution_dim == 1 && sq.solution_dim == 1, where + ": intertwiner space dimension",
                     std::to_string(sp.solution_dim) + "," + std::to_string(sq.solution_dim), "1,1");
            auto qp = compose_GD(q, p);
            SMatrix prod = sq.matrix * sp.matrix;
            if (qp.is_null()) {
                c.expect(prod.is_zero(), where + ": Spin(Q)Spin(P) = 0 when QP = null");
            } else {
                auto sqp = spin_operator(qp, V, Y);
                auto l = proportionality(prod, sqp.matrix);
                c.expect(l && !l->is_zero(), where + ": Spin(Q)Spin(P) = lambda Spin(QP), lambda != 0");
            }
            // parity splitting: preserving exactly on the component of V_+ + W_-
            bool even = grassmann_component(p.space(), d_reference(V, W), difference_form(V, W)) == Parity::Even;
            int par = operator_parity(sp.matrix);
            c.expect(par == (even ? 0 : 1), where + ": Spin(P) maps Pi+/Pi- by the component of P",
                     par < 0 ? "mixed" : par ? "reversing" : "preserving", even ? "preserving" : "reversing");
            if (a + b <= 6) {
                auto sh = berezin_shape(operator_kernel(sp.matrix));
                c.expect(sh.berezin, where + ": kernel of Spin(P) is a generalized Berezin kernel", sh.detail);
            }
        },
        opt.workers);

    // spin_B between odd objects of dimension 3 and 5
    parallel_for(
        120,
        [&](std::size_t t) {
            auto rng = case_rng(opt.seed, 7, 5000 + t);
            int a = uniform(rng, 1, 2), b = uniform(rng, 1, 2), d = uniform(rng, 1, 2);
            auto V = b_object(a), W = b_object(b), Y = b_object(d);
            auto p = random_isotropic_morphism(rng, V, W), q = random_isotropic_morphism(rng, W, Y);
            std::string where = "B case " + std::to_string(t) + " dims " + dims_str({V.dim, W.dim, Y.dim});
            c.count();
            auto sp = spin_B(p, V, W), sq = spin_B(q, W, Y);
            c.expect(sp.solution_dim == 1 && sq.solution_dim == 1, where + ": unique up to scale");
            auto qp = compose_GD(q, p);
            SMatrix prod = sq.matrix * sp.matrix;
            if (qp.is_null()) {
                c.expect(prod.is_zero(), where + ": spin_B(Q)spin_B(P) = 0 when QP = null");
            } else {
                auto sqp = spin_B(qp, V, Y);
                auto l = proportionality(prod, sqp.matrix);
                c.expect(l && !l->is_zero(), where + ": spin_B(Q)spin_B(P) = lambda spin_B(QP)");
                c.expect(sqp.epsilon == sp.epsilon * sq.epsilon, where + ": sign of the l-component is multiplicative");
            }
            auto sh = berezin_shape(operator_kernel(sp.matrix));
            c.expect(sh.berezin, where + ": spin_B(P) is a generalized Berezin operator", sh.detail);
        },
        opt.workers);
    for (int n = 1; n <= 2; ++n) {
        c.count();
        auto o = b_object(n);
        auto s = spin_B(LinearRelation::identity(o.dim), o, o);
        c.expect(s.matrix == SMatrix::identity(1 << n), "B rank " + std::to_string(n) + ": spin_B(1) = 1");
    }
}

void criterion_berezin(CriterionReport& r, const SelftestOptions& opt) {
    Collector c(r);
    parallel_for(
        240,
        [&](std::size_t t) {
            auto rng = case_rng(opt.seed, 8, t);
            int N = uniform(rng, 1, 6), k = uniform(rng, 2, 5);
            std::vector<GrassmannElement> nu;
            for (int i = 0; i < k; ++i) {
                std::vector<Scalar> coef(N);
                for (auto& x : coef) x = random_scalar(rng, 0.3);
                nu.push_back(GrassmannElement::linear(N, coef));
            }
            auto one = GrassmannElement::constant(N, Scalar(1));
            std::string where = "case " + std::to_string(t) + " vars " + std::to_string(N) + " factors " + std::to_string(k);
            c.count();
            auto pair = (one + nu[0]) * (one + nu[1]);
            auto e1 = grassmann_exp(nu[0] + nu[1] + nu[0] * nu[1]);
            auto e2 = grassmann_exp(nu[0] * nu[1]) * grassmann_exp(nu[0] + nu[1]);
            c.expect(pair == e1, where + ": (1+n1)(1+n2) = exp(n1+n2+n1n2)", pair.str(), e1.str());
            c.expect(pair == e2, where + ": (1+n1)(1+n2) = exp(n1n2)exp(n1+n2)", pair.str(), e2.str());
            GrassmannElement lhs = one, pairs(N), sum(N);
            for (int i = 0; i < k; ++i) {
                lhs = lhs * (one + nu[i]);
                sum = sum + nu[i];
                for (int j = i + 1; j < k; ++j) pairs = pairs + nu[i] * nu[j];
            }
            auto rhs = grassmann_exp(pairs) * grassmann_exp(sum);
            c.expect(lhs == rhs, where + ": prod(1+n_i) = exp(sum_{i<j} n_i n_j) exp(sum n_i)", lhs.str(), rhs.str());
            auto ex = grassmann_exp(nu[0] * nu[1]), fx = (one + nu[0]) * (one + nu[1]) * (one - nu[0] - nu[1]);
            c.expect(ex == fx, where + ": exp(n1n2) = (1+n1)(1+n2)(1-n1-n2)", ex.str(), fx.str());
        },
        opt.workers);
}

namespace {

LinearRelation random_cat_morphism(std::mt19937_64& rng, const OrderedCategory& oc, int a, int b) {
    if (oc.category() == Category::A) return LinearRelation::graph(random_matrix(rng, b + 1, a + 1, 0.3));
    return random_morphism(rng, oc.object(a), oc.object(b));
}

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

void criterion_ordered_category(CriterionReport& r, const SelftestOptions& opt) {
    Collector c(r);
    const int max_rank = 4;
    const Category cats[] = {Category::A, Category::B, Category::C, Category::D};
    parallel_for(
        4,
        [&](std::size_t ci) {
            OrderedCategory oc(cats[ci]);
            std::string cn = category_name(cats[ci]);
            auto rng = case_rng(opt.seed, 9, ci);
            for (int s = 1; s <= max_rank; ++s)
                for (int t = s + 1; t <= max_rank; ++t) {
                    std::string w = cn + " " + std::to_string(s) + "<" + std::to_string(t);
                    auto lam = oc.lambda_chain(s, t), mu = oc.mu_chain(t, s), th = oc.theta(t, s);
                    c.count();
                    c.expect(is_morphism(lam, oc.object(s), oc.object(t)) && is_morphism(mu, oc.object(t), oc.object(s)),
                             w + ": lambda, mu are morphisms");
                    c.expect(oc.compose(mu, lam) == oc.identity(s), w + ": mu lambda = 1");
                    c.expect(th == oc.compose(lam, mu), w + ": theta = lambda mu");
                    c.expect(oc.compose(th, th) == th, w + ": theta^2 = theta");
                    c.expect(oc.compose(mu, th) == mu, w + ": mu theta = mu");
                    c.expect(oc.compose(th, lam) == lam, w + ": theta lambda = lambda");
                    for (int u = t + 1; u <= max_rank; ++u) {
                        std::string w3 = w + "<" + std::to_string(u);
                        c.expect(oc.compose(oc.lambda_chain(t, u), lam) == oc.lambda_chain(s, u), w3 + ": lambda chain");
                        c.expect(oc.compose(mu, oc.mu_chain(u, t)) == oc.mu_chain(u, s), w3 + ": mu chain");
                        // theta_u^t theta_u^s = theta_u^s theta_u^t = theta_u^s
                        auto a = oc.theta(u, t), b = oc.theta(u, s);
                        c.expect(oc.compose(a, b) == b && oc.compose(b, a) == b, w3 + ": theta products");
                    }
                    // U embedding: multiplicative, injective through mu U(P) lambda = P, U(1) = theta
                    c.expect(oc.end_embedding(oc.identity(s), s, t) == th, w + ": U(1) = theta");
                    for (int k = 0; k < 6; ++k) {
                        auto P = oc.random_endomorphism(rng, s), Q = oc.random_endomorphism(rng, s);
                        auto up = oc.end_embedding(P, s, t), uq = oc.end_embedding(Q, s, t);
                        c.expect(oc.end_embedding(oc.compose(Q, P), s, t) == oc.compose(uq, up), w + ": U(QP) = U(Q)U(P)");
                        c.expect(oc.compose(mu, oc.compose(up, lam)) == P, w + ": mu U(P) lambda = P");
                    }
                }
            // every P between lower objects factors through a higher morphism
            for (int k = 0; k < 10; ++k) {
                int a = uniform(rng, 1, 3), b = uniform(rng, 1, 3), a2 = uniform(rng, a + 1, 4), b2 = uniform(rng, b + 1, 4);
                auto P = random_cat_morphism(rng, oc, a, b);
                auto Q = oc.compose(oc.lambda_chain(b, b2), oc.compose(P, oc.mu_chain(a2, a)));
                auto back = oc.compose(oc.mu_chain(b2, b), oc.compose(Q, oc.lambda_chain(a, a2)));
                c.count();
                c.expect(back == P, cn + " factorization " + dims_str({a, b, a2, b2}), rel_str(back), rel_str(P));
            }
        },
        opt.workers);

    // lowering functor on exterior powers of the tautological representation of A
    CategoryRep self = self_rep();
    OrderedCategory oa(Category::A);
    for (int n = 1; n <= max_rank; ++n)
        for (int j = 1; j <= n + 1; ++j) {
            auto R = restrict_rep(exterior_power_rep(self, j), n);
            auto low = lowering_functor(R, n - 1);
            std::string w = "Lambda^" + std::to_string(j) + " rank " + std::to_string(n) + " -> " + std::to_string(n - 1);
            c.count();
            // V_{n-1} has dimension n
            c.expect(low.rep.dim == binom(n, j), w + ": dimension", std::to_string(low.rep.dim), std::to_string(binom(n, j)));
            if (n - 1 >= 1) {
                LoweringBranch want = binom(n, j) == 0       ? LoweringBranch::Zero
                                      : binom(n - 1, j) == 0 ? LoweringBranch::ZeroExtension
                                                             : LoweringBranch::MaximalExtension;
                c.expect(low.branch == want, w + ": branch", branch_name(low.branch), branch_name(want));
            }
        }
    // F_a^b F_b^g = F_a^g on subspaces and operators
    for (int j = 1; j <= 3; ++j)
        for (int b = 2; b <= 3; ++b)
            for (int a = 1; a < b; ++a) {
                const int g = max_rank;
                auto R = restrict_rep(exterior_power_rep(self, j), g);
                auto lbg = lowering_functor(R, b), lab = lowering_functor(lbg.rep, a), lag = lowering_functor(R, a);
                std::string w = "Lambda^" + std::to_string(j) + " F_" + std::to_string(a) + "^" + std::to_string(b) +
                                " F_" + std::to_string(b) + "^" + std::to_string(g);
                c.count();
                SMatrix amb = lbg.basis * lab.basis;
                c.expect(Subspace::from_matrix(amb.transpose()) == Subspace::from_matrix(lag.basis.transpose()),
                         w + ": image subspaces agree");
                auto rng = case_rng(opt.seed, 9, 100 + 10 * j + b + a);
                for (int k = 0; k < 4; ++k) {
                    auto P = oa.random_endomorphism(rng, a);
                    SMatrix x = amb * lab.rep.act(P), y = R.act(oa.end_embedding(P, a, g)) * amb;
                    c.expect(x == y, w + ": operators agree", x.str(), y.str());
                }
            }
}

}  // namespace ck::detail
