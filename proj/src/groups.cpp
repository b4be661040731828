#include "ck/groups.hpp"

#include <algorithm>
#include <stdexcept>

namespace ck {

std::string kind_name(GroupKind k) {
    switch (k) {
        case GroupKind::A_sl: return "sl";
        case GroupKind::B_soOdd: return "so";
        case GroupKind::C_sp: return "sp";
        case GroupKind::D_soEven: return "so";
        case GroupKind::U_unitary: return "u";
        case GroupKind::SU_special: return "su";
    }
    return "?";
}

GroupKind so_kind(int n) { return n % 2 == 0 ? GroupKind::B_soOdd : GroupKind::D_soEven; }
bool is_so(GroupKind k) { return k == GroupKind::B_soOdd || k == GroupKind::D_soEven; }
bool is_unitary(GroupKind k) {
    return k == GroupKind::U_unitary || k == GroupKind::SU_special || k == GroupKind::A_sl;
}

int matrix_size(GroupKind k, int n) { return k == GroupKind::C_sp ? 2 * n : n + 1; }
int param_count(GroupKind, int n) { return n; }

int algebra_dim(GroupKind k, int n) {
    switch (k) {
        case GroupKind::B_soOdd:
        case GroupKind::D_soEven: return n * (n + 1) / 2;
        case GroupKind::C_sp: return n * (2 * n + 1);
        case GroupKind::U_unitary: return (n + 1) * (n + 1);
        case GroupKind::SU_special:
        case GroupKind::A_sl: return (n + 1) * (n + 1) - 1;
    }
    return 0;
}

static Pim one(int arity) { return Pim(arity, Scalar(1)); }

PMatrix so_generator(int mu, int nu, int n, const JValuation& v) {
    if (mu < 0 || nu > n || mu >= nu) throw std::out_of_range("so_generator needs 0 <= mu < nu <= n");
    int ar = v.size();
    PMatrix x(n + 1, n + 1, ar);
    x(nu, mu) = one(ar);
    x(mu, nu) = -jprod(mu + 1, nu, 2, v);
    return x;
}

GeneratorSet so_generators(int n, const JValuation& v) {
    GeneratorSet g{so_kind(n), n, v, {}};
    for (int mu = 0; mu <= n; ++mu)
        for (int nu = mu + 1; nu <= n; ++nu)
            g.gens.push_back({"X" + std::to_string(mu) + "," + std::to_string(nu), so_generator(mu, nu, n, v)});
    return g;
}

GeneratorSet u_generators(int n, const JValuation& v) {
    int ar = v.size();
    GeneratorSet g{GroupKind::U_unitary, n, v, {}};
    for (int k = 0; k <= n; ++k)
        g.gens.push_back({"X" + std::to_string(k) + "," + std::to_string(k), PMatrix::unit(n + 1, k, k, ar)});
    for (int mu = 0; mu <= n; ++mu)
        for (int nu = mu + 1; nu <= n; ++nu) {
            g.gens.push_back({"X" + std::to_string(nu) + "," + std::to_string(mu), PMatrix::unit(n + 1, nu, mu, ar)});
            g.gens.push_back({"X" + std::to_string(mu) + "," + std::to_string(nu),
                              PMatrix::unit(n + 1, mu, nu, ar) * jprod(mu + 1, nu, 2, v)});
        }
    return g;
}

PMatrix u_Q(int mu, int nu, int n, const JValuation& v) {
    int ar = v.size();
    PMatrix x = PMatrix::unit(n + 1, nu, mu, ar) + PMatrix::unit(n + 1, mu, nu, ar) * jprod(mu + 1, nu, 2, v);
    return x * (Scalar::i() * Scalar::frac(1, 2));
}

PMatrix u_L(int mu, int nu, int n, const JValuation& v) {
    int ar = v.size();
    PMatrix x = PMatrix::unit(n + 1, nu, mu, ar) - PMatrix::unit(n + 1, mu, nu, ar) * jprod(mu + 1, nu, 2, v);
    return x * Scalar::frac(1, 2);
}

PMatrix u_P(int k, int n, const JValuation& v) {
    int ar = v.size();
    PMatrix x = PMatrix::unit(n + 1, k - 1, k - 1, ar) - PMatrix::unit(n + 1, k, k, ar);
    return x * (Scalar::i() * Scalar::frac(1, 2));
}

GeneratorSet u_hermitian_generators(int n, const JValuation& v, bool special) {
    GeneratorSet g{special ? GroupKind::SU_special : GroupKind::U_unitary, n, v, {}};
    for (int mu = 0; mu <= n; ++mu)
        for (int nu = mu + 1; nu <= n; ++nu) {
            std::string idx = std::to_string(mu) + "," + std::to_string(nu);
            g.gens.push_back({"Q" + idx, u_Q(mu, nu, n, v)});
            g.gens.push_back({"L" + idx, u_L(mu, nu, n, v)});
        }
    for (int k = 1; k <= n; ++k) g.gens.push_back({"P" + std::to_string(k), u_P(k, n, v)});
    if (!special) {
        // central element completing u(n+1)
        g.gens.push_back({"Z", PMatrix::identity(n + 1, v.size()) * Scalar::i()});
    }
    return g;
}

GeneratorSet sp_chevalley_basis(int n, const JValuation& v) {
    int ar = v.size(), N = 2 * n;
    auto p = [&](int k) { return N - k; };  // 0-based image of 1-based k'
    auto e = [&](int a, int b) { return PMatrix::unit(N, a, b, ar); };
    GeneratorSet g{GroupKind::C_sp, n, v, {}};
    for (int i = 1; i <= n; ++i) {
        PMatrix h = e(i - 1, i - 1) - e(p(i), p(i));
        if (i < n) h = h - e(i, i) + e(p(i + 1), p(i + 1));
        g.gens.push_back({"H" + std::to_string(i), h});
    }
    for (int i = 1; i <= n; ++i) {
        Pim ji = v.j(i);
        PMatrix xp(N, N, ar), xm(N, N, ar);
        if (i < n) {
            xp = e(i - 1, i) - e(p(i + 1), p(i));
            xm = e(i, i - 1) - e(p(i), p(i + 1));
        } else {
            xp = e(n - 1, n);
            xm = e(n, n - 1);
        }
        g.gens.push_back({"X" + std::to_string(i) + "+", xp * ji});
        g.gens.push_back({"X" + std::to_string(i) + "-", xm * ji});
    }
    return g;
}

int lambda_index(int mu, int nu, int n) {
    if (mu < 0 || mu >= nu || nu > n) throw std::invalid_argument("lambda_index needs 0 <= mu < nu <= n");
    return nu + mu * (n - 1) - mu * (mu - 1) / 2;
}

PMatrix general_element(const std::vector<Scalar>& r, const std::vector<Scalar>& s,
                        const std::vector<Scalar>& w, int n, const JValuation& v) {
    std::size_t pairs = static_cast<std::size_t>(n * (n + 1) / 2);
    if (r.size() != pairs || s.size() != pairs || w.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("general_element coefficient lengths must be n(n+1)/2, n(n+1)/2, n");
    PMatrix z(n + 1, n + 1, v.size());
    for (int mu = 0; mu <= n; ++mu)
        for (int nu = mu + 1; nu <= n; ++nu) {
            int l = lambda_index(mu, nu, n) - 1;
            if (!r[l].is_zero()) z += u_Q(mu, nu, n, v) * r[l];
            if (!s[l].is_zero()) z += u_L(mu, nu, n, v) * s[l];
        }
    for (int k = 1; k <= n; ++k)
        if (!w[k - 1].is_zero()) z += u_P(k, n, v) * w[k - 1];
    return z;
}

bool check_j_orthogonality(const PMatrix& a, const JValuation& v) {
    if (!a.square()) return false;
    PMatrix id = PMatrix::identity(a.rows(), a.arity() ? a.arity() : v.size());
    return a * a.transpose() == id && a.transpose() * a == id;
}

PMatrix symplectic_form(int n, int arity) {
    int N = 2 * n;
    PMatrix c(N, N, arity);
    for (int i = 0; i < N; ++i) c(i, N - 1 - i) = Pim(arity, Scalar(i < n ? 1 : -1));
    return c;
}

bool check_symplectic(const PMatrix& t, const JValuation& v) {
    if (!t.square() || t.rows() % 2) return false;
    PMatrix c = symplectic_form(t.rows() / 2, t.arity() ? t.arity() : v.size());
    return t.transpose() * c * t == c;
}

PMatrix so_form(int n, const JValuation& v) {
    PMatrix f(n + 1, n + 1, v.size());
    for (int k = 0; k <= n; ++k) f(k, k) = jprod(1, k, 2, v);
    return f;
}

PMatrix u_form(int n, const JValuation& v) { return so_form(n, v); }

PMatrix sp_root_form(int n, const JValuation& v) {
    PMatrix f(2 * n, 2 * n, v.size());
    for (int k = 1; k <= n; ++k) {
        Pim d = jprod(2, k, 2, v);
        f(k - 1, k - 1 + n) = d;
        f(k - 1 + n, k - 1) = -d;
    }
    return f;
}

bool preserves_form(const PMatrix& g, const PMatrix& f, bool hermitian) {
    PMatrix gt = hermitian ? g.conj_transpose() : g.transpose();
    return (gt * f + f * g).is_zero();
}

PMatrix anti_diagonal(int N, int arity) {
    PMatrix c(N, N, arity);
    for (int i = 0; i < N; ++i) c(i, N - 1 - i) = one(arity);
    return c;
}

static void check_permutation(const std::vector<int>& sigma, int N) {
    if (static_cast<int>(sigma.size()) != N) throw std::invalid_argument("permutation has wrong length");
    std::vector<int> s = sigma;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < N; ++i)
        if (s[i] != i + 1) throw std::invalid_argument("not a permutation of 1..N");
}

PMatrix symplectic_D_matrix(int N, const std::vector<int>& sigma) {
    if (N < 2) throw std::invalid_argument("symplectic_D_matrix needs N >= 2");
    check_permutation(sigma, N);
    int n = N / 2;
    Scalar h = Scalar::sqrt2() * Scalar::frac(1, 2);  // 1/sqrt2
    Scalar i = Scalar::i();
    PMatrix d(N, N, 0);
    int off = N % 2;  // middle row/column for odd N
    for (int k = 0; k < n; ++k) {
        int kt = n - 1 - k;  // position of the anti-diagonal entry of C~0
        // upper rows: [I, (0), -i C~0]
        d(k, k) = Pim(0, h);
        d(k, n + off + kt) = Pim(0, -i * h);
        // lower rows: [C~0, (0), i I]
        d(n + off + k, kt) = Pim(0, h);
        d(n + off + k, n + off + k) = Pim(0, i * h);
    }
    if (off) d(n, n) = Pim(0, Scalar(1));
    PMatrix vs(N, N, 0);
    for (int r = 0; r < N; ++r) vs(r, sigma[r] - 1) = Pim(0, Scalar(1));
    return d * vs;
}

PMatrix ck_orthogonal_matrix(const std::vector<std::vector<Scalar>>& a, const JValuation& v) {
    int N = static_cast<int>(a.size());
    PMatrix m(N, N, v.size());
    for (int k = 0; k < N; ++k) {
        if (static_cast<int>(a[k].size()) != N) throw std::invalid_argument("ragged matrix");
        for (int p = 0; p < N; ++p) m(k, p) = interval_product(k + 1, p + 1, v) * a[k][p];
    }
    return m;
}

static PMatrix with_arity(const PMatrix& m, int arity) {
    PMatrix r(m.rows(), m.cols(), arity);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            for (const auto& [mask, c] : m(i, j).terms()) r(i, j) += Pim::monomial(arity, mask, c);
    return r;
}

PMatrix symplectic_basis_conjugate(const PMatrix& a, const std::vector<int>& sigma, const JValuation& v,
                                   bool require_orthogonal) {
    if (require_orthogonal && !check_j_orthogonality(a, v))
        throw std::invalid_argument("matrix is not j-orthogonal");
    int ar = a.arity() ? a.arity() : v.size();
    PMatrix d = with_arity(symplectic_D_matrix(a.rows(), sigma), ar);
    return d * a * d.inverse();
}

Pim ck_quadratic_form(const std::vector<Pim>& z, const JValuation& v) {
    int n = static_cast<int>(z.size()) - 1;
    if (n != v.size()) throw std::invalid_argument("vector length must be n+1");
    Pim sum(v.size());
    for (int k = 0; k <= n; ++k) sum += z[k] * z[k].conj() * jprod(1, k, 2, v);
    return sum;
}

std::vector<int> fiber_structure(const JValuation& v) { return v.iota_indices(); }

std::vector<std::pair<int, int>> invariant_subforms(int n, const JValuation& v) {
    std::vector<std::pair<int, int>> out;
    int start = 0;
    for (int k : v.iota_indices()) {
        out.emplace_back(start, k - 1);
        start = k;
    }
    out.emplace_back(start, n);
    return out;
}

}  // namespace ck
