#pragma once

// Generators and defining conditions of the orthogonal, unitary and
// symplectic Cayley-Klein families.

#include "ck/matrix.hpp"
#include "ck/pimenov.hpp"

#include <string>
#include <vector>

namespace ck {

enum class GroupKind { A_sl, B_soOdd, C_sp, D_soEven, U_unitary, SU_special };

std::string kind_name(GroupKind k);
// so(N) with N = n+1: odd N is the B series
GroupKind so_kind(int n);
bool is_so(GroupKind k);
bool is_unitary(GroupKind k);  // u, su and sl share the unitary root data

// size of the defining matrices for library rank n
int matrix_size(GroupKind k, int n);
// number of j-parameters
int param_count(GroupKind k, int n);
// dimension of the algebra
int algebra_dim(GroupKind k, int n);

struct LabeledMatrix {
    std::string label;
    PMatrix m;
};

struct GeneratorSet {
    GroupKind kind;
    int n = 0;
    JValuation v;
    std::vector<LabeledMatrix> gens;
};

// X_{mu nu}: (nu,mu) = 1, (mu,nu) = -prod_{m=mu+1}^{nu} j_m^2, 0-based indices 0..n
PMatrix so_generator(int mu, int nu, int n, const JValuation& v);
GeneratorSet so_generators(int n, const JValuation& v);

// unit-matrix generators X_kk, X_{nu mu}, X_{mu nu} (mu < nu) of u(n+1;j)
GeneratorSet u_generators(int n, const JValuation& v);
// Hermitian combinations Q_{mu nu}, L_{mu nu}, P_k; traceless family when special
GeneratorSet u_hermitian_generators(int n, const JValuation& v, bool special);
PMatrix u_Q(int mu, int nu, int n, const JValuation& v);
PMatrix u_L(int mu, int nu, int n, const JValuation& v);
PMatrix u_P(int k, int n, const JValuation& v);

// Chevalley basis H_i, X_i^+, X_i^- of sp(n;j), 2n x 2n, k' = 2n+1-k
GeneratorSet sp_chevalley_basis(int n, const JValuation& v);

// lambda = nu + mu(n-1) - mu(mu-1)/2 for 0 <= mu < nu <= n
int lambda_index(int mu, int nu, int n);
// sum r_l Q_l + s_l L_l + w_k P_k
PMatrix general_element(const std::vector<Scalar>& r, const std::vector<Scalar>& s,
                        const std::vector<Scalar>& w, int n, const JValuation& v);

// A A^t = A^t A = I
bool check_j_orthogonality(const PMatrix& a, const JValuation& v);
// anti-diagonal skew form: (C)_{i,i'} = +1 for i <= n, -1 for i > n
PMatrix symplectic_form(int n, int arity);
bool check_symplectic(const PMatrix& t, const JValuation& v);

// invariant form matrices under v
PMatrix so_form(int n, const JValuation& v);   // diag(prod_{m=1}^{k} j_m^2)
PMatrix u_form(int n, const JValuation& v);    // same weights, used Hermitian
PMatrix sp_root_form(int n, const JValuation& v);  // [[0,D],[-D,0]], D_k = prod_{l=2}^{k} j_l^2
// G^t F + F G = 0, or G^+ F + F G = 0 when hermitian
bool preserves_form(const PMatrix& g, const PMatrix& f, bool hermitian);

// D_sigma = D V_sigma; sigma is a 1-based permutation of N symbols
PMatrix symplectic_D_matrix(int N, const std::vector<int>& sigma);
// anti-diagonal C_0 with (C_0)_{ik} = delta_{i,k'}
PMatrix anti_diagonal(int N, int arity);
// B_sigma = D_sigma A D_sigma^{-1}; throws std::invalid_argument if A fails j-orthogonality
PMatrix symplectic_basis_conjugate(const PMatrix& a, const std::vector<int>& sigma, const JValuation& v,
                                   bool require_orthogonal = true);
// (A(j))_{kp} = (k,p) a_{kp}
PMatrix ck_orthogonal_matrix(const std::vector<std::vector<Scalar>>& a, const JValuation& v);

// |z_0|^2 + sum_k |z_k|^2 prod_{m=1}^{k} j_m^2
Pim ck_quadratic_form(const std::vector<Pim>& z, const JValuation& v);
// nilpotent indices k_1 < ... < k_p
std::vector<int> fiber_structure(const JValuation& v);
// coordinate index ranges [a,b] of the p+1 invariant sub-forms
std::vector<std::pair<int, int>> invariant_subforms(int n, const JValuation& v);

}  // namespace ck
