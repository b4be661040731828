#pragma once

// Spin and Berezin operators, the fundamental representations, and the
// representation harness for ordered categories (cyclic spans, intertwiners,
// lowering functor).

#include "ck/grassmann.hpp"
#include "ck/relcat.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ck {

// cap on the dimension 2^n of any exterior algebra; default 1024, CK_ALGEBRA_MAX_DIM overrides
std::size_t max_exterior_dim();
void set_max_exterior_dim(std::size_t cap);

// first nonzero entry in row-major order scaled to 1
SMatrix normalize_projective(const SMatrix& m);
// lambda with a = lambda * b, if any (b nonzero)
std::optional<Scalar> proportionality(const SMatrix& a, const SMatrix& b);

struct SpinOperator {
    SMatrix matrix;        // 2^rank(W) x 2^rank(V), mask basis
    int solution_dim = 0;  // dimension of the intertwining solution space
    int epsilon = 1;       // S a(v) = epsilon a(w) S; -1 only for the odd B component
};

// basis of {S : S a_V(v) = epsilon a_W(w) S for all (v, w) in P}
std::vector<SMatrix> intertwining_solutions(const LinearRelation& p, const CKObject& v, const CKObject& w,
                                            int epsilon = 1);
// GD/D morphisms; throws if the solution space is not one-dimensional; null gives the zero operator
SpinOperator spin_operator(const LinearRelation& p, const CKObject& v, const CKObject& w);
// B morphisms between odd objects; picks the sign epsilon for which a solution exists
SpinOperator spin_B(const LinearRelation& p, const CKObject& v, const CKObject& w);

// kernel variables: xi_1..xi_m (output) then etabar_1..etabar_n (input);
// entry (T, S) of the operator is (-1)^{|T|(|S|+1)} times the coefficient of xi_T etabar_{S reversed}
SMatrix kernel_operator(const GrassmannElement& k, int m, int n);
GrassmannElement operator_kernel(const SMatrix& op);

struct BerezinKernel {
    int m = 0, n = 0;
    Scalar scale = Scalar(1);
    // affine factors: entry 0 is the constant, then m xi-coefficients, then n etabar-coefficients
    std::vector<std::vector<Scalar>> factors;
    SMatrix K, L, M;  // m x m skew, m x n, n x n
    std::vector<Scalar> p, q;
    // scale * prod factors * exp(1/2 (xi etabar 1) [[K, L, p^t], [-L^t, M, q^t], [p, q, 0]] (xi etabar 1)^t)
    GrassmannElement kernel() const;
};
BerezinKernel empty_kernel(int m, int n);
SMatrix berezin_operator(const BerezinKernel& k);

// lambda * prod(linear factors) * exp(quadratic + linear) test
struct BerezinShape {
    bool berezin = false;
    int factors = 0;
    std::string detail;
};
BerezinShape berezin_shape(const GrassmannElement& g);

// M(V) = V + V' with {(v1,f1),(v2,f2)} = f1(v2) + f2(v1)
CKObject M_functor(const CKObject& v);
// P + P' inside M(V) + M(W)
LinearRelation M_morphism(const LinearRelation& p);
// Lambda(P) = Spin(P + P'), Lambda(V) -> Lambda(W); null gives 0
SMatrix fundamental_GA(const LinearRelation& p);
// block of a Lambda operator between grades
SMatrix grade_block(const SMatrix& op, int n_src, int k_src, int n_tgt, int k_tgt);

// representations of ordered categories, by rank
struct CategoryRep {
    Category cat = Category::A;
    std::string name;
    std::function<int(int)> dim;
    std::function<SMatrix(const LinearRelation&)> act;  // dim(target) x dim(source); zero for null
};

int rank_of(Category c, int object_dim);
// A with A P = graph, if P is the graph of an operator
std::optional<SMatrix> graph_operator(const LinearRelation& p);

CategoryRep self_rep();  // category A
CategoryRep exterior_power_rep(const CategoryRep& r, int k);
CategoryRep tensor_rep(const CategoryRep& a, const CategoryRep& b);
CategoryRep direct_sum_rep(const CategoryRep& a, const CategoryRep& b);
// invariant subspace family, vectors as rows
CategoryRep quotient_rep(const CategoryRep& r, std::function<Subspace(int)> sub, std::string name);
// restriction of Lambda to B, C or D, grade [dim/2] - j + 1
CategoryRep fundamental_grade_rep(Category c, int j);
// q = sum e_i ^ f_i in Lambda^2 of the rank-n C object (mask basis of Lambda(V))
GrassmannElement symplectic_invariant(int rank);
// q ^ Lambda^{k-2}(V) inside Lambda^k(V), graded_basis coordinates
Subspace q_wedge_image(int rank, int k);
// Pi_j for category C: L_j / q L_{j+2}
CategoryRep c_quotient_rep(int j);

// action of End(V_rank)
struct SemigroupRep {
    Category cat = Category::A;
    int rank = 0;
    int dim = 0;
    std::function<SMatrix(const LinearRelation&)> act;
};
SemigroupRep restrict_rep(const CategoryRep& r, int rank);

// graphs of elementary generators of Aut(V_rank) (A and C only), optionally with theta_rank^{rank-1}
std::vector<LinearRelation> aut_generators(Category c, int rank, bool with_theta = true);

// closure of span(seeds) under the generator operators; seeds as rows
Subspace cyclic_span(const SemigroupRep& r, const std::vector<std::vector<Scalar>>& seeds,
                     const std::vector<LinearRelation>& gens);
// dim {X : X a(P) = b(P) X for all generators}
int intertwiner_space(const SemigroupRep& a, const SemigroupRep& b, const std::vector<LinearRelation>& gens);

enum class LoweringBranch { Zero, ZeroExtension, MaximalExtension };
std::string branch_name(LoweringBranch b);

struct LoweredRep {
    SemigroupRep rep;       // representation of End(V_alpha)
    SMatrix basis;          // columns span im tau(theta_beta^alpha) in the parent space
    LoweringBranch branch;  // zero-extension when theta_alpha^{alpha-1} acts as 0
};

// F_alpha^beta: P -> tau(U_alpha^beta(P)) restricted to im tau(theta_beta^alpha)
LoweredRep lowering_functor(const SemigroupRep& r, int alpha);

}  // namespace ck
