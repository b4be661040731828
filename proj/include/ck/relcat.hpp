#pragma once

// Linear relations over Q(i, sqrt2): the categories GA and GD, the isotropic
// categories B, C, D, and the ordered-category data lambda, mu, theta, U.

#include "ck/linalg.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ck {

// row space of a matrix, stored in reduced row echelon form
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}
    static Subspace span(int ambient, const std::vector<std::vector<Scalar>>& rows);
    static Subspace from_matrix(const SMatrix& rows);
    static Subspace whole(int ambient);
    // coordinate vectors e_k, k in idx
    static Subspace coordinate(int ambient, const std::vector<int>& idx);

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const SMatrix& basis() const { return basis_; }
    std::vector<Scalar> row(int i) const { return basis_.row(i); }

    bool contains(const std::vector<Scalar>& v) const;
    bool contains(const Subspace& o) const;
    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    Subspace operator+(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    // {x : <x, s> = 0 for all s}, standard pairing
    Subspace annihilator() const;
    // image under x -> x M (M is ambient x k)
    Subspace image(const SMatrix& m) const;
    std::string str() const;

private:
    int ambient_ = 0;
    SMatrix basis_;
};

class BilinearForm {
public:
    BilinearForm() = default;
    BilinearForm(SMatrix gram, bool skew);
    const SMatrix& gram() const { return gram_; }
    bool skew() const { return skew_; }
    int dim() const { return gram_.rows(); }
    Scalar operator()(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const;

private:
    SMatrix gram_;
    bool skew_ = false;
};

enum class Category { GA, GD, A, B, C, D };
std::string category_name(Category c);
Category parse_category(const std::string& s);

// Standard bases:
//   GD, D (rank n): e_1..e_n, f_1..f_n with {e_i, f_j} = delta_ij
//   B (rank n):     e_1..e_n, f_1..f_n, l with {l, l} = 1
//   C (rank n):     e_1..e_n, f_1..f_n with {e_i, f_j} = -{f_j, e_i} = delta_ij
//   GA (dim d), A (rank n, dim n+1): no form
struct CKObject {
    Category cat = Category::GA;
    int dim = 0;
    int rank = 0;
    std::optional<BilinearForm> form;
    std::optional<Subspace> plus;   // V_+ = span(e)
    std::optional<Subspace> minus;  // V_- = span(f)
};

CKObject ga_object(int dim);
CKObject a_object(int rank);
CKObject gd_object(int rank);
CKObject b_object(int rank);
CKObject c_object(int rank);
CKObject d_object(int rank);
CKObject make_object(Category c, int rank);

class LinearRelation {
public:
    LinearRelation() = default;
    static LinearRelation null(int source, int target);
    static LinearRelation from_subspace(int source, int target, Subspace s);
    // {(v, A v)}, A is target x source
    static LinearRelation graph(const SMatrix& a);
    static LinearRelation identity(int d);

    bool is_null() const { return null_; }
    int source() const { return source_; }
    int target() const { return target_; }
    int dim() const { return space_.dim(); }
    const Subspace& space() const;
    bool operator==(const LinearRelation& o) const;
    bool operator!=(const LinearRelation& o) const { return !(*this == o); }
    std::string str() const;

private:
    bool null_ = false;
    int source_ = 0, target_ = 0;
    Subspace space_;
};

// all throw std::invalid_argument on a null relation
Subspace rel_kernel(const LinearRelation& p);  // {v : (v,0) in P}
Subspace rel_indef(const LinearRelation& p);   // {w : (0,w) in P}
Subspace rel_domain(const LinearRelation& p);  // projection to V
Subspace rel_image(const LinearRelation& p);   // projection to W

// set-theoretic product {(v,y) : (v,w) in P, (w,y) in Q}, no null rules
LinearRelation relation_product(const LinearRelation& q, const LinearRelation& p);
LinearRelation compose_GA(const LinearRelation& q, const LinearRelation& p);
LinearRelation compose_GD(const LinearRelation& q, const LinearRelation& p);
// GA rule for GA and A, GD rule for GD, B, C, D
LinearRelation compose(Category c, const LinearRelation& q, const LinearRelation& p);

// P' = Ann(P^0) in V' + W', P^0 = {(v,-w)}
LinearRelation dual_relation(const LinearRelation& p);
LinearRelation adjoint_relation(const LinearRelation& p);

// {(v,w),(v',w')} = {v,v'} - {w,w'}; throws if the symmetry tags differ
BilinearForm difference_form(const CKObject& v, const CKObject& w);
bool is_isotropic(const Subspace& s, const BilinearForm& f);
bool is_maximal_isotropic(const Subspace& s, const BilinearForm& f);

enum class Parity { Even, Odd };
std::string parity_name(Parity p);
// parity of codim(H1 ∩ H2) in H1; throws if either input is not maximal isotropic
Parity grassmann_component(const Subspace& h1, const Subspace& h2, const BilinearForm& f);

// V_+ + W_-, the marked component of D morphisms
Subspace d_reference(const CKObject& v, const CKObject& w);
bool is_D_morphism(const LinearRelation& p, const CKObject& v, const CKObject& w);
// membership in Mor(V, W) for the object's category (null counts as a morphism)
bool is_morphism(const LinearRelation& p, const CKObject& v, const CKObject& w);

// hyperbolic pairs (p_k, q_k) of V + W under the difference form:
// {p_k, q_l} = delta_kl, {p_k, p_l} = {q_k, q_l} = 0
std::vector<std::pair<std::vector<Scalar>, std::vector<Scalar>>> witt_basis(const CKObject& v, const CKObject& w);

// random data; entries are small Gaussian integers, zero with probability `sparsity`
Scalar random_scalar(std::mt19937_64& rng, double sparsity = 0.0, bool gaussian = true);
SMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, double sparsity = 0.0, bool gaussian = true);
LinearRelation random_relation(std::mt19937_64& rng, int source, int target);
// random maximal isotropic subspace of V + W; swaps random hyperbolic pairs and fills a random
// skew (symmetric form) or symmetric (skew form) block
LinearRelation random_isotropic_morphism(std::mt19937_64& rng, const CKObject& v, const CKObject& w,
                                         double sparsity = 0.5);

// purely ordered category with lambda_{n,n+1}, mu_{n+1,n}
class OrderedCategory {
public:
    explicit OrderedCategory(Category c);
    Category category() const { return cat_; }
    CKObject object(int rank) const;
    LinearRelation lambda(int rank) const;   // V_rank -> V_{rank+1}
    LinearRelation mu(int rank) const;       // V_{rank+1} -> V_rank
    LinearRelation lambda_chain(int from, int to) const;  // from < to
    LinearRelation mu_chain(int from, int to) const;      // from > to
    // theta_tau^sigma = lambda_{sigma tau} mu_{tau sigma}, an endomorphism of V_tau
    LinearRelation theta(int tau, int sigma) const;
    // U_alpha^beta(P) = lambda_{alpha beta} P mu_{beta alpha}
    LinearRelation end_embedding(const LinearRelation& p, int alpha, int beta) const;
    LinearRelation compose(const LinearRelation& q, const LinearRelation& p) const;
    LinearRelation identity(int rank) const;
    // random endomorphism relation of V_rank in this category
    LinearRelation random_endomorphism(std::mt19937_64& rng, int rank) const;

private:
    Category cat_;
};

}  // namespace ck
