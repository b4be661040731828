#include "ck/grassmann.hpp"
#include "ck/repkit.hpp"

#include <doctest.h>

#include <random>

using namespace ck;

TEST_CASE("Grassmann multiplication") {
    auto x1 = GrassmannElement::generator(3, 0), x2 = GrassmannElement::generator(3, 1);
    CHECK(x1 * x2 == (x2 * x1) * Scalar(-1));
    CHECK((x1 * x1).is_zero());
    auto one = GrassmannElement::constant(3, Scalar(1));
    auto q = x1 * x2;
    CHECK(grassmann_exp(q) == one + q);
    CHECK(grassmann_exp(grassmann_log1p(x1 + q)) == one + x1 + q);
    CHECK(merge_sign(0b10, 0b01) == -1);
}

TEST_CASE("compound matrices are multiplicative") {
    std::mt19937_64 rng(6);
    for (int k = 0; k <= 3; ++k) {
        SMatrix a = random_matrix(rng, 3, 3), b = random_matrix(rng, 3, 3);
        CHECK(compound_matrix(a * b, k) == compound_matrix(a, k) * compound_matrix(b, k));
    }
    SMatrix a = random_matrix(rng, 3, 3);
    CHECK(compound_matrix(a, 3)(0, 0) == det_bareiss(a));
}

TEST_CASE("canonical anticommutation relations") {
    const int n = 3;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            SMatrix c = creation_operator(n, i), a = annihilation_operator(n, j);
            SMatrix anti = c * a + a * c;
            CHECK(anti == (i == j ? SMatrix::identity(1 << n) : SMatrix(1 << n, 1 << n)));
            SMatrix cc = creation_operator(n, i) * creation_operator(n, j) + creation_operator(n, j) * creation_operator(n, i);
            CHECK(cc.is_zero());
        }
}

TEST_CASE("Spin of the identity and of GA graphs") {
    auto v = gd_object(2);
    auto s = spin_operator(LinearRelation::identity(4), v, v);
    CHECK(s.solution_dim == 1);
    CHECK(normalize_projective(s.matrix) == SMatrix::identity(4));
    // Lambda(A) is the direct sum of the compound matrices of A
    std::mt19937_64 rng(8);
    SMatrix a = random_matrix(rng, 2, 2);
    SMatrix op = fundamental_GA(LinearRelation::graph(a));
    auto l = proportionality(op, op);
    CHECK(l);
    for (int k = 0; k <= 2; ++k) {
        SMatrix blk = grade_block(op, 2, k, 2, k);
        auto lam = proportionality(blk, compound_matrix(a, k));
        CHECK(lam);
    }
}

TEST_CASE("kernels and operators are inverse") {
    std::mt19937_64 rng(9);
    SMatrix op = random_matrix(rng, 4, 8);
    CHECK(kernel_operator(operator_kernel(op), 2, 3) == op);
}

TEST_CASE("Berezin kernels") {
    auto k = empty_kernel(2, 2);
    k.K = SMatrix(2, 2);
    k.K(0, 1) = Scalar(1);
    k.K(1, 0) = Scalar(-1);
    k.L = SMatrix::identity(2);
    CHECK(berezin_shape(k.kernel()).berezin);
    CHECK(berezin_shape(operator_kernel(berezin_operator(k))).berezin);
}

TEST_CASE("exterior powers of the tautological representation") {
    auto r = exterior_power_rep(self_rep(), 2);
    CHECK(r.dim(3) == 6);
    auto low = lowering_functor(restrict_rep(r, 3), 2);
    CHECK(low.rep.dim == 3);
    CHECK(low.branch == LoweringBranch::MaximalExtension);
    auto top = lowering_functor(restrict_rep(exterior_power_rep(self_rep(), 4), 3), 2);
    CHECK(top.rep.dim == 0);
    CHECK(top.branch == LoweringBranch::Zero);
}

TEST_CASE("Lambda^j of category A is irreducible under the generators") {
    for (int j = 1; j <= 2; ++j) {
        auto r = restrict_rep(exterior_power_rep(self_rep(), j), 2);
        CHECK(intertwiner_space(r, r, aut_generators(Category::A, 2)) == 1);
    }
}

TEST_CASE("dimension cap") {
    auto saved = max_exterior_dim();
    set_max_exterior_dim(4);
    auto v = gd_object(3);
    CHECK_THROWS_AS(spin_operator(LinearRelation::identity(6), v, v), std::length_error);
    set_max_exterior_dim(saved);
}
