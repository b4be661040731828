#include "ck/relcat.hpp"

#include <doctest.h>

#include <random>

using namespace ck;

TEST_CASE("composition of graphs is the graph of the product") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
        SMatrix a = random_matrix(rng, 3, 2), b = random_matrix(rng, 4, 3);
        CHECK(compose_GA(LinearRelation::graph(b), LinearRelation::graph(a)) == LinearRelation::graph(b * a));
    }
}

TEST_CASE("identity and null") {
    std::mt19937_64 rng(2);
    auto p = random_relation(rng, 3, 4);
    CHECK(compose_GA(LinearRelation::identity(4), p) == p);
    CHECK(compose_GA(p, LinearRelation::identity(3)) == p);
    auto z = LinearRelation::null(4, 2);
    CHECK(compose_GA(z, p).is_null());
    CHECK_THROWS_AS(rel_kernel(z), std::invalid_argument);
}

TEST_CASE("GA null rule on a hand example") {
    // P = {(v, 0)} from C^1 to C^1 and Q = {(0, y)}: ker Q meets Indef P trivially but im P + D(Q) = 0 != W
    auto p = LinearRelation::from_subspace(1, 1, Subspace::coordinate(2, {0}));
    auto q = LinearRelation::from_subspace(1, 1, Subspace::coordinate(2, {1}));
    CHECK(compose_GA(q, p).is_null());
    CHECK_FALSE(relation_product(q, p).is_null());
}

TEST_CASE("dual of a graph is the transpose graph read backwards") {
    std::mt19937_64 rng(3);
    SMatrix a = random_matrix(rng, 3, 2);
    // P' = {(A^t g, g)}
    std::vector<std::vector<Scalar>> rows;
    for (int k = 0; k < 3; ++k) {
        std::vector<Scalar> g(3);
        g[k] = Scalar(1);
        std::vector<Scalar> row;
        for (int i = 0; i < 2; ++i) {
            Scalar s;
            for (int j = 0; j < 3; ++j) s += a(j, i) * g[j];
            row.push_back(s);
        }
        row.insert(row.end(), g.begin(), g.end());
        rows.push_back(row);
    }
    CHECK(dual_relation(LinearRelation::graph(a)) == LinearRelation::from_subspace(2, 3, Subspace::span(5, rows)));
}

TEST_CASE("adjoint of an invertible graph is the inverse graph") {
    std::mt19937_64 rng(4);
    SMatrix a = random_matrix(rng, 3, 3);
    auto inv = inverse(a);
    REQUIRE(inv);
    CHECK(adjoint_relation(LinearRelation::graph(a)) == LinearRelation::graph(*inv));
}

TEST_CASE("isotropic morphisms and components") {
    std::mt19937_64 rng(5);
    for (auto cat : {Category::GD, Category::B, Category::C, Category::D}) {
        auto v = make_object(cat, 2), w = make_object(cat, 1);
        auto f = difference_form(v, w);
        auto hyper = witt_basis(v, w);
        for (std::size_t k = 0; k < hyper.size(); ++k)
            for (std::size_t l = 0; l < hyper.size(); ++l) {
                CHECK(f(hyper[k].first, hyper[l].second) == Scalar(k == l ? 1 : 0));
                CHECK(f(hyper[k].first, hyper[l].first).is_zero());
            }
        for (int t = 0; t < 10; ++t) {
            auto p = random_isotropic_morphism(rng, v, w);
            CHECK(is_maximal_isotropic(p.space(), f));
            // D keeps only the component of V_+ + W_-
            CHECK(is_morphism(p, v, w) == (cat != Category::D || is_D_morphism(p, v, w)));
            CHECK(grassmann_component(p.space(), p.space(), f) == Parity::Even);
        }
    }
    auto v = gd_object(1);
    CHECK(is_D_morphism(LinearRelation::identity(2), v, v));
}

TEST_CASE("ordered categories: lambda, mu, theta") {
    for (auto cat : {Category::A, Category::B, Category::C, Category::D}) {
        OrderedCategory oc(cat);
        for (int r = 1; r <= 3; ++r) {
            CHECK(oc.compose(oc.mu(r), oc.lambda(r)) == oc.identity(r));
            auto th = oc.theta(r + 1, r);
            CHECK(oc.compose(th, th) == th);
        }
    }
}
