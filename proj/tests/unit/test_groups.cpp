#include "ck/groups.hpp"

#include <doctest.h>

using namespace ck;

TEST_CASE("algebra dimensions match the generator count") {
    for (int n = 1; n <= 5; ++n) {
        JValuation v = JValuation::ones(n);
        CHECK(static_cast<int>(so_generators(n, v).gens.size()) == n * (n + 1) / 2);
        CHECK(static_cast<int>(u_generators(n, v).gens.size()) == (n + 1) * (n + 1));
        CHECK(static_cast<int>(u_hermitian_generators(n, v, true).gens.size()) == (n + 1) * (n + 1) - 1);
        CHECK(algebra_dim(GroupKind::C_sp, n) == n * (2 * n + 1));
        CHECK(static_cast<int>(sp_chevalley_basis(n, v).gens.size()) == 3 * n);
    }
}

TEST_CASE("so generators preserve the Cayley-Klein form under every {1, iota} valuation") {
    for (int n = 1; n <= 4; ++n)
        for (int code = 0; code < (1 << n); ++code) {
            std::vector<int> idx;
            for (int k = 1; k <= n; ++k)
                if (code >> (k - 1) & 1) idx.push_back(k);
            JValuation v = JValuation::iota_at(n, idx);
            PMatrix f = so_form(n, v);
            for (const auto& g : so_generators(n, v).gens) CHECK(preserves_form(g.m, f, false));
        }
}

TEST_CASE("Hermitian-combination generators preserve the weighted unitary form") {
    JValuation v = JValuation::parse("i,iota");
    PMatrix f = u_form(2, v);
    for (const auto& g : u_hermitian_generators(2, v, false).gens) CHECK(preserves_form(g.m, f, true));
}

TEST_CASE("symplectic Chevalley basis preserves the anti-diagonal skew form") {
    JValuation v = JValuation::parse("1,iota,1");
    PMatrix f = symplectic_form(3, 3);
    for (const auto& g : sp_chevalley_basis(3, v).gens) CHECK(preserves_form(g.m, f, false));
}

TEST_CASE("j-orthogonality") {
    JValuation v = JValuation::parse("1,iota");
    CHECK(check_j_orthogonality(PMatrix::identity(3, 2), v));
    PMatrix x = so_generators(2, v).gens[0].m;
    CHECK(check_j_orthogonality(exp_nilpotent(x * Pim::iota(2, 1)), v));
    PMatrix bad = PMatrix::identity(3, 2);
    bad(0, 1) = Pim(2, Scalar(1));
    CHECK_FALSE(check_j_orthogonality(bad, v));
}

TEST_CASE("symplectic-basis helpers") {
    PMatrix c = anti_diagonal(3, 0);
    CHECK(c * c == PMatrix::identity(3, 0));
    PMatrix d = symplectic_D_matrix(3, {1, 2, 3});
    CHECK(d * d.inverse() == PMatrix::identity(3, 0));
}

TEST_CASE("fibers of the quadratic form") {
    JValuation v = JValuation::iota_at(4, {2, 4});
    CHECK(fiber_structure(v) == std::vector<int>{2, 4});
    auto sub = invariant_subforms(4, v);
    REQUIRE(sub.size() == 3);
    CHECK(sub[0] == std::pair<int, int>{0, 1});
    CHECK(sub[1] == std::pair<int, int>{2, 3});
    CHECK(sub[2] == std::pair<int, int>{4, 4});
}
