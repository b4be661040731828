#include "ck/contraction.hpp"

#include <doctest.h>

using namespace ck;

TEST_CASE("admissible parameters") {
    CHECK(admissible_indices(GroupKind::B_soOdd, 4) == std::vector<int>{2, 4});
    CHECK(admissible_indices(GroupKind::D_soEven, 5) == std::vector<int>{2, 4});
    CHECK(admissible_indices(GroupKind::C_sp, 3) == std::vector<int>{2, 3});
    CHECK(admissible_indices(GroupKind::U_unitary, 2) == std::vector<int>{1, 2});
    std::string why;
    CHECK_FALSE(is_admissible(GroupKind::B_soOdd, 4, {{3}, {}}, &why));
    CHECK(why.find("odd") != std::string::npos);
    CHECK_THROWS_AS(spec_valuation(GroupKind::B_soOdd, 4, {{4, 2}, {}}), std::invalid_argument);
}

TEST_CASE("decompositions of the orthogonal examples") {
    CHECK(predicted_decomposition(GroupKind::B_soOdd, 4, {{2}, {}}).str() == "T6 ⋉ (H1 ⊕ so(3;j3,j4))");
    CHECK(predicted_decomposition(GroupKind::B_soOdd, 4, {{4}, {}}).str() == "T4 ⋉ so(4;j1,j2,j3)");
    CHECK(predicted_decomposition(GroupKind::D_soEven, 5, {{2, 4}, {}}).str() == "T12 ⋉ (H1 ⊕ H2 ⊕ H3)");
    auto r = verify_decomposition(GroupKind::B_soOdd, 4, {{2, 4}, {}});
    CHECK(r.pass());
    CHECK_FALSE(r.radical_abelian);
    CHECK(r.lower_central == std::vector<int>{8, 2, 0});
}

TEST_CASE("every admissible contraction verifies at small rank") {
    for (auto [k, n] : std::vector<std::pair<GroupKind, int>>{{GroupKind::B_soOdd, 4}, {GroupKind::D_soEven, 3},
                                                              {GroupKind::U_unitary, 2}, {GroupKind::SU_special, 2},
                                                              {GroupKind::C_sp, 3}})
        for (const auto& spec : all_specs(k, n)) {
            auto r = verify_decomposition(k, n, spec);
            CHECK_MESSAGE(r.pass(), kind_name(k), " ", r.predicted.str());
        }
}

TEST_CASE("unitary radical dimension 2 k (n - k + 1)") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= n; ++k) {
            auto r = verify_decomposition(GroupKind::U_unitary, n, {{k}, {}});
            CHECK(r.dim_radical == 2 * k * (n - k + 1));
        }
}

TEST_CASE("block structure of the two contraction orders of so(5)") {
    auto a = radical_block_structure(GroupKind::B_soOdd, 4, {2, 4});
    CHECK(a.str() == "T8 = T6 ⋉ T2");
    REQUIRE(a.blocks.size() == 2);
    CHECK(a.blocks[0].ideal);
    CHECK_FALSE(a.blocks[1].ideal);
    auto b = radical_block_structure(GroupKind::B_soOdd, 4, {4, 2});
    REQUIRE(b.blocks.size() == 2);
    CHECK(b.blocks[0].elements.size() == 4);
    CHECK(b.blocks[1].elements.size() == 4);
    // [E_{e1-e2}, E_{e2}] is a nonzero multiple of E_{e1}, so the second block is not an ideal
    CHECK(b.blocks[0].ideal);
    CHECK_FALSE(b.blocks[1].ideal);
    CHECK(b.str() == "T8 = T4 ⋉ T̃4");
}

TEST_CASE("Gamma table of so(5) at iota 2") {
    JValuation v = JValuation::iota_at(4, {2});
    auto t = gamma_table(GroupKind::B_soOdd, 4, v);
    const GammaCell* c = t.cell(1, 2);
    REQUIRE(c);
    CHECK(c->killed);
    CHECK(c->value == "0");
    const GammaCell* d = t.cell(2, 3);
    REQUIRE(d);
    CHECK_FALSE(d->killed);
    CHECK(d->value == "j4^2");
}
