#include "ck/rootsys.hpp"

#include <doctest.h>

using namespace ck;

TEST_CASE("root counts") {
    for (int m = 1; m <= 4; ++m) {
        CHECK(root_system(GroupKind::B_soOdd, 2 * m).size() == static_cast<std::size_t>(2 * m * m));
        CHECK(root_system(GroupKind::C_sp, m).size() == static_cast<std::size_t>(2 * m * m));
        CHECK(root_system(GroupKind::U_unitary, m).size() == static_cast<std::size_t>(m * (m + 1)));
        if (m >= 2) CHECK(root_system(GroupKind::D_soEven, 2 * m - 1).size() == static_cast<std::size_t>(2 * m * (m - 1)));
    }
}

TEST_CASE("labels round-trip") {
    for (auto k : {GroupKind::B_soOdd, GroupKind::C_sp, GroupKind::U_unitary})
        for (const auto& r : root_system(k, 4)) {
            CHECK(RootLabel::parse(r.str()) == r);
            CHECK(Element::parse(Element::E(r).str()) == Element::E(r));
            CHECK(is_root(k, 4, -r));
        }
    CHECK(Element::parse("H2") == Element::H(2));
    CHECK(unitary_root(0, 3).str() == "e0-e3");
}

TEST_CASE("Cartan-Weyl closure at small rank") {
    CHECK(verify_cartan_weyl(GroupKind::B_soOdd, 4, JValuation::parse("1,iota,1,iota")).pass());
    CHECK(verify_cartan_weyl(GroupKind::D_soEven, 3, JValuation::parse("iota,1,1")).pass());
    CHECK(verify_cartan_weyl(GroupKind::C_sp, 3, JValuation::parse("1,iota,1")).pass());
    CHECK(verify_cartan_weyl(GroupKind::U_unitary, 2, JValuation::parse("i,iota")).pass());
    CHECK(verify_cartan_weyl(GroupKind::SU_special, 2, JValuation::parse("iota,i"), RootModel::Balanced).pass());
}

TEST_CASE("a wrong predictor is reported with the offending pair") {
    JValuation v = JValuation::ones(2);
    auto rep = verify_cartan_weyl(GroupKind::B_soOdd, 2, v, RootModel::Literal, [&](const Element& x, const Element& y) {
        PMatrix p = predicted_commutator(GroupKind::B_soOdd, x, y, 2, v);
        return x.cartan && !y.cartan ? -p : p;
    });
    CHECK_FALSE(rep.pass());
    REQUIRE_FALSE(rep.mismatches.empty());
    CHECK(rep.mismatches[0].x == "H1");
}

TEST_CASE("predicted brackets are antisymmetric") {
    JValuation v = JValuation::parse("1,iota,1,1");
    auto basis = cartan_weyl_basis(GroupKind::B_soOdd, 4);
    for (const auto& x : basis)
        for (const auto& y : basis)
            CHECK(predicted_commutator(GroupKind::B_soOdd, x, y, 4, v) == -predicted_commutator(GroupKind::B_soOdd, y, x, 4, v));
}

TEST_CASE("Cartan matrices") {
    for (int m = 1; m <= 4; ++m) {
        CHECK(cartan_matrix(GroupKind::U_unitary, m).det() == m + 1);
        CHECK(cartan_matrix(GroupKind::C_sp, m).check_properties());
    }
    CHECK(cartan_matrix(GroupKind::B_soOdd, 4).det() == 2);
    CHECK(cartan_matrix(GroupKind::C_sp, 3).det() == 2);
    CHECK(cartan_matrix(GroupKind::D_soEven, 5).det() == 4);
    CHECK(dynkin_diagram(GroupKind::B_soOdd, 6).type == "B3");
    CHECK(dynkin_diagram(GroupKind::D_soEven, 7).type == "D4");
}
