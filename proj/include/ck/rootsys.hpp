#pragma once

// Cartan subalgebras, roots, root vectors and the closed-form
// Cartan-Weyl commutators of the Cayley-Klein families.

#include "ck/groups.hpp"
#include "ck/matrix.hpp"
#include "ck/pimenov.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace ck {

// sum of c * e_index, sorted by index; c in {+-1, +-2}.
// Unitary roots e_a - e_b are stored as {(a,+1), (b,-1)} sorted by index.
struct RootLabel {
    std::vector<std::pair<int, int>> parts;

    int coef(int k) const;
    bool operator==(const RootLabel& o) const { return parts == o.parts; }
    bool operator<(const RootLabel& o) const { return parts < o.parts; }
    RootLabel operator-() const;
    // "e1-e2", "-2e3", "e0-e4"
    std::string str() const;
    static RootLabel parse(const std::string& text);
};

// e_a - e_b of the unitary families
RootLabel unitary_root(int a, int b);

// one basis element of the Cartan-Weyl basis: H_k or E_alpha
struct Element {
    bool cartan = false;
    int k = 0;
    RootLabel root;

    static Element H(int k) { return Element{true, k, {}}; }
    static Element E(RootLabel r) { return Element{false, 0, std::move(r)}; }
    bool operator==(const Element& o) const { return cartan == o.cartan && k == o.k && root == o.root; }
    bool operator<(const Element& o) const;
    // "H1" (or "Ht2" for the traceless unitary Cartan) / "E[e1-e2]"
    std::string str() const;
    static Element parse(const std::string& text);
};

// Literal: the root vectors as written for the unitary family, j-weight on
// the upper triangle only.  Balanced: (mu,nu) e_{mu nu} in both directions,
// the same Cartan-Weyl table and nonzero under every valuation.
enum class RootModel { Literal, Balanced };

int cartan_rank(GroupKind kind, int n);
// 1..m for so/sp, 0..n for u, 1..n for su/sl
std::vector<int> cartan_indices(GroupKind kind, int n);

struct CartanBasis {
    GroupKind kind;
    int n = 0;
    std::vector<int> indices;
    std::vector<LabeledMatrix> elements;
};

PMatrix cartan_element(GroupKind kind, int k, int n, const JValuation& v);
CartanBasis cartan_basis(GroupKind kind, int n, const JValuation& v);
// throws std::logic_error if two elements fail to commute
void check_cartan_commuting(const CartanBasis& b);

std::vector<RootLabel> root_system(GroupKind kind, int n);
bool is_root(GroupKind kind, int n, const RootLabel& r);

struct RootVector {
    RootLabel label;
    PMatrix matrix;
};

// throws std::invalid_argument for a label outside the root system
RootVector root_vector(GroupKind kind, const RootLabel& label, int n, const JValuation& v,
                       RootModel model = RootModel::Literal);

// Cartan elements first, then roots in root_system order
std::vector<Element> cartan_weyl_basis(GroupKind kind, int n);
PMatrix element_matrix(GroupKind kind, const Element& e, int n, const JValuation& v,
                       RootModel model = RootModel::Literal);

// alpha(H_k)
Pim root_value(GroupKind kind, const RootLabel& r, int k, int n, const JValuation& v);

using Combination = std::vector<std::pair<Pim, Element>>;
// right-hand side of the closed-form commutator [x, y]; empty when zero
Combination predicted_bracket(GroupKind kind, const Element& x, const Element& y, int n, const JValuation& v);
PMatrix predicted_commutator(GroupKind kind, const Element& x, const Element& y, int n, const JValuation& v,
                             RootModel model = RootModel::Literal);
std::string combination_str(const Combination& c);

struct CwMismatch {
    std::string x, y;
    PMatrix computed, predicted;
};

struct CwReport {
    GroupKind kind;
    int n = 0;
    JValuation v;
    std::size_t pairs = 0;
    std::vector<CwMismatch> mismatches;
    bool pass() const { return mismatches.empty(); }
};

using Predictor = std::function<PMatrix(const Element&, const Element&)>;
// every ordered pair of basis elements; a custom predictor replaces the closed forms
CwReport verify_cartan_weyl(GroupKind kind, int n, const JValuation& v, RootModel model = RootModel::Literal,
                            const Predictor& predictor = {});

// simple roots in Euclidean coordinates (index 0 is e_0 for the unitary family)
std::vector<std::vector<int>> simple_roots(GroupKind kind, int n);

struct CartanMatrix {
    std::vector<std::vector<int>> a;
    int size() const { return static_cast<int>(a.size()); }
    long det() const;
    // diagonal 2, off-diagonal in {0..-4}, A_km A_mk < 4, symmetric zeros, det > 0
    bool check_properties(std::string* why = nullptr) const;
    std::string str() const;
};

struct DynkinEdge {
    int a, b;
    int multiplicity;  // A_ab * A_ba
    int longer;        // node with the longer root, -1 when equal
};

struct DynkinDiagram {
    std::string type;  // "A3", "B2", ...
    std::vector<int> weights;  // <alpha, alpha>
    std::vector<DynkinEdge> edges;
    std::string ascii() const;
};

CartanMatrix cartan_matrix(GroupKind kind, int n);
DynkinDiagram dynkin_diagram(GroupKind kind, int n);

}  // namespace ck
