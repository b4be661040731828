#pragma once

// Gamma tables, predicted Levi-Maltsev decompositions under nilpotent
// parameters, and their brute-force verification over flattened matrices.

#include "ck/groups.hpp"
#include "ck/linalg.hpp"
#include "ck/rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ck {

// (entry, iota-monomial) -> coefficient; key = (i*cols + j) * 2^arity + mask
SparseVec flatten(const PMatrix& m);

// root vectors used for contraction analysis: balanced for the unitary families
RootModel contraction_model(GroupKind kind);

struct GammaCell {
    int row = 0, col = 0;
    std::vector<Element> elements;
    JMonomial monomial;
    bool killed = false;
    std::string value;  // residual monomial, or "0"
};

struct GammaTable {
    GroupKind kind;
    int n = 0;
    JValuation v;
    int size = 0;                    // rows/cols of the grid
    std::vector<int> row_labels;     // Cartan index per row
    bool last_column = false;        // the so-odd column of one-index roots
    std::vector<std::string> diagonal;
    std::vector<GammaCell> cells;
    const GammaCell* cell(int row, int col) const;
    std::string ascii() const;
};

GammaTable gamma_table(GroupKind kind, int n, const JValuation& v);

struct ContractionSpec {
    std::vector<int> indices;        // parameters set to iota, increasing
    std::vector<JValue> residual;    // values of the other parameters; empty means all 1
};

// admissible nilpotent indices for the family
std::vector<int> admissible_indices(GroupKind kind, int n);
bool is_admissible(GroupKind kind, int n, const ContractionSpec& spec, std::string* why = nullptr);
// throws std::invalid_argument when inadmissible
JValuation spec_valuation(GroupKind kind, int n, const ContractionSpec& spec);
// every subset of the admissible indices, residual all 1
std::vector<ContractionSpec> all_specs(GroupKind kind, int n);

struct BlockDescriptor {
    std::string family;          // "so", "u", "su", "sp", or "H" for a lone Cartan element
    int size = 0;                // defining-matrix size of the block
    std::vector<int> params;     // residual j indices inside the block
    std::vector<Element> elements;
    std::string str() const;
};

struct LeviMaltsev {
    GroupKind kind;
    int n = 0;
    ContractionSpec spec;
    std::vector<Element> radical;
    std::vector<BlockDescriptor> blocks;
    std::vector<Element> semisimple() const;
    std::string str() const;  // "T6 ⋉ (H1 ⊕ so(3;j3,j4))"
};

LeviMaltsev predicted_decomposition(GroupKind kind, int n, const ContractionSpec& spec);

// structure constants of the Cartan-Weyl basis under v
struct StructureTable {
    GroupKind kind;
    int n = 0;
    JValuation v;
    std::vector<Element> basis;
    int rank = 0;                                // rank of the flattened basis
    std::vector<std::vector<SparseVec>> bracket; // coordinates of [x_a, x_b], key = basis index
    int index(const Element& e) const;
    bool independent() const { return rank == static_cast<int>(basis.size()); }
};

StructureTable structure_table(GroupKind kind, int n, const JValuation& v);

// span of index sets under the structure table
bool bracket_closed(const StructureTable& t, const std::vector<int>& a, const std::vector<int>& b,
                    const std::vector<int>& target);
// dimensions of the lower central series L_(k+1) = [L_(k), L], starting with dim L
std::vector<int> lower_central_series(const StructureTable& t, const std::vector<int>& sub);
std::vector<int> derived_series(const StructureTable& t, const std::vector<int>& sub);
// Killing form of the whole algebra restricted to sub
SMatrix killing_gram(const StructureTable& t, const std::vector<int>& sub);

struct CheckResult {
    std::string name;
    bool applicable = true;
    bool passed = false;
    std::string detail;
};

struct DecompositionReport {
    LeviMaltsev predicted;
    int dim_algebra = 0, dim_radical = 0, dim_semisimple = 0;
    bool radical_abelian = false;
    std::vector<int> lower_central;
    std::vector<CheckResult> checks;
    bool pass() const;
};

DecompositionReport verify_decomposition(GroupKind kind, int n, const ContractionSpec& spec);

struct RadicalBlock {
    std::vector<Element> elements;
    int step = 0;            // 1-based position in the contraction order
    bool ideal = false;      // ideal of the full radical
    bool subalgebra = false;
    bool abelian = false;
};

struct BlockStructure {
    std::vector<int> order;
    std::vector<RadicalBlock> blocks;
    std::string str() const;  // "T8 = T6 ⋉ T2"
};

// successive one-dimensional contractions; blocks are the newly contracted generators
BlockStructure radical_block_structure(GroupKind kind, int n, const std::vector<int>& order);

}  // namespace ck
