#include "ck/contraction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ck {

SparseVec flatten(const PMatrix& m) {
    SparseVec out;
    const std::uint64_t span = std::uint64_t(1) << m.arity();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            std::uint64_t base = (static_cast<std::uint64_t>(i) * m.cols() + j) * span;
            for (const auto& [mask, c] : m(i, j).terms())
                if (!c.is_zero()) out.emplace_back(base + mask, c);
        }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

RootModel contraction_model(GroupKind kind) { return is_unitary(kind) ? RootModel::Balanced : RootModel::Literal; }

// ---------------------------------------------------------------- Gamma tables

namespace {

int so_m(int n) { return n % 2 == 0 ? n / 2 : (n + 1) / 2; }

// Gamma cell (row, col) holding root r; col = m+1 marks the one-index column
std::pair<int, int> cell_of(GroupKind kind, int n, const RootLabel& r) {
    if (r.parts.size() == 2) return {r.parts[0].first, r.parts[1].first};
    if (kind == GroupKind::B_soOdd) return {r.parts[0].first, so_m(n) + 1};
    return {r.parts[0].first, r.parts[0].first};  // sp long roots live on the diagonal
}

JMonomial cell_monomial(GroupKind kind, int n, int row, int col) {
    if (is_so(kind)) {
        if (kind == GroupKind::B_soOdd && col == so_m(n) + 1) return JMonomial::range(2 * row, n, 2);
        return JMonomial::range(2 * row, 2 * col - 2, 2);
    }
    return JMonomial::range(row + 1, col, 2);
}

}  // namespace

const GammaCell* GammaTable::cell(int row, int col) const {
    for (const auto& c : cells)
        if (c.row == row && c.col == col) return &c;
    return nullptr;
}

GammaTable gamma_table(GroupKind kind, int n, const JValuation& v) {
    GammaTable g;
    g.kind = kind;
    g.n = n;
    g.v = v;
    std::vector<int> idx = is_unitary(kind) ? [&] {
        std::vector<int> r;
        for (int k = 0; k <= n; ++k) r.push_back(k);
        return r;
    }()
                                            : cartan_indices(kind, n);
    g.row_labels = idx;
    g.size = static_cast<int>(idx.size());
    g.last_column = kind == GroupKind::B_soOdd;
    for (int k : idx) {
        if (kind == GroupKind::C_sp) g.diagonal.push_back("M" + std::to_string(k));
        else if (kind == GroupKind::SU_special || kind == GroupKind::A_sl) g.diagonal.push_back(k == 0 ? "-" : "Ht" + std::to_string(k));
        else g.diagonal.push_back("H" + std::to_string(k));
    }
    std::map<std::pair<int, int>, GammaCell> cells;
    for (const auto& r : root_system(kind, n)) {
        auto [row, col] = cell_of(kind, n, r);
        if (row == col) continue;
        auto& c = cells[{row, col}];
        c.row = row;
        c.col = col;
        c.elements.push_back(Element::E(r));
    }
    for (auto& [key, c] : cells) {
        c.monomial = cell_monomial(kind, n, c.row, c.col);
        c.killed = c.monomial.killed_by(v);
        c.value = c.killed ? "0" : c.monomial.residual(v).str();
        g.cells.push_back(c);
    }
    return g;
}

std::string GammaTable::ascii() const {
    int cols = size + (last_column ? 1 : 0);
    std::vector<std::vector<std::string>> grid(size + 1, std::vector<std::string>(cols + 1));
    grid[0][0] = "";
    for (int c = 0; c < size; ++c) grid[0][c + 1] = std::to_string(row_labels[c]);
    if (last_column) grid[0][cols] = "*";
    for (int r = 0; r < size; ++r) {
        grid[r + 1][0] = std::to_string(row_labels[r]);
        grid[r + 1][r + 1] = diagonal[r];
        for (int c = r + 1; c < cols; ++c) {
            int col_label = c < size ? row_labels[c] : so_m(n) + 1;
            const GammaCell* cell = this->cell(row_labels[r], col_label);
            grid[r + 1][c + 1] = cell ? cell->value : "";
        }
    }
    std::vector<std::size_t> w(cols + 1, 0);
    for (const auto& row : grid)
        for (int c = 0; c <= cols; ++c) w[c] = std::max(w[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : grid) {
        std::string line;
        for (int c = 0; c <= cols; ++c) {
            line += row[c] + std::string(w[c] - row[c].size(), ' ');
            if (c < cols) line += c == 0 ? " | " : "  ";
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------- specs

std::vector<int> admissible_indices(GroupKind kind, int n) {
    std::vector<int> out;
    if (is_so(kind)) {
        int hi = kind == GroupKind::B_soOdd ? n : n - 1;
        for (int k = 2; k <= hi; k += 2) out.push_back(k);
    } else {
        for (int k = kind == GroupKind::C_sp ? 2 : 1; k <= n; ++k) out.push_back(k);
    }
    return out;
}

bool is_admissible(GroupKind kind, int n, const ContractionSpec& spec, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    auto adm = admissible_indices(kind, n);
    for (std::size_t i = 0; i < spec.indices.size(); ++i) {
        int k = spec.indices[i];
        if (i && k <= spec.indices[i - 1]) return fail("nilpotent indices must be strictly increasing");
        if (std::find(adm.begin(), adm.end(), k) == adm.end()) {
            if (is_so(kind) && k % 2 == 1)
                return fail("index " + std::to_string(k) +
                            " is odd; orthogonal contractions use only parameters outside the Cartan subalgebra "
                            "(even indices)");
            return fail("index " + std::to_string(k) + " outside the admissible range for " + kind_name(kind));
        }
    }
    int P = param_count(kind, n);
    if (!spec.residual.empty()) {
        if (static_cast<int>(spec.residual.size()) != P) return fail("residual valuation has wrong length");
        for (int k = 1; k <= P; ++k) {
            bool nil = std::find(spec.indices.begin(), spec.indices.end(), k) != spec.indices.end();
            if (!nil && spec.residual[k - 1].kind == JKind::Iota)
                return fail("residual parameter j" + std::to_string(k) + " is nilpotent but not listed");
        }
    }
    return true;
}

JValuation spec_valuation(GroupKind kind, int n, const ContractionSpec& spec) {
    std::string why;
    if (!is_admissible(kind, n, spec, &why)) throw std::invalid_argument(why);
    int P = param_count(kind, n);
    std::vector<JValue> vals = spec.residual.empty() ? std::vector<JValue>(P) : spec.residual;
    for (int k : spec.indices) vals[k - 1] = JValue{JKind::Iota, {}};
    return JValuation(vals);
}

std::vector<ContractionSpec> all_specs(GroupKind kind, int n) {
    auto adm = admissible_indices(kind, n);
    std::vector<ContractionSpec> out;
    for (std::uint32_t mask = 0; mask < (1u << adm.size()); ++mask) {
        ContractionSpec s;
        for (std::size_t i = 0; i < adm.size(); ++i)
            if (mask & (1u << i)) s.indices.push_back(adm[i]);
        out.push_back(s);
    }
    return out;
}

// ---------------------------------------------------------------- predicted decomposition

std::string BlockDescriptor::str() const {
    if (family == "H") return elements.empty() ? "H" : elements.front().str();
    std::string out = family + "(" + std::to_string(size);
    for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : ";") + std::string("j") + std::to_string(params[i]);
    return out + ")";
}

std::vector<Element> LeviMaltsev::semisimple() const {
    std::vector<Element> out;
    for (const auto& b : blocks) out.insert(out.end(), b.elements.begin(), b.elements.end());
    return out;
}

std::string LeviMaltsev::str() const {
    std::string m;
    for (std::size_t i = 0; i < blocks.size(); ++i) m += (i ? " ⊕ " : "") + blocks[i].str();
    if (radical.empty()) return m;
    std::string t = "T" + std::to_string(radical.size());
    if (blocks.empty()) return t;
    return t + " ⋉ " + (blocks.size() > 1 ? "(" + m + ")" : m);
}

namespace {

struct BlockPlan {
    std::vector<std::pair<int, int>> ranges;  // index ranges [a,b] per block
    std::vector<std::string> family;
    std::vector<int> label;
    std::vector<std::pair<int, int>> params;  // j-index range
};

BlockPlan plan_blocks(GroupKind kind, int n, const std::vector<int>& idx) {
    BlockPlan p;
    if (is_so(kind)) {
        int m = so_m(n);
        std::vector<int> ks{0};
        for (int k : idx) ks.push_back(k / 2);
        ks.push_back(m);
        for (std::size_t s = 0; s + 1 < ks.size(); ++s) {
            int d = ks[s + 1] - ks[s];
            bool last = s + 2 == ks.size();
            int size = 2 * d + ((last && kind == GroupKind::B_soOdd) ? 1 : 0);
            int hi = last ? n : 2 * ks[s + 1] - 1;
            p.ranges.push_back({ks[s] + 1, ks[s + 1]});
            p.family.push_back(size == 2 ? "H" : "so");
            p.label.push_back(size);
            p.params.push_back({2 * ks[s] + 1, hi});
        }
        return p;
    }
    int lo = kind == GroupKind::C_sp ? 1 : 0;
    int top = n + 1;
    std::vector<int> ks{lo};
    for (int k : idx) ks.push_back(k);
    ks.push_back(top);
    for (std::size_t s = 0; s + 1 < ks.size(); ++s) {
        int d = ks[s + 1] - ks[s];
        bool last = s + 2 == ks.size();
        std::string fam = kind == GroupKind::C_sp ? "sp" : "u";
        if (last && (kind == GroupKind::SU_special || kind == GroupKind::A_sl)) fam = kind == GroupKind::A_sl ? "sl" : "su";
        if (fam == "u" && d == 1) fam = "H";
        p.ranges.push_back({ks[s], ks[s + 1] - 1});
        p.family.push_back(fam);
        p.label.push_back(d);
        p.params.push_back({ks[s] + 1, ks[s + 1] - 1});
    }
    return p;
}

int block_of(const BlockPlan& p, int k) {
    for (std::size_t s = 0; s < p.ranges.size(); ++s)
        if (k >= p.ranges[s].first && k <= p.ranges[s].second) return static_cast<int>(s);
    return -1;
}

}  // namespace

LeviMaltsev predicted_decomposition(GroupKind kind, int n, const ContractionSpec& spec) {
    std::string why;
    if (!is_admissible(kind, n, spec, &why)) throw std::invalid_argument(why);
    LeviMaltsev lm{kind, n, spec, {}, {}};
    BlockPlan plan = plan_blocks(kind, n, spec.indices);
    std::vector<BlockDescriptor> blocks(plan.ranges.size());
    for (std::size_t s = 0; s < blocks.size(); ++s) {
        blocks[s].family = plan.family[s];
        blocks[s].size = plan.label[s];
        for (int j = plan.params[s].first; j <= plan.params[s].second; ++j) blocks[s].params.push_back(j);
    }
    for (int k : cartan_indices(kind, n)) {
        int home = (kind == GroupKind::SU_special || kind == GroupKind::A_sl) ? k - 1 : k;
        blocks[block_of(plan, home)].elements.push_back(Element::H(k));
    }
    int last = static_cast<int>(blocks.size()) - 1;
    for (const auto& r : root_system(kind, n)) {
        int b0 = block_of(plan, r.parts[0].first);
        bool inside = true;
        for (const auto& [i, c] : r.parts) inside = inside && block_of(plan, i) == b0;
        if (kind == GroupKind::B_soOdd && r.parts.size() == 1) inside = b0 == last;
        if (inside) blocks[b0].elements.push_back(Element::E(r));
        else lm.radical.push_back(Element::E(r));
    }
    for (auto& b : blocks) {
        if (b.elements.empty()) continue;  // so(1), su(1)
        if (b.family == "H" && b.elements.size() != 1) throw std::logic_error("abelian block with several elements");
        lm.blocks.push_back(std::move(b));
    }
    return lm;
}

// ---------------------------------------------------------------- structure constants

int StructureTable::index(const Element& e) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == e) return static_cast<int>(i);
    throw std::invalid_argument("element not in basis: " + e.str());
}

StructureTable structure_table(GroupKind kind, int n, const JValuation& v) {
    StructureTable t;
    t.kind = kind;
    t.n = n;
    t.v = v;
    t.basis = cartan_weyl_basis(kind, n);
    RootModel model = contraction_model(kind);
    std::vector<PMatrix> mats;
    EchelonBasis eb(true);
    for (const auto& e : t.basis) {
        mats.push_back(element_matrix(kind, e, n, v, model));
        if (eb.add(flatten(mats.back()))) ++t.rank;
    }
    int d = static_cast<int>(t.basis.size());
    t.bracket.assign(d, std::vector<SparseVec>(d));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            if (b < a) {
                t.bracket[a][b] = sparse_scale(t.bracket[b][a], Scalar(-1));
                continue;
            }
            auto c = eb.coordinates(flatten(mat_commutator(mats[a], mats[b])));
            if (!c) throw std::logic_error("bracket leaves the span of the basis");
            SparseVec sv;
            for (int k = 0; k < static_cast<int>(c->size()); ++k)
                if (!(*c)[k].is_zero()) sv.emplace_back(static_cast<std::uint64_t>(k), (*c)[k]);
            t.bracket[a][b] = std::move(sv);
        }
    return t;
}

bool bracket_closed(const StructureTable& t, const std::vector<int>& a, const std::vector<int>& b,
                    const std::vector<int>& target) {
    std::vector<char> in(t.basis.size(), 0);
    for (int k : target) in[k] = 1;
    for (int x : a)
        for (int y : b)
            for (const auto& [k, c] : t.bracket[x][y])
                if (!in[k]) return false;
    return true;
}

namespace {

SparseVec bracket_vec(const StructureTable& t, const SparseVec& x, const SparseVec& y) {
    SparseVec out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y)
            if (!t.bracket[i][j].empty()) sparse_axpy(out, a * b, t.bracket[i][j]);
    return out;
}

SparseVec unit_vec(int k) { return {{static_cast<std::uint64_t>(k), Scalar(1)}}; }

std::vector<SparseVec> span_of(const std::vector<SparseVec>& gens) {
    EchelonBasis eb;
    std::vector<SparseVec> out;
    for (const auto& g : gens)
        if (eb.add(g)) out.push_back(g);
    return out;
}

std::vector<int> series(const StructureTable& t, const std::vector<int>& sub, bool derived) {
    std::vector<SparseVec> base;
    for (int k : sub) base.push_back(unit_vec(k));
    std::vector<SparseVec> cur = base;
    std::vector<int> dims{static_cast<int>(cur.size())};
    for (std::size_t step = 0; step <= sub.size() && !cur.empty(); ++step) {
        const auto& other = derived ? cur : base;
        std::vector<SparseVec> gens;
        for (const auto& x : cur)
            for (const auto& y : other) {
                auto z = bracket_vec(t, x, y);
                if (!z.empty()) gens.push_back(std::move(z));
            }
        auto next = span_of(gens);
        int d = static_cast<int>(next.size());
        bool stalled = d == dims.back();
        dims.push_back(d);
        cur = std::move(next);
        if (stalled) break;
    }
    return dims;
}

Scalar lookup(const SparseVec& v, std::uint64_t key) {
    auto it = std::lower_bound(v.begin(), v.end(), key, [](const auto& e, std::uint64_t k) { return e.first < k; });
    if (it == v.end() || it->first != key) return Scalar();
    return it->second;
}

}  // namespace

std::vector<int> lower_central_series(const StructureTable& t, const std::vector<int>& sub) {
    return series(t, sub, false);
}

std::vector<int> derived_series(const StructureTable& t, const std::vector<int>& sub) { return series(t, sub, true); }

SMatrix killing_gram(const StructureTable& t, const std::vector<int>& sub) {
    int d = static_cast<int>(t.basis.size());
    int s = static_cast<int>(sub.size());
    SMatrix g(s, s);
    for (int p = 0; p < s; ++p)
        for (int q = p; q < s; ++q) {
            int a = sub[p], b = sub[q];
            Scalar sum;
            for (int i = 0; i < d; ++i)
                for (const auto& [k, c] : t.bracket[a][i]) {
                    Scalar other = lookup(t.bracket[b][k], static_cast<std::uint64_t>(i));
                    if (!other.is_zero()) sum += c * other;
                }
            g(p, q) = sum;
            g(q, p) = sum;
        }
    return g;
}

// ---------------------------------------------------------------- verification

bool DecompositionReport::pass() const {
    for (const auto& c : checks)
        if (c.applicable && !c.passed) return false;
    return true;
}

namespace {

int flat_rank(const std::vector<PMatrix>& ms) {
    EchelonBasis eb;
    for (const auto& m : ms) eb.add(flatten(m));
    return eb.dim();
}

}  // namespace

DecompositionReport verify_decomposition(GroupKind kind, int n, const ContractionSpec& spec) {
    DecompositionReport rep;
    std::string why;
    if (!is_admissible(kind, n, spec, &why)) {
        rep.checks.push_back({"admissible", true, false, why});
        return rep;
    }
    rep.predicted = predicted_decomposition(kind, n, spec);
    JValuation v = spec_valuation(kind, n, spec);
    StructureTable t = structure_table(kind, n, v);
    std::vector<int> T, M;
    for (const auto& e : rep.predicted.radical) T.push_back(t.index(e));
    for (const auto& e : rep.predicted.semisimple()) M.push_back(t.index(e));
    rep.dim_algebra = algebra_dim(kind, n);
    rep.dim_radical = static_cast<int>(T.size());
    rep.dim_semisimple = static_cast<int>(M.size());

    auto add = [&](const std::string& name, bool ok, const std::string& detail = "") {
        rep.checks.push_back({name, true, ok, detail});
    };
    add("basis", t.independent() && t.rank == rep.dim_algebra,
        "rank " + std::to_string(t.rank) + " of " + std::to_string(rep.dim_algebra));
    add("(i) [T,T] in T", bracket_closed(t, T, T, T));
    add("(ii) [M,T] in T", bracket_closed(t, M, T, T));
    add("(iii) [M,M] in M", bracket_closed(t, M, M, M));

    RootModel model = contraction_model(kind);
    std::vector<PMatrix> mt, mm, all;
    for (int k : T) mt.push_back(element_matrix(kind, t.basis[k], n, v, model));
    for (int k : M) mm.push_back(element_matrix(kind, t.basis[k], n, v, model));
    all = mt;
    all.insert(all.end(), mm.begin(), mm.end());
    int rt = flat_rank(mt), rm = flat_rank(mm), ra = flat_rank(all);
    add("(iv) T ∩ M = 0, T + M = L", rt == rep.dim_radical && rm == rep.dim_semisimple && ra == rt + rm &&
                                          ra == rep.dim_algebra,
        "dim T " + std::to_string(rt) + ", dim M " + std::to_string(rm) + ", dim L " + std::to_string(ra));

    rep.lower_central = lower_central_series(t, T);
    bool nil = rep.lower_central.back() == 0 && static_cast<int>(rep.lower_central.size()) <= rep.dim_radical + 2;
    std::string lcs;
    for (int d : rep.lower_central) lcs += (lcs.empty() ? "" : ",") + std::to_string(d);
    add("(v) T nilpotent", nil, "lower central dims " + lcs);
    rep.radical_abelian = bracket_closed(t, T, T, {});

    bool iota_free = true;
    for (std::size_t k = 0; k < spec.residual.size(); ++k) {
        bool nilp = std::find(spec.indices.begin(), spec.indices.end(), static_cast<int>(k) + 1) != spec.indices.end();
        if (!nilp && spec.residual[k].kind == JKind::Iota) iota_free = false;
    }
    if (iota_free) {
        int expected = rep.dim_semisimple - (kind == GroupKind::U_unitary ? 1 : 0);
        int r = M.empty() ? 0 : rank_bareiss(killing_gram(t, M));
        add("(vi) Killing form on M nondegenerate", r == expected,
            "rank " + std::to_string(r) + ", expected " + std::to_string(expected) +
                (kind == GroupKind::U_unitary ? " (modulo the center)" : ""));
    } else {
        rep.checks.push_back({"(vi) Killing form on M nondegenerate", false, false, "residual valuation has iota"});
    }

    GammaTable g = gamma_table(kind, n, v);
    std::set<Element> tset(rep.predicted.radical.begin(), rep.predicted.radical.end());
    bool gamma_ok = true;
    for (const auto& c : g.cells)
        for (const auto& e : c.elements) gamma_ok = gamma_ok && (c.killed == (tset.count(e) > 0));
    add("Gamma zero cells = T", gamma_ok);
    if (spec.indices.size() == 1) add("one-dimensional contraction: T abelian", rep.radical_abelian);
    return rep;
}

// ---------------------------------------------------------------- ordered contractions

std::string BlockStructure::str() const {
    int total = 0;
    for (const auto& b : blocks) total += static_cast<int>(b.elements.size());
    std::string out = "T" + std::to_string(total) + " =";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) {
            // a later block is a direct summand only if it is an ideal too
            out += blocks[i].ideal && blocks[i - 1].ideal ? " ⊕" : " ⋉";
        }
        bool repeat = i && blocks[i].elements.size() == blocks[i - 1].elements.size();
        out += std::string(repeat ? " T\u0303" : " T") + std::to_string(blocks[i].elements.size());
    }
    return out;
}

BlockStructure radical_block_structure(GroupKind kind, int n, const std::vector<int>& order) {
    BlockStructure bs;
    bs.order = order;
    std::vector<int> sorted;
    std::set<Element> seen;
    for (std::size_t s = 0; s < order.size(); ++s) {
        sorted.push_back(order[s]);
        std::sort(sorted.begin(), sorted.end());
        auto lm = predicted_decomposition(kind, n, ContractionSpec{sorted, {}});
        RadicalBlock b;
        b.step = static_cast<int>(s) + 1;
        for (const auto& e : lm.radical)
            if (!seen.count(e)) b.elements.push_back(e);
        seen.insert(b.elements.begin(), b.elements.end());
        bs.blocks.push_back(std::move(b));
    }
    auto lm = predicted_decomposition(kind, n, ContractionSpec{sorted, {}});
    StructureTable t = structure_table(kind, n, spec_valuation(kind, n, ContractionSpec{sorted, {}}));
    std::vector<int> T;
    for (const auto& e : lm.radical) T.push_back(t.index(e));
    for (auto& b : bs.blocks) {
        std::vector<int> idx;
        for (const auto& e : b.elements) idx.push_back(t.index(e));
        b.ideal = bracket_closed(t, idx, T, idx);
        b.subalgebra = bracket_closed(t, idx, idx, idx);
        b.abelian = bracket_closed(t, idx, idx, {});
    }
    return bs;
}

}  // namespace ck
