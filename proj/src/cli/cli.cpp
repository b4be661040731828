#include "ck/cli.hpp"

#include "ck/contraction.hpp"
#include "ck/groups.hpp"
#include "ck/relcat.hpp"
#include "ck/repkit.hpp"
#include "ck/rootsys.hpp"
#include "ck/selftest.hpp"
#include "json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace ck {

namespace {

using cli::json;
using cli::UsageError;

constexpr int kPass = 0, kFail = 1, kUsage = 2;

// ---- report model -------------------------------------------------------

struct Section {
    Section(std::string n, std::string prov, std::string st = "info")
        : name(std::move(n)), provenance(std::move(prov)), status(std::move(st)) {}
    std::string name;
    std::string provenance;
    std::string status;  // pass, fail or info
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    json data = json::object();
    json failures = json::array();
};

struct Report {
    std::string command;
    std::vector<Section> sections;
    bool pass = true;
};

json to_json(const Section& s) {
    json j = {{"name", s.name}, {"provenance", s.provenance}, {"status", s.status}, {"data", s.data},
              {"failures", s.failures}};
    if (!s.columns.empty() || !s.rows.empty()) {
        j["columns"] = s.columns;
        j["rows"] = s.rows;
    }
    return j;
}

json to_json(const Report& r) {
    json secs = json::array();
    for (const auto& s : r.sections) secs.push_back(to_json(s));
    return {{"command", r.command}, {"status", r.pass ? "pass" : "fail"}, {"sections", std::move(secs)}};
}

std::string table(const std::vector<std::string>& columns, const std::vector<std::vector<std::string>>& rows,
                  const std::string& indent = "  ") {
    std::vector<std::size_t> w(columns.size(), 0);
    auto width = [](const std::string& s) {
        // count code points so that the radical and summand signs line up
        std::size_t n = 0;
        for (unsigned char ch : s) n += (ch & 0xC0) != 0x80;
        return n;
    };
    for (std::size_t c = 0; c < columns.size(); ++c) w[c] = width(columns[c]);
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size() && c < w.size(); ++c) w[c] = std::max(w[c], width(r[c]));
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& r) {
        std::string l = indent;
        for (std::size_t c = 0; c < r.size(); ++c) {
            l += r[c];
            if (c + 1 < r.size()) l += std::string(w[c] - width(r[c]) + 2, ' ');
        }
        while (!l.empty() && l.back() == ' ') l.pop_back();
        os << l << '\n';
    };
    line(columns);
    for (const auto& r : rows) line(r);
    return os.str();
}

// ---- option helpers -----------------------------------------------------

struct AlgebraArgs {
    std::string kind;
    int label = 0;  // the n in so(n), u(n), su(n), sp(n), sl(n)
    std::string j;
};

GroupKind parse_kind(const std::string& k, int label, int& n) {
    if (label < 1) throw UsageError("--n must be positive");
    if (k == "so") {
        if (label < 2) throw UsageError("so(n) needs n >= 2");
        n = label - 1;
        return so_kind(n);
    }
    if (k == "sp") {
        n = label;
        return GroupKind::C_sp;
    }
    if (k == "u" || k == "su" || k == "sl") {
        if (k != "u" && label < 2) throw UsageError(k + "(n) needs n >= 2");
        n = label - 1;
        if (k == "u") return GroupKind::U_unitary;
        return k == "su" ? GroupKind::SU_special : GroupKind::A_sl;
    }
    throw UsageError("unknown --kind '" + k + "' (expected so, sp, u, su or sl)");
}

std::string algebra_name(const std::string& kind, int label) { return kind + "(" + std::to_string(label) + ")"; }

JValuation parse_valuation(const std::string& text, GroupKind kind, int n) {
    int want = param_count(kind, n);
    if (text.empty()) return JValuation::ones(want);
    JValuation v;
    try {
        v = JValuation::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (v.size() != want)
        throw UsageError("--j needs " + std::to_string(want) + " values for this algebra, got " + std::to_string(v.size()));
    return v;
}

RootModel parse_model(const std::string& m) {
    if (m == "literal") return RootModel::Literal;
    if (m == "balanced") return RootModel::Balanced;
    throw UsageError("unknown --model '" + m + "' (expected literal or balanced)");
}

void add_algebra_options(CLI::App* sub, AlgebraArgs& a, bool with_j = true) {
    sub->add_option("--kind", a.kind, "so, sp, u, su or sl")->required();
    sub->add_option("--n", a.label, "algebra label n of so(n), sp(n), u(n), su(n), sl(n)")->required();
    if (with_j) sub->add_option("--j", a.j, "comma list of parameter values: 1, i, iota or a scalar");
}

std::vector<std::string> labels(const std::vector<Element>& es) {
    std::vector<std::string> out;
    for (const auto& e : es) out.push_back(e.str());
    return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

std::string join_ints(const std::vector<int>& xs, const std::string& sep = ",") {
    std::vector<std::string> s;
    for (int x : xs) s.push_back(std::to_string(x));
    return join(s, sep);
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void emit_report(std::ostream& out, const Report& r) { emit(out, to_json(r)); }

// ---- verbs --------------------------------------------------------------

int cmd_generators(const AlgebraArgs& a, const std::string& basis, const std::string& model, bool as_json,
                   std::ostream& out) {
    int n = 0;
    GroupKind kind = parse_kind(a.kind, a.label, n);
    JValuation v = parse_valuation(a.j, kind, n);
    std::vector<LabeledMatrix> gens;
    if (basis == "cartan-weyl") {
        RootModel m = parse_model(model);
        for (const auto& e : cartan_weyl_basis(kind, n)) gens.push_back({e.str(), element_matrix(kind, e, n, v, m)});
    } else if (basis == "defining") {
        switch (kind) {
            case GroupKind::B_soOdd:
            case GroupKind::D_soEven: gens = so_generators(n, v).gens; break;
            case GroupKind::U_unitary: gens = u_generators(n, v).gens; break;
            case GroupKind::SU_special: gens = u_hermitian_generators(n, v, true).gens; break;
            case GroupKind::C_sp: gens = sp_chevalley_basis(n, v).gens; break;
            case GroupKind::A_sl:
                for (const auto& e : cartan_weyl_basis(kind, n)) gens.push_back({e.str(), element_matrix(kind, e, n, v)});
                break;
        }
    } else {
        throw UsageError("unknown --basis '" + basis + "' (expected defining or cartan-weyl)");
    }
    if (as_json) {
        json g = json::array();
        for (const auto& lm : gens) g.push_back({{"label", lm.label}, {"matrix", cli::to_json(lm.m)}});
        emit(out, {{"algebra", algebra_name(a.kind, a.label)},
                   {"j", v.str()},
                   {"basis", basis},
                   {"dimension", gens.size()},
                   {"generators", std::move(g)}});
        return kPass;
    }
    out << algebra_name(a.kind, a.label) << " with j = " << v.str() << ", " << gens.size() << " generators\n";
    for (const auto& lm : gens) out << '\n' << lm.label << " =\n" << lm.m.str() << '\n';
    return kPass;
}

PMatrix with_arity(const PMatrix& m, int arity) {
    if (m.arity() > arity) throw UsageError("matrix uses more iota generators than --j provides");
    PMatrix r(m.rows(), m.cols(), arity);
    for (int i = 0; i < m.rows(); ++i)
        for (int k = 0; k < m.cols(); ++k)
            for (const auto& [mask, c] : m(i, k).terms()) r(i, k) += Pim::monomial(arity, mask, c);
    return r;
}

int cmd_check_orth(const std::string& path, const std::string& jtext, bool as_json, std::ostream& out) {
    PMatrix a = cli::pmatrix_from_json(cli::read_json_file(path));
    if (!a.square() || a.rows() < 2) throw UsageError("j-orthogonality needs a square matrix of size at least 2");
    JValuation v;
    try {
        v = jtext.empty() ? JValuation::ones(a.rows() - 1) : JValuation::parse(jtext);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (v.size() != a.rows() - 1)
        throw UsageError("a " + std::to_string(a.rows()) + "x" + std::to_string(a.rows()) + " matrix needs " +
                         std::to_string(a.rows() - 1) + " values of j");
    bool ok = check_j_orthogonality(with_arity(a, v.size()), v);
    if (as_json) {
        Report r{"check-orth", {}, ok};
        Section s{"j-orthogonality", "A A^t = A^t A = 1 in the Pimenov algebra of the given valuation", ok ? "pass" : "fail"};
        s.data = {{"j", v.str()}, {"size", a.rows()}, {"orthogonal", ok}};
        r.sections.push_back(s);
        emit_report(out, r);
    } else {
        out << "j-orthogonal (j = " << v.str() << "): " << (ok ? "yes" : "no") << '\n';
    }
    return ok ? kPass : kFail;
}

Section dynkin_section(GroupKind kind, int n) {
    Section s{"dynkin", "Cartan matrix from the simple roots and the diagram it encodes"};
    auto cm = cartan_matrix(kind, n);
    auto dd = dynkin_diagram(kind, n);
    for (int i = 0; i < cm.size(); ++i) s.columns.push_back("a" + std::to_string(i + 1));
    for (const auto& row : cm.a) {
        std::vector<std::string> r;
        for (int x : row) r.push_back(std::to_string(x));
        s.rows.push_back(r);
    }
    std::string why;
    bool ok = cm.check_properties(&why);
    s.status = ok ? "pass" : "fail";
    json edges = json::array();
    for (const auto& e : dd.edges) edges.push_back({{"a", e.a}, {"b", e.b}, {"multiplicity", e.multiplicity}, {"longer", e.longer}});
    s.data = {{"type", dd.type}, {"weights", dd.weights}, {"edges", edges}, {"ascii", dd.ascii()}, {"det", cm.det()}};
    if (!ok) s.failures.push_back({{"where", "Cartan matrix properties"}, {"lhs", why}, {"rhs", ""}});
    return s;
}

int cmd_verify_cw(const AlgebraArgs& a, const std::string& model, bool dynkin, bool as_json, std::ostream& out) {
    int n = 0;
    GroupKind kind = parse_kind(a.kind, a.label, n);
    JValuation v = parse_valuation(a.j, kind, n);
    RootModel m = parse_model(model);
    CwReport cw = verify_cartan_weyl(kind, n, v, m);
    Report r{"verify-cw", {}, cw.pass()};
    Section s{"commutators", "matrix commutator of every ordered pair of basis elements against the closed-form table",
              cw.pass() ? "pass" : "fail"};
    s.columns = {"x", "y", "computed", "predicted"};
    for (const auto& mm : cw.mismatches) {
        s.rows.push_back({mm.x, mm.y, mm.computed.str(), mm.predicted.str()});
        s.failures.push_back({{"where", "[" + mm.x + ", " + mm.y + "]"}, {"lhs", mm.computed.str()}, {"rhs", mm.predicted.str()}});
    }
    s.data = {{"algebra", algebra_name(a.kind, a.label)},
              {"j", v.str()},
              {"model", model},
              {"basis", labels(cartan_weyl_basis(kind, n))},
              {"pairs", cw.pairs},
              {"mismatches", cw.mismatches.size()}};
    r.sections.push_back(s);
    if (dynkin) {
        Section d = dynkin_section(kind, n);
        r.pass = r.pass && d.status == "pass";
        r.sections.push_back(d);
    }
    if (as_json) {
        emit_report(out, r);
    } else {
        out << algebra_name(a.kind, a.label) << " j = " << v.str() << " (" << model << " root vectors): " << cw.pairs
            << " ordered pairs, " << cw.mismatches.size() << " mismatches\n";
        for (const auto& mm : cw.mismatches)
            out << "  [" << mm.x << ", " << mm.y << "]\n    computed\n" << mm.computed.str() << "\n    predicted\n"
                << mm.predicted.str() << '\n';
        if (dynkin) {
            const Section& d = r.sections.back();
            out << "Cartan matrix (" << d.data["type"].get<std::string>() << ", det " << d.data["det"].get<long>() << ")\n"
                << table(d.columns, d.rows) << d.data["ascii"].get<std::string>();
            if (!d.data["ascii"].get<std::string>().empty() && d.data["ascii"].get<std::string>().back() != '\n') out << '\n';
        }
        out << "status: " << (r.pass ? "PASS" : "FAIL") << '\n';
    }
    return r.pass ? kPass : kFail;
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

int cmd_contract(const AlgebraArgs& a, std::vector<int> iota, const std::vector<int>& order, bool as_json,
                 std::ostream& out) {
    int n = 0;
    GroupKind kind = parse_kind(a.kind, a.label, n);
    if (iota.empty()) iota = order;
    iota = sorted_unique(iota);
    if (!order.empty() && sorted_unique(order) != iota) throw UsageError("--order must list the --iota indices");
    if (!order.empty() && order.size() != iota.size()) throw UsageError("--order repeats an index");
    ContractionSpec spec{iota, {}};
    std::string why;
    if (!is_admissible(kind, n, spec, &why)) throw UsageError(why);
    JValuation v = spec_valuation(kind, n, spec);

    GammaTable gt = gamma_table(kind, n, v);
    DecompositionReport dr = verify_decomposition(kind, n, spec);
    Report r{"contract", {}, dr.pass()};

    Section g{"gamma table",
              "entry (k, m) is the j-monomial multiplying the commutators of the root vectors in that cell, "
              "with iota-valued factors applied"};
    json cells = json::array();
    for (const auto& c : gt.cells)
        cells.push_back({{"row", c.row}, {"col", c.col}, {"elements", labels(c.elements)}, {"monomial", c.monomial.str()},
                         {"killed", c.killed}, {"value", c.value}});
    g.data = {{"algebra", algebra_name(a.kind, a.label)}, {"j", v.str()}, {"row_labels", gt.row_labels},
              {"diagonal", gt.diagonal}, {"cells", cells}, {"ascii", gt.ascii()}};
    r.sections.push_back(g);

    const LeviMaltsev& lm = dr.predicted;
    Section d{"decomposition", "predicted radical and semisimple blocks from the contracted parameters"};
    d.columns = {"part", "dim", "elements"};
    d.rows.push_back({"radical", std::to_string(lm.radical.size()), join(labels(lm.radical))});
    json blocks = json::array();
    for (const auto& b : lm.blocks) {
        d.rows.push_back({b.str(), std::to_string(b.elements.size()), join(labels(b.elements))});
        blocks.push_back({{"name", b.str()}, {"family", b.family}, {"size", b.size}, {"params", b.params},
                          {"elements", labels(b.elements)}});
    }
    d.data = {{"structure", lm.str()},
              {"iota", iota},
              {"radical", labels(lm.radical)},
              {"blocks", blocks},
              {"dim_algebra", dr.dim_algebra},
              {"dim_radical", dr.dim_radical},
              {"dim_semisimple", dr.dim_semisimple},
              {"radical_abelian", dr.radical_abelian},
              {"lower_central_series", dr.lower_central}};
    r.sections.push_back(d);

    Section c{"verification", "structure constants from matrix commutators tested against the predicted decomposition",
              dr.pass() ? "pass" : "fail"};
    c.columns = {"check", "result", "detail"};
    for (const auto& ch : dr.checks) {
        std::string res = !ch.applicable ? "n/a" : ch.passed ? "PASS" : "FAIL";
        c.rows.push_back({ch.name, res, ch.detail});
        if (ch.applicable && !ch.passed) c.failures.push_back({{"where", ch.name}, {"lhs", ch.detail}, {"rhs", "pass"}});
    }
    r.sections.push_back(c);

    std::optional<BlockStructure> bs;
    if (!order.empty()) {
        bs = radical_block_structure(kind, n, order);
        Section b{"block structure", "radical split by successive one-parameter contractions; ideal and subalgebra by rank tests"};
        b.columns = {"step", "dim", "ideal", "subalgebra", "abelian", "elements"};
        json bj = json::array();
        for (const auto& blk : bs->blocks) {
            b.rows.push_back({std::to_string(blk.step), std::to_string(blk.elements.size()), blk.ideal ? "yes" : "no",
                              blk.subalgebra ? "yes" : "no", blk.abelian ? "yes" : "no", join(labels(blk.elements))});
            bj.push_back({{"step", blk.step}, {"elements", labels(blk.elements)}, {"ideal", blk.ideal},
                          {"subalgebra", blk.subalgebra}, {"abelian", blk.abelian}});
        }
        b.data = {{"order", order}, {"structure", bs->str()}, {"blocks", bj}};
        r.sections.push_back(b);
    }

    if (as_json) {
        emit_report(out, r);
    } else {
        out << "contraction of " << algebra_name(a.kind, a.label) << " at iota " << join_ints(iota) << ", j = " << v.str()
            << "\n\nGamma table\n"
            << gt.ascii();
        if (!gt.ascii().empty() && gt.ascii().back() != '\n') out << '\n';
        out << "\ndecomposition: " << lm.str() << "\n  dim " << dr.dim_algebra << " = radical " << dr.dim_radical
            << " + semisimple " << dr.dim_semisimple << ", radical " << (dr.radical_abelian ? "abelian" : "not abelian")
            << ", lower central series " << join_ints(dr.lower_central) << '\n'
            << table(d.columns, d.rows) << "\nverification\n"
            << table(c.columns, c.rows);
        if (bs) out << "\nblock structure, order " << join_ints(order) << ": " << bs->str() << '\n' << table(r.sections.back().columns, r.sections.back().rows);
        out << "\nstatus: " << (r.pass ? "PASS" : "FAIL") << '\n';
    }
    return r.pass ? kPass : kFail;
}

CKObject object_for(Category cat, int dim) {
    try {
        return make_object(cat, rank_of(cat, dim));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("dimension ") + std::to_string(dim) + " is not an object of " + category_name(cat) + ": " + e.what());
    }
}

Category parse_cat(const std::string& s) {
    try {
        return parse_category(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void require_morphism(Category cat, const LinearRelation& p, const char* which) {
    if (cat == Category::GA || p.is_null()) return;
    auto v = object_for(cat, p.source()), w = object_for(cat, p.target());
    if (!is_morphism(p, v, w)) throw UsageError(std::string(which) + " is not a morphism of " + category_name(cat));
}

int cmd_relcat(const std::string& op, const std::string& cat_name, const std::string& p_path, const std::string& q_path,
               std::ostream& out) {
    Category cat = parse_cat(cat_name);
    json pj = cli::read_json_file(p_path);
    if (op == "compose") {
        if (q_path.empty()) throw UsageError("compose needs --q");
        json qj = cli::read_json_file(q_path);
        auto dims = [](const json& j, const char* k) { return j.is_object() && j.contains(k) ? j.at(k).get<int>() : 0; };
        LinearRelation p = cli::relation_from_json(pj, 0, dims(qj, "source_dim"));
        LinearRelation q = cli::relation_from_json(qj, dims(pj, "target_dim"), 0);
        if (p.target() != q.source())
            throw UsageError("P ends in dimension " + std::to_string(p.target()) + " but Q starts in " + std::to_string(q.source()));
        require_morphism(cat, p, "P");
        require_morphism(cat, q, "Q");
        emit(out, cli::to_json(compose(cat, q, p)));
        return kPass;
    }
    LinearRelation p = cli::relation_from_json(pj);
    if (p.is_null()) {
        emit(out, nullptr);
        return kPass;
    }
    require_morphism(cat, p, "P");
    if (op == "dual") emit(out, cli::to_json(dual_relation(p)));
    else emit(out, cli::to_json(adjoint_relation(p)));
    return kPass;
}

int cmd_spin(const std::string& p_path, std::string cat_name, bool as_json, std::ostream& out) {
    json pj = cli::read_json_file(p_path);
    if (pj.is_null()) throw UsageError("the null relation carries no dimensions; Spin(null) = 0");
    LinearRelation p = cli::relation_from_json(pj);
    if (cat_name.empty()) cat_name = p.source() % 2 ? "B" : "GD";
    Category cat = parse_cat(cat_name);
    if (cat != Category::GD && cat != Category::D && cat != Category::B) throw UsageError("spin needs --cat GD, D or B");
    auto v = object_for(cat, p.source()), w = object_for(cat, p.target());
    if (!is_morphism(p, v, w)) throw UsageError("P is not a morphism of " + category_name(cat));
    SpinOperator s = cat == Category::B ? spin_B(p, v, w) : spin_operator(p, v, w);
    SMatrix m = s.matrix.is_zero() ? s.matrix : normalize_projective(s.matrix);
    if (as_json) {
        json j = {{"cat", category_name(cat)}, {"source_rank", v.rank}, {"target_rank", w.rank},
                  {"solution_dim", s.solution_dim}, {"rows", m.rows()}, {"cols", m.cols()}, {"matrix", cli::to_json(m)}};
        if (cat == Category::B) j["epsilon"] = s.epsilon;
        if (cat == Category::GD)
            j["parity"] = parity_name(grassmann_component(p.space(), d_reference(v, w), difference_form(v, w)));
        emit(out, j);
    } else {
        out << "Spin(P) in " << category_name(cat) << ", rank " << v.rank << " -> rank " << w.rank << ": " << m.rows()
            << "x" << m.cols() << ", intertwiner space dim " << s.solution_dim;
        if (cat == Category::B) out << ", epsilon " << s.epsilon;
        out << "\nbasis: monomials by bitmask, first nonzero entry scaled to 1\n" << m.str() << '\n';
    }
    return kPass;
}

int cmd_rep_lower(const std::string& family, int j, int from, int to, bool as_json, std::ostream& out) {
    if (to < 0 || to >= from) throw UsageError("lowering needs 0 <= --to < --from");
    CategoryRep r;
    Category cat;
    if (family == "A") {
        if (j < 0) throw UsageError("--j must be non-negative");
        r = exterior_power_rep(self_rep(), j);
        cat = Category::A;
    } else if (family == "B" || family == "C" || family == "D") {
        cat = parse_cat(family);
        r = fundamental_grade_rep(cat, j);
    } else if (family == "C-quotient") {
        cat = Category::C;
        r = c_quotient_rep(j);
    } else {
        throw UsageError("unknown --family '" + family + "' (expected A, B, C, D or C-quotient)");
    }
    SemigroupRep sr = restrict_rep(r, from);
    LoweredRep low = lowering_functor(sr, to);
    int direct = r.dim(to);
    Report rep{"rep lower", {}, true};
    Section s{"lowering", "F restricts tau(U(P)) to the image of tau(theta); dims compared with the family at the lower rank"};
    s.columns = {"quantity", "value"};
    s.rows = {{"representation", r.name},
              {"dim at rank " + std::to_string(from), std::to_string(sr.dim)},
              {"dim after lowering to rank " + std::to_string(to), std::to_string(low.rep.dim)},
              {"dim of the family at rank " + std::to_string(to), std::to_string(direct)},
              {"branch", branch_name(low.branch)}};
    s.data = {{"family", family}, {"category", category_name(cat)}, {"j", j}, {"from", from}, {"to", to},
              {"name", r.name}, {"dim_from", sr.dim}, {"dim_lowered", low.rep.dim}, {"dim_direct", direct},
              {"branch", branch_name(low.branch)}};
    rep.sections.push_back(s);
    if (as_json) emit_report(out, rep);
    else out << table(s.columns, s.rows, "");
    return kPass;
}

int cmd_selftest(const std::vector<int>& ids, std::uint64_t seed, unsigned workers, bool flip, bool timing, bool as_json,
                 std::ostream& out) {
    auto all = library_criteria();
    for (int id : ids)
        if (std::find(all.begin(), all.end(), id) == all.end())
            throw UsageError("unknown criterion " + std::to_string(id) + " (library criteria are 1.." + std::to_string(all.size()) + ")");
    SelftestOptions opt;
    opt.seed = seed;
    opt.workers = workers;
    opt.mutate_commutator = flip;
    SelftestReport sr = run_selftest(opt, ids);
    Report r{"selftest", {}, sr.pass()};
    for (const auto& c : sr.criteria) {
        Section s{"criterion " + std::to_string(c.id), c.checks, c.pass ? "pass" : "fail"};
        s.data = {{"id", c.id}, {"title", c.title}, {"cases", c.cases}, {"failure_count", c.failure_count},
                  {"budget_seconds", c.budget_seconds}, {"notes", c.notes}};
        if (timing) s.data["seconds"] = c.seconds;
        for (const auto& f : c.failures) s.failures.push_back({{"where", f.where}, {"lhs", f.lhs}, {"rhs", f.rhs}});
        r.sections.push_back(s);
    }
    if (as_json) {
        emit_report(out, r);
    } else {
        for (const auto& c : sr.criteria) {
            out << "criterion " << c.id << ' ' << (c.pass ? "PASS" : "FAIL") << "  " << c.title << "  [" << c.cases
                << " cases, " << c.failure_count << " failures";
            if (timing) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.2f", c.seconds);
                out << ", " << buf << " s";
            }
            out << "]\n";
            for (const auto& f : c.failures) {
                out << "    " << f.where << '\n';
                if (!f.lhs.empty() || !f.rhs.empty()) out << "      got:      " << f.lhs << "\n      expected: " << f.rhs << '\n';
            }
            for (const auto& nt : c.notes) out << "    note: " << nt << '\n';
        }
        out << "selftest: " << (r.pass ? "PASS" : "FAIL") << '\n';
    }
    return r.pass ? kPass : kFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Cayley-Klein algebra toolkit", "ck-algebra"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    std::size_t max_dim = 0;
    app.add_flag("--json", as_json, "machine-readable output (sorted keys)");
    app.add_option("--max-dim", max_dim, "cap on exterior-algebra dimensions (also CK_ALGEBRA_MAX_DIM)");

    AlgebraArgs alg;
    std::string basis = "defining", model = "literal";
    auto* gen = app.add_subcommand("generators", "labeled generator matrices of a Cayley-Klein algebra");
    add_algebra_options(gen, alg);
    gen->add_option("--basis", basis, "defining or cartan-weyl");
    gen->add_option("--model", model, "root vectors for the cartan-weyl basis: literal or balanced");

    std::string matrix_path;
    std::string orth_j;
    auto* orth = app.add_subcommand("check-orth", "test A A^t = A^t A = 1 for a matrix over the Pimenov algebra");
    orth->add_option("--matrix", matrix_path, "PMatrix JSON file")->required();
    orth->add_option("--j", orth_j, "parameter values");

    bool dynkin = false;
    auto* cw = app.add_subcommand("verify-cw", "check every Cartan-Weyl commutator against the closed forms");
    add_algebra_options(cw, alg);
    cw->add_option("--model", model, "literal or balanced root vectors");
    cw->add_flag("--emit-dynkin", dynkin, "print the Cartan matrix and Dynkin diagram");

    std::vector<int> iota, order;
    auto* con = app.add_subcommand("contract", "Gamma table and Levi-Maltsev decomposition under nilpotent parameters");
    add_algebra_options(con, alg, false);
    con->add_option("--iota", iota, "indices of the parameters set to iota")->delimiter(',');
    con->add_option("--order", order, "contraction order for the radical block structure")->delimiter(',');

    std::string cat = "GA", p_path, q_path;
    auto* rel = app.add_subcommand("relcat", "linear relations in GA, GD, A, B, C, D");
    rel->require_subcommand(1);
    std::string rel_op;
    for (const char* op : {"compose", "dual", "adjoint"}) {
        auto* s = rel->add_subcommand(op, std::string(op) == "compose" ? "Q o P with the category's null rule"
                                          : std::string(op) == "dual" ? "P' = Ann(P^0)" : "the relation {(w, v)}");
        s->add_option("--cat", cat, "GA, GD, A, B, C or D");
        s->add_option("--p", p_path, "relation JSON")->required();
        if (std::string(op) == "compose") s->add_option("--q", q_path, "relation JSON")->required();
        s->callback([&rel_op, op] { rel_op = op; });
    }

    std::string spin_cat;
    auto* spin = app.add_subcommand("spin", "Spin(P) for GD/D morphisms or spin_B for B morphisms");
    spin->add_option("--p", p_path, "morphism JSON")->required();
    spin->add_option("--cat", spin_cat, "GD, D or B (default GD for even, B for odd dimensions)");

    std::string family = "A";
    int rep_j = 1, from = 0, to = 0;
    auto* rep = app.add_subcommand("rep", "representations of ordered categories");
    rep->require_subcommand(1);
    auto* lower = rep->add_subcommand("lower", "lowering functor F from rank --from to rank --to");
    lower->add_option("--family", family, "A (exterior powers), B, C, D (grades of Lambda) or C-quotient");
    lower->add_option("--j", rep_j, "exterior degree or fundamental index");
    lower->add_option("--from", from, "rank of the object acted on")->required();
    lower->add_option("--to", to, "target rank")->required();

    std::vector<int> criteria;
    std::uint64_t seed = SelftestOptions{}.seed;
    unsigned workers = 0;
    bool flip = false, timing = false;
    auto* st = app.add_subcommand("selftest", "run the acceptance suite of the library");
    st->add_option("--criteria", criteria, "subset of criteria, comma list")->delimiter(',');
    st->add_option("--seed", seed, "random seed");
    st->add_option("--workers", workers, "worker threads (0 = all cores)");
    st->add_flag("--inject-sign-flip", flip, "flip one closed-form commutator sign (mutation check)");
    st->add_flag("--timing", timing, "report wall-clock times (output is then not reproducible)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    // the cap is process-wide; put it back for in-process callers
    struct CapGuard {
        std::size_t saved = max_exterior_dim();
        ~CapGuard() { set_max_exterior_dim(saved); }
    } guard;
    try {
        if (max_dim > 0) set_max_exterior_dim(max_dim);
        if (*gen) return cmd_generators(alg, basis, model, as_json, out);
        if (*orth) return cmd_check_orth(matrix_path, orth_j, as_json, out);
        if (*cw) return cmd_verify_cw(alg, model, dynkin, as_json, out);
        if (*con) return cmd_contract(alg, iota, order, as_json, out);
        if (*rel) return cmd_relcat(rel_op, cat, p_path, q_path, out);
        if (*spin) return cmd_spin(p_path, spin_cat, as_json, out);
        if (*rep) return cmd_rep_lower(family, rep_j, from, to, as_json, out);
        if (*st) return cmd_selftest(criteria, seed, workers, flip, timing, as_json, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        // invalid parameters surface from the library as exceptions
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    err << "error: no command\n";
    return kUsage;
}

}  // namespace ck
