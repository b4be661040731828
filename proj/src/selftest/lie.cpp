#include "common.hpp"

#include "ck/contraction.hpp"
#include "ck/groups.hpp"
#include "ck/parallel.hpp"
#include "ck/rootsys.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ck::detail {

namespace {

std::string algebra_label(GroupKind k, int n) {
    int size = k == GroupKind::C_sp ? n : n + 1;
    return kind_name(k) + "(" + std::to_string(size) + ")";
}

// digit d of code in base |kinds| gives the value of j_{d+1}
JValuation valuation_from_code(int params, std::uint64_t code, const std::vector<JKind>& kinds) {
    std::vector<JValue> v(params);
    for (int k = 0; k < params; ++k) {
        v[k].kind = kinds[code % kinds.size()];
        code /= kinds.size();
    }
    return JValuation(v);
}

// every code when the space is small enough, otherwise `sample` distinct ones
std::vector<std::uint64_t> valuation_codes(int params, std::size_t base, bool exhaustive, std::size_t sample,
                                           std::mt19937_64 rng) {
    std::uint64_t total = 1;
    for (int k = 0; k < params; ++k) total *= base;
    std::vector<std::uint64_t> codes;
    if (exhaustive || total <= sample) {
        for (std::uint64_t c = 0; c < total; ++c) codes.push_back(c);
        return codes;
    }
    std::set<std::uint64_t> seen;
    std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
    while (seen.size() < sample) seen.insert(pick(rng));
    return {seen.begin(), seen.end()};
}

struct CwJob {
    GroupKind kind;
    int n;
    JValuation v;
    RootModel model;
};

void run_cw_jobs(Collector& c, const std::vector<CwJob>& jobs, const SelftestOptions& opt) {
    parallel_for(
        jobs.size(),
        [&](std::size_t i) {
            const CwJob& job = jobs[i];
            Predictor pred;
            if (opt.mutate_commutator) {
                auto basis = cartan_weyl_basis(job.kind, job.n);
                Element h = basis.front();
                Element e = *std::find_if(basis.begin(), basis.end(), [](const Element& x) { return !x.cartan; });
                pred = [job, h, e](const Element& x, const Element& y) {
                    PMatrix p = predicted_commutator(job.kind, x, y, job.n, job.v, job.model);
                    return x == h && y == e ? -p : p;
                };
            }
            CwReport rep = verify_cartan_weyl(job.kind, job.n, job.v, job.model, pred);
            c.count(rep.pairs);
            std::string where = algebra_label(job.kind, job.n) + " j=(" + job.v.str() + ")" +
                                (job.model == RootModel::Balanced ? " balanced" : "");
            for (const auto& m : rep.mismatches)
                c.fail(where + " [" + m.x + ", " + m.y + "]", m.computed.str(), m.predicted.str());
        },
        opt.workers);
}

const std::vector<JKind> kOneIota = {JKind::One, JKind::Iota};
const std::vector<JKind> kOneIotaImag = {JKind::One, JKind::Iota, JKind::Imag};

}  // namespace

void criterion_cartan_weyl_orthogonal(CriterionReport& r, const SelftestOptions& opt) {
    Collector c(r);
    std::vector<CwJob> jobs;
    for (int n = 2; n <= 7; ++n) {
        GroupKind k = so_kind(n);
        auto codes = valuation_codes(param_count(k, n), 2, n <= 5, 50, case_rng(opt.seed, 1, n));
        for (auto code : codes) jobs.push_back({k, n, valuation_from_code(param_count(k, n), code, kOneIota), RootModel::Literal});
    }
    c.note(std::to_string(jobs.size()) + " valuations of so(3)..so(8)");
    run_cw_jobs(c, jobs, opt);
}

void criterion_cartan_weyl_unitary_symplectic(CriterionReport& r, const SelftestOptions& opt) {
    Collector c(r);
    std::vector<CwJob> jobs;
    for (GroupKind k : {GroupKind::U_unitary, GroupKind::SU_special})
        for (int n = 1; n <= 5; ++n) {
            auto codes = valuation_codes(param_count(k, n), 3, n <= 4, 100, case_rng(opt.seed, 2, 10 * n + int(k)));
            for (auto code : codes)
                for (RootModel m : {RootModel::Literal, RootModel::Balanced})
                    jobs.push_back({k, n, valuation_from_code(param_count(k, n), code, kOneIotaImag), m});
        }
    for (int n = 1; n <= 4; ++n)
        for (auto code : valuation_codes(n, 2, true, 0, {}))
            jobs.push_back({GroupKind::C_sp, n, valuation_from_code(n, code, kOneIota), RootModel::Literal});
    c.note(std::to_string(jobs.size()) + " (algebra, valuation, root model) runs");
    run_cw_jobs(c, jobs, opt);
}

namespace {

std::set<RootLabel> root_set(const std::vector<Element>& els) {
    std::set<RootLabel> s;
    for (const auto& e : els)
        if (!e.cartan) s.insert(e.root);
    return s;
}

// "e1+e2" style labels with both signs of every listed root
std::set<RootLabel> pm_roots(const std::vector<std::string>& labels) {
    std::set<RootLabel> s;
    for (const auto& l : labels) {
        RootLabel x = RootLabel::parse(l);
        s.insert(x);
        s.insert(-x);
    }
    return s;
}

std::string roots_str(const std::set<RootLabel>& s) {
    std::string out = "{";
    for (const auto& x : s) out += (out.size() > 1 ? " " : "") + x.str();
    return out + "}";
}

struct WorkedExample {
    GroupKind kind;
    int n;
    std::vector<int> iota;
    std::string structure;           // expected rendering, empty to skip
    std::vector<std::string> radical;  // roots up to sign
    int nilpotency = 0;              // expected lower central series length (1 = abelian)
    std::vector<std::string> blocks; // expected semisimple block renderings, empty to skip
};

}  // namespace

void criterion_decompositions(CriterionReport& r, const SelftestOptions& opt) {
    Collector c(r);
    struct Family {
        GroupKind kind;
        int n;
    };
    std::vector<Family> fams;
    for (int n = 2; n <= 7; ++n) fams.push_back({so_kind(n), n});
    for (int n = 1; n <= 5; ++n) {
        fams.push_back({GroupKind::U_unitary, n});
        fams.push_back({GroupKind::SU_special, n});
        fams.push_back({GroupKind::C_sp, n});
    }
    struct Job {
        GroupKind kind;
        int n;
        ContractionSpec spec;
    };
    std::vector<Job> jobs;
    for (auto f : fams)
        for (auto& s : all_specs(f.kind, f.n)) jobs.push_back({f.kind, f.n, s});
    parallel_for(
        jobs.size(),
        [&](std::size_t i) {
            const Job& j = jobs[i];
            DecompositionReport rep = verify_decomposition(j.kind, j.n, j.spec);
            c.count();
            std::string idx;
            for (int k : j.spec.indices) idx += (idx.empty() ? "" : ",") + std::to_string(k);
            for (const auto& ch : rep.checks)
                if (ch.applicable && !ch.passed)
                    c.fail(algebra_label(j.kind, j.n) + " iota at {" + idx + "}: " + ch.name, ch.detail,
                           rep.predicted.str());
        },
        opt.workers);

    // worked examples; unitary roots are written with indices starting at e0
    const std::vector<WorkedExample> examples = {
        {GroupKind::B_soOdd, 4, {2}, "T6 ⋉ (H1 ⊕ so(3;j3,j4))", {"e1+e2", "e1-e2", "e1"}, 1, {}},
        {GroupKind::B_soOdd, 4, {4}, "T4 ⋉ so(4;j1,j2,j3)", {"e1", "e2"}, 1, {}},
        {GroupKind::B_soOdd, 4, {2, 4}, "T8 ⋉ (H1 ⊕ H2)", {"e1+e2", "e1-e2", "e1", "e2"}, 2, {}},
        {GroupKind::D_soEven, 3, {2}, "T4 ⋉ (H1 ⊕ H2)", {"e1+e2", "e1-e2"}, 1, {}},
        {GroupKind::D_soEven, 5, {2}, "", {"e1+e2", "e1-e2", "e1+e3", "e1-e3"}, 1, {"so(4;j3,j4,j5)"}},
        {GroupKind::D_soEven, 5, {4}, "", {"e1+e3", "e1-e3", "e2+e3", "e2-e3"}, 1, {"so(4;j1,j2,j3)"}},
        {GroupKind::D_soEven, 5, {2, 4}, "T12 ⋉ (H1 ⊕ H2 ⊕ H3)",
         {"e1+e2", "e1-e2", "e1+e3", "e1-e3", "e2+e3", "e2-e3"}, 2, {}},
        {GroupKind::U_unitary, 2, {1}, "T4 ⋉ (H0 ⊕ u(2;j2))", {"e0-e1", "e0-e2"}, 1, {}},
        {GroupKind::U_unitary, 2, {2}, "T4 ⋉ (u(2;j1) ⊕ H2)", {"e0-e2", "e1-e2"}, 1, {}},
        {GroupKind::U_unitary, 2, {1, 2}, "T6 ⋉ (H0 ⊕ H1 ⊕ H2)", {"e0-e1", "e0-e2", "e1-e2"}, 2, {}},
        {GroupKind::SU_special, 2, {1}, "", {"e0-e1", "e0-e2"}, 1, {"su(2;j2)"}},
        {GroupKind::SU_special, 2, {2}, "T4 ⋉ u(2;j1)", {"e0-e2", "e1-e2"}, 1, {}},
        {GroupKind::SU_special, 2, {1, 2}, "T6 ⋉ (H1 ⊕ H2)", {"e0-e1", "e0-e2", "e1-e2"}, 2, {}},
    };
    for (const auto& ex : examples) {
        c.count();
        DecompositionReport rep = verify_decomposition(ex.kind, ex.n, {ex.iota, {}});
        std::string idx;
        for (int k : ex.iota) idx += (idx.empty() ? "" : ",") + std::to_string(k);
        std::string where = "worked example " + algebra_label(ex.kind, ex.n) + " iota at {" + idx + "}";
        c.expect(rep.pass(), where + ": verification", rep.predicted.str(), "all checks pass");
        if (!ex.structure.empty())
            c.expect(rep.predicted.str() == ex.structure, where + ": structure", rep.predicted.str(), ex.structure);
        auto got = root_set(rep.predicted.radical), want = pm_roots(ex.radical);
        c.expect(got == want, where + ": radical", roots_str(got), roots_str(want));
        // lower central series ends in 0 after `nilpotency` steps
        int steps = static_cast<int>(rep.lower_central.size()) - 1;
        c.expect(steps == ex.nilpotency && rep.lower_central.back() == 0, where + ": nilpotency length",
                 std::to_string(steps), std::to_string(ex.nilpotency));
        for (const auto& b : ex.blocks) {
            bool found = false;
            for (const auto& blk : rep.predicted.blocks) found = found || blk.str() == b;
            c.expect(found, where + ": semisimple block", rep.predicted.str(), b);
        }
    }
    // abelian ideal of a one-parameter unitary contraction has dimension 2 k1 (n - k1 + 1)
    for (int n = 1; n <= 5; ++n)
        for (int k1 = 1; k1 <= n; ++k1) {
            c.count();
            auto lm = predicted_decomposition(GroupKind::U_unitary, n, {{k1}, {}});
            int want = 2 * k1 * (n - k1 + 1);
            c.expect(static_cast<int>(lm.radical.size()) == want,
                     algebra_label(GroupKind::U_unitary, n) + " iota at {" + std::to_string(k1) + "}: dim T",
                     std::to_string(lm.radical.size()), std::to_string(want));
        }
}

void criterion_ordered_contraction(CriterionReport& r, const SelftestOptions&) {
    Collector c(r);
    struct Expected {
        std::vector<int> order;
        std::string structure;
        std::vector<std::vector<std::string>> blocks;
    };
    const std::vector<Expected> cases = {
        {{2, 4}, "T8 = T6 ⋉ T2", {{"e1+e2", "e1-e2", "e1"}, {"e2"}}},
        {{4, 2}, "T8 = T4 ⊕ T̃4", {{"e1", "e2"}, {"e1+e2", "e1-e2"}}},
    };
    for (const auto& ex : cases) {
        c.count();
        BlockStructure bs = radical_block_structure(GroupKind::B_soOdd, 4, ex.order);
        std::string where = "so(5) order " + std::to_string(ex.order[0]) + "," + std::to_string(ex.order[1]);
        c.expect(bs.blocks.size() == ex.blocks.size(), where + ": block count", std::to_string(bs.blocks.size()),
                 std::to_string(ex.blocks.size()));
        for (std::size_t b = 0; b < std::min(bs.blocks.size(), ex.blocks.size()); ++b) {
            auto got = root_set(bs.blocks[b].elements), want = pm_roots(ex.blocks[b]);
            c.expect(got == want, where + ": block " + std::to_string(b + 1), roots_str(got), roots_str(want));
        }
        c.expect(bs.str() == ex.structure, where + ": structure", bs.str(), ex.structure);
    }
}

namespace {

Pim pim_of(int arity, const Scalar& s) { return Pim(arity, s); }

struct BValues {
    Scalar b11, bt11, b31, bt31, b22, b12, b21, bt12, bt21;
};

// symplectic-basis parameters of a 3 x 3 matrix of bare entries a (0-based) under sigma
BValues b_values(const std::vector<std::vector<Scalar>>& a, const std::vector<int>& sigma) {
    auto A = [&](int p, int q) { return a[sigma[p - 1] - 1][sigma[q - 1] - 1]; };
    Scalar half = Scalar::frac(1, 2), rs2 = Scalar::sqrt2() * half;  // 1/sqrt2
    BValues b;
    b.b11 = (A(1, 1) + A(3, 3)) * half;
    b.bt11 = (A(1, 3) - A(3, 1)) * half;
    b.b31 = (A(1, 1) - A(3, 3)) * half;
    b.bt31 = (A(1, 3) + A(3, 1)) * half;
    b.b22 = A(2, 2);
    b.b12 = A(1, 2) * rs2;
    b.b21 = A(2, 1) * rs2;
    b.bt12 = A(3, 2) * rs2;
    b.bt21 = A(2, 3) * rs2;
    return b;
}

std::vector<std::vector<Scalar>> random_bare(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-5, 5);
    std::vector<std::vector<Scalar>> a(3, std::vector<Scalar>(3));
    for (auto& row : a)
        for (auto& x : row) x = Scalar(d(rng));
    return a;
}

}  // namespace

void criterion_worked_matrices(CriterionReport& r, const SelftestOptions& opt) {
    Collector c(r);
    const int ar = 2;
    JValuation v = JValuation::iota_at(2, {1, 2});
    Pim J1 = Pim::iota(ar, 1), J2 = Pim::iota(ar, 2), J12 = J1 * J2, one(ar, Scalar(1));
    Pim I = pim_of(ar, Scalar::i());
    auto P = [&](const Scalar& s) { return pim_of(ar, s); };

    // SO(3;j) patterns: the three displays differ only in the monomials multiplying
    // the diagonal tilde terms, the b terms and the off-diagonal tilde terms
    struct Pattern {
        std::vector<int> sigma;
        Pim diag, b, tilde;
    };
    const std::vector<Pattern> patterns = {
        {{1, 2, 3}, J12, J1, J2},
        {{2, 1, 3}, J2, J1, J12},
        {{1, 3, 2}, J1, J12, J2},
    };
    for (int t = 0; t < 20; ++t) {
        auto rng = case_rng(opt.seed, 10, t);
        auto a = random_bare(rng);
        PMatrix A = ck_orthogonal_matrix(a, v);
        for (const auto& pt : patterns) {
            c.count();
            PMatrix B = symplectic_basis_conjugate(A, pt.sigma, v, false);
            BValues b = b_values(a, pt.sigma);
            PMatrix T(3, 3, ar);
            T(0, 0) = P(b.b11) + I * pt.diag * P(b.bt11);
            T(0, 1) = pt.b * P(b.b12) - I * pt.tilde * P(b.bt12);
            T(0, 2) = P(b.b31) - I * pt.diag * P(b.bt31);
            T(1, 0) = pt.b * P(b.b21) + I * pt.tilde * P(b.bt21);
            T(1, 1) = P(b.b22);
            T(1, 2) = pt.b * P(b.b21) - I * pt.tilde * P(b.bt21);
            T(2, 0) = P(b.b31) + I * pt.diag * P(b.bt31);
            T(2, 1) = pt.b * P(b.b12) + I * pt.tilde * P(b.bt12);
            T(2, 2) = P(b.b11) - I * pt.diag * P(b.bt11);
            std::ostringstream w;
            w << "SO(3;j) sigma=(" << pt.sigma[0] << pt.sigma[1] << pt.sigma[2] << ") case " << t;
            c.expect(B == T, w.str(), B.str(), T.str());
        }
    }

    // Galilei group: a11 = a22 = a33 = 1, a21 = -a12, a32 = -a23, a31 = -a13 + a12 a23
    for (int t = 0; t < 20; ++t) {
        auto rng = case_rng(opt.seed, 10, 1000 + t);
        std::uniform_int_distribution<int> d(-6, 6);
        Scalar a12 = d(rng), a13 = d(rng), a23 = d(rng);
        std::vector<std::vector<Scalar>> a = {{1, a12, a13}, {-a12, 1, a23}, {-a13 + a12 * a23, -a23, 1}};
        PMatrix A = ck_orthogonal_matrix(a, v);
        std::string tag = " case " + std::to_string(t);
        c.count();
        c.expect(check_j_orthogonality(A, v), "Galilei A(iota) j-orthogonal" + tag);
        if (!(a12 * a23).is_zero()) {
            auto bad = a;
            bad[2][0] = -a13;
            c.expect(!check_j_orthogonality(ck_orthogonal_matrix(bad, v), v),
                     "Galilei A(iota) without the a12 a23 term is rejected" + tag);
        }

        // first display, sigma = (1,2,3)
        {
            c.count();
            BValues b = b_values(a, {1, 2, 3});
            PMatrix B = symplectic_basis_conjugate(A, {1, 2, 3}, v);
            PMatrix T(3, 3, ar);
            T(0, 0) = one + I * J12 * P(b.bt11);
            T(0, 1) = J1 * P(b.b12) - I * J2 * P(b.bt12);
            T(0, 2) = -(I * J12 * P(b.bt31));
            T(1, 0) = -(J1 * P(b.b12)) - I * J2 * P(b.bt12);
            T(1, 1) = one;
            T(1, 2) = -(J1 * P(b.b12)) + I * J2 * P(b.bt12);
            T(2, 0) = I * J12 * P(b.bt31);
            T(2, 1) = J1 * P(b.b12) + I * J2 * P(b.bt12);
            T(2, 2) = one - I * J12 * P(b.bt11);
            c.expect(B == T, "Galilei sigma=(123) matrix" + tag, B.str(), T.str());
            c.expect(b.bt31 == -(b.b12 * b.bt12), "Galilei sigma=(123) constraint bt31 = -b12 bt12" + tag,
                     b.bt31.str(), (-(b.b12 * b.bt12)).str());
        }
        // second display, sigma = (2,1,3)
        {
            c.count();
            BValues b = b_values(a, {2, 1, 3});
            PMatrix B = symplectic_basis_conjugate(A, {2, 1, 3}, v);
            PMatrix T(3, 3, ar);
            T(0, 0) = one + I * J2 * P(b.bt11);
            T(0, 1) = J1 * P(b.b12) - I * J12 * P(b.bt12);
            T(0, 2) = Pim(ar);
            T(1, 0) = -(J1 * P(b.b12)) + I * J12 * P(b.bt21);
            T(1, 1) = one;
            T(1, 2) = -(J1 * P(b.b12)) - I * J12 * P(b.bt21);
            T(2, 0) = Pim(ar);
            T(2, 1) = J1 * P(b.b12) + I * J12 * P(b.bt12);
            T(2, 2) = one - I * J2 * P(b.bt11);
            c.expect(B == T, "Galilei sigma=(213) matrix" + tag, B.str(), T.str());
            Scalar rhs = -b.bt12 - b.b12 * b.bt11;
            c.expect(b.bt21 == rhs, "Galilei sigma=(213) constraint bt21 = -bt12 - b12 bt11" + tag, b.bt21.str(),
                     rhs.str());
        }
        // third display, sigma = (1,3,2)
        {
            c.count();
            BValues b = b_values(a, {1, 3, 2});
            PMatrix B = symplectic_basis_conjugate(A, {1, 3, 2}, v);
            PMatrix T(3, 3, ar);
            T(0, 0) = one + I * J1 * P(b.bt11);
            T(0, 1) = J12 * P(b.b12) - I * J2 * P(b.bt12);
            T(0, 2) = Pim(ar);
            T(1, 0) = J12 * P(b.b21) - I * J2 * P(b.bt12);
            T(1, 1) = one;
            T(1, 2) = J12 * P(b.b21) + I * J2 * P(b.bt12);
            T(2, 0) = Pim(ar);
            T(2, 1) = J12 * P(b.b12) + I * J2 * P(b.bt12);
            T(2, 2) = one - I * J1 * P(b.bt11);
            c.expect(B == T, "Galilei sigma=(132) matrix" + tag, B.str(), T.str());
            Scalar rhs = -b.b12 + b.bt11 * b.bt12;
            c.expect(b.b21 == rhs, "Galilei sigma=(132) constraint b21 = -b12 + bt11 bt12" + tag, b.b21.str(),
                     rhs.str());
        }
    }
}

}  // namespace ck::detail
