#include "ck/selftest.hpp"

#include "common.hpp"

#include <cstdio>
#include <exception>
#include <sstream>
#include <stdexcept>

namespace ck {

namespace {

struct Entry {
    int id;
    const char* title;
    const char* checks;
    double budget;
    void (*run)(CriterionReport&, const SelftestOptions&);
};

const Entry kEntries[] = {
    {1, "Cartan-Weyl closure, orthogonal family", "matrix commutators of Cartan elements and root vectors equal the closed forms", 60, detail::criterion_cartan_weyl_orthogonal},
    {2, "Cartan-Weyl closure, unitary, special unitary and symplectic", "matrix commutators equal the closed forms of u, su and the sp Chevalley basis", 60,
     detail::criterion_cartan_weyl_unitary_symplectic},
    {3, "Contraction decompositions", "Levi-Maltsev checks for every admissible contraction plus the worked so, u and su examples", 120,
     detail::criterion_decompositions},
    {4, "Ordered-contraction block structures of so(5)", "radical partitions from successive one-parameter contractions, by sub-ideal rank tests", 0, detail::criterion_ordered_contraction},
    {5, "Category axioms of GA", "associativity with null, product dimension, duality and involution laws", 30, detail::criterion_category_axioms},
    {6, "Isotropic categories GD, B, C, D", "maximal isotropy of products, D closure, component parity cocycle", 0, detail::criterion_isotropic},
    {7, "Spin functor and spin_B", "one-dimensional intertwiner space, projective functoriality, parity splitting", 60, detail::criterion_spin},
    {8, "Berezin identities", "products of linear factors versus Grassmann exponentials", 0, detail::criterion_berezin},
    {9, "Ordered-category data and lowering functor", "lambda/mu/theta identities, U embedding, lowering functor laws and branches", 0,
     detail::criterion_ordered_category},
    {10, "Worked symplectic-basis matrices of SO(3;j) and the Galilei group", "D_sigma conjugates reproduce the displayed patterns and constraint entries", 0,
     detail::criterion_worked_matrices},
};

const Entry& entry(int id) {
    for (const auto& e : kEntries)
        if (e.id == id) return e;
    throw std::invalid_argument("unknown criterion " + std::to_string(id));
}

}  // namespace

bool SelftestReport::pass() const {
    for (const auto& c : criteria)
        if (!c.pass) return false;
    return true;
}

std::vector<int> library_criteria() {
    std::vector<int> ids;
    for (const auto& e : kEntries) ids.push_back(e.id);
    return ids;
}

std::string criterion_title(int id) { return entry(id).title; }

CriterionReport run_criterion(int id, const SelftestOptions& opt) {
    const Entry& e = entry(id);
    CriterionReport r;
    r.id = e.id;
    r.title = e.title;
    r.checks = e.checks;
    r.budget_seconds = e.budget;
    detail::Stopwatch sw;
    try {
        e.run(r, opt);
    } catch (const std::exception& ex) {
        ++r.failure_count;
        r.failures.push_back({"uncaught exception", ex.what(), {}});
    }
    r.seconds = sw.seconds();
    r.pass = r.failure_count == 0 && r.cases > 0;
    if (r.budget_seconds > 0 && r.seconds > r.budget_seconds) {
        r.pass = false;
        std::ostringstream os;
        os << "runtime " << r.seconds << " s exceeds " << r.budget_seconds << " s";
        r.notes.push_back(os.str());
    }
    return r;
}

SelftestReport run_selftest(const SelftestOptions& opt, const std::vector<int>& ids) {
    SelftestReport rep;
    for (int id : ids.empty() ? library_criteria() : ids) rep.criteria.push_back(run_criterion(id, opt));
    return rep;
}

std::string summary_line(const CriterionReport& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", r.seconds);
    std::ostringstream os;
    os << "criterion " << r.id << ' ' << (r.pass ? "PASS" : "FAIL") << "  " << r.title << "  [" << r.cases
       << " cases, " << r.failure_count << " failures, " << buf << " s";
    if (r.budget_seconds > 0) os << " of " << r.budget_seconds << " s";
    os << "]";
    return os.str();
}

}  // namespace ck
