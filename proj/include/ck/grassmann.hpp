#pragma once

// Exterior algebra on anticommuting generators and the Clifford-type
// operators acting on it.  Monomials are bitmasks, bit i = generator i.

#include "ck/linalg.hpp"
#include "ck/relcat.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ck {

// sign of xi_a xi_b -> xi_{a|b} (a, b disjoint)
int merge_sign(std::uint32_t a, std::uint32_t b);

class GrassmannElement {
public:
    GrassmannElement() = default;
    explicit GrassmannElement(int vars);
    static GrassmannElement constant(int vars, const Scalar& c);
    static GrassmannElement generator(int vars, int i);
    // c0 + sum coefs[i] xi_i
    static GrassmannElement linear(int vars, const std::vector<Scalar>& coefs, const Scalar& c0 = Scalar());

    int vars() const { return vars_; }
    const std::map<std::uint32_t, Scalar>& terms() const { return terms_; }
    Scalar coef(std::uint32_t mask) const;
    void add_term(std::uint32_t mask, const Scalar& c);
    Scalar constant_term() const { return coef(0); }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for zero
    // terms of exactly degree d
    GrassmannElement part(int d) const;

    GrassmannElement operator+(const GrassmannElement& o) const;
    GrassmannElement operator-(const GrassmannElement& o) const;
    GrassmannElement operator*(const GrassmannElement& o) const;
    GrassmannElement operator*(const Scalar& s) const;
    bool operator==(const GrassmannElement& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const GrassmannElement& o) const { return !(*this == o); }
    std::string str() const;

private:
    int vars_ = 0;
    std::map<std::uint32_t, Scalar> terms_;
};

// sum f^k / k!; throws unless the constant term is zero
GrassmannElement grassmann_exp(const GrassmannElement& f);
// log(1 + x) for x with zero constant term
GrassmannElement grassmann_log1p(const GrassmannElement& x);
// linear change of generators: z_r -> sum_t m(r, t) y_t
GrassmannElement substitute(const GrassmannElement& g, const SMatrix& m);

// masks with popcount k in lexicographic order of the index tuples
std::vector<std::uint32_t> graded_basis(int n, int k);
// k-th compound matrix (k x k minors), rows/cols indexed by graded_basis
SMatrix compound_matrix(const SMatrix& a, int k);

// operators on Lambda(C^n) in the mask basis (2^n x 2^n)
SMatrix creation_operator(int n, int i);
SMatrix annihilation_operator(int n, int i);
SMatrix parity_operator(int n);

// a(x) on Lambda(V_+): creation by the e-part, contraction by the f-part, and for
// B objects (gamma_sign / sqrt2) * parity by the l-part
SMatrix clifford_action(const CKObject& v, const std::vector<Scalar>& x, int gamma_sign = 1);

}  // namespace ck
