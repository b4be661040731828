#pragma once

// Commutative algebra generated over Q(i,sqrt2) by nilpotents iota_1..iota_n
// (iota_k^2 = 0), plus valuations of the parameters j_k.

#include "ck/scalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ck {

// bit k-1 set <=> iota_k present
using IotaMask = std::uint64_t;
constexpr int kMaxArity = 64;

inline IotaMask iota_bit(int k) { return IotaMask(1) << (k - 1); }
std::vector<int> mask_indices(IotaMask m);

class Pim {
public:
    using Term = std::pair<IotaMask, Scalar>;

    Pim() = default;
    explicit Pim(int arity) : arity_(arity) {}
    Pim(int arity, const Scalar& c);
    static Pim iota(int arity, int k);
    static Pim monomial(int arity, IotaMask m, const Scalar& c);

    int arity() const { return arity_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
    // coefficient d_0 of the unit monomial
    Scalar unit_part() const;
    Scalar coeff(IotaMask m) const;
    bool is_unit() const { return !unit_part().is_zero(); }

    Pim operator-() const;
    Pim& operator+=(const Pim& o);
    Pim& operator-=(const Pim& o);
    Pim& operator*=(const Pim& o) { return *this = *this * o; }
    Pim& operator*=(const Scalar& s);
    friend Pim operator+(Pim a, const Pim& b) { return a += b; }
    friend Pim operator-(Pim a, const Pim& b) { return a -= b; }
    friend Pim operator*(const Pim& a, const Pim& b);
    friend Pim operator*(Pim a, const Scalar& s) { return a *= s; }
    friend Pim operator*(const Scalar& s, Pim a) { return a *= s; }

    bool operator==(const Pim& o) const;
    bool operator!=(const Pim& o) const { return !(*this == o); }

    // throws std::domain_error when d_0 = 0
    Pim inv() const;
    Pim conj() const;
    Pim pow(unsigned e) const;

    // "d0 + d1*I1 + d12*I1I2"
    std::string str() const;
    // inverse of str(); arity 0 takes the largest iota index present
    static Pim parse(const std::string& text, int arity = 0);

    // internal: adopt arity when one side was default-constructed
    void set_arity(int a) { arity_ = a; }

private:
    void add_term(IotaMask m, const Scalar& c);
    int arity_ = 0;
    std::vector<Term> terms_;
};

inline Pim pim_add(const Pim& x, const Pim& y) { return x + y; }
inline Pim pim_mul(const Pim& x, const Pim& y) { return x * y; }
inline Pim pim_inv(const Pim& x) { return x.inv(); }
inline Pim pim_conj(const Pim& x) { return x.conj(); }

enum class JKind { One, Imag, Iota, Custom };

struct JValue {
    JKind kind = JKind::One;
    Scalar custom;  // used when kind == Custom
};

class JValuation {
public:
    JValuation() = default;
    explicit JValuation(std::vector<JValue> v) : v_(std::move(v)) {}
    static JValuation ones(int n);
    static JValuation iota_at(int n, const std::vector<int>& idx);
    // "1,iota,1,i"; other entries are parsed as scalars
    static JValuation parse(const std::string& text);

    int size() const { return static_cast<int>(v_.size()); }
    const JValue& at(int k) const { return v_.at(k - 1); }
    JValue& at(int k) { return v_.at(k - 1); }
    JKind kind(int k) const { return at(k).kind; }
    bool is_iota(int k) const { return kind(k) == JKind::Iota; }
    std::vector<int> iota_indices() const;
    // value of j_k in the Pimenov algebra of arity size()
    Pim j(int k) const;
    std::string str() const;

private:
    std::vector<JValue> v_;
};

// formal product prod_k j_k^{e_k}, e_k >= 0
class JMonomial {
public:
    JMonomial() = default;
    explicit JMonomial(std::map<int, int> e);
    // prod_{l=a}^{b} j_l^power, empty when a > b
    static JMonomial range(int a, int b, int power);

    const std::map<int, int>& exponents() const { return e_; }
    bool is_one() const { return e_.empty(); }
    JMonomial operator*(const JMonomial& o) const;
    bool operator==(const JMonomial& o) const { return e_ == o.e_; }
    // "j2^2*j4^2" or "1"
    std::string str() const;
    // the monomial with all iota-valued indices removed, or nullopt-like flag when killed
    bool killed_by(const JValuation& v) const;
    JMonomial residual(const JValuation& v) const;

private:
    std::map<int, int> e_;
};

Pim jmono_eval(const JMonomial& m, const JValuation& v);

// prod_{l=min}^{max-1} j_l, (mu,mu) = 1
Pim interval_product(int mu, int nu, const JValuation& v);

// prod_{l=a}^{b} j_l^power under v; 1 when a > b
Pim jprod(int a, int b, int power, const JValuation& v);

}  // namespace ck
