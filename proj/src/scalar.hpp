// scalar.hpp — pluggable exact coefficient domains: rationals, prime fields
// F_p (p > 2), multivariate polynomials over Q, and rational functions.
// Values are immutable; all operations are pure and exact.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bigint.hpp"

namespace nfa {

enum class ErrorCode {
    domain_mismatch,
    division_by_zero,
    non_invertible,
    singular_coefficient,
    dimension_mismatch,
    not_central,
    index_out_of_range,
    non_unit,
    singular_map,
    inconsistent_seed,
    unrecognized_family,
    search_space_too_large,
    invalid_indices,
    invalid_argument,
    parse_error,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

const char* error_code_name(ErrorCode code);

// ---------------------------------------------------------------------------

enum class DomainKind : uint8_t { rational, prime_field, polynomial, rational_function };

class Domain {
public:
    static Domain rational();
    static Domain prime_field(uint64_t p);  // requires p prime, p > 2
    static Domain polynomial(std::vector<std::string> vars);
    static Domain rational_function(std::vector<std::string> vars);

    DomainKind kind() const { return d_->kind; }
    uint64_t prime() const { return d_->p; }
    const std::vector<std::string>& vars() const { return d_->vars; }
    // index of a variable name, or -1
    int var_index(std::string_view name) const;

    bool is_field() const { return d_->kind != DomainKind::polynomial; }
    bool is_symbolic() const {
        return d_->kind == DomainKind::polynomial || d_->kind == DomainKind::rational_function;
    }

    bool operator==(const Domain& o) const;
    bool operator!=(const Domain& o) const { return !(*this == o); }

    std::string to_string() const;               // "q" | "fp:7" | "poly:a,b" | "ratfun:a,b"
    static Domain parse(std::string_view text);  // inverse of to_string

private:
    struct Data {
        DomainKind kind;
        uint64_t p = 0;
        std::vector<std::string> vars;  // sorted lexicographically, unique
    };
    explicit Domain(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

// ---------------------------------------------------------------------------

// Reduced fraction with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n, BigInt d);  // reduces, normalizes sign

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    // total order, used only for deterministic tie-breaking
    bool operator<(const Rational& o) const;

    std::string to_string() const;  // "n" or "n/d"
    static Rational parse(std::string_view s);

private:
    BigInt num_, den_;
};

// Exponent vector aligned with the domain's variable list; graded-lex order.
struct Monomial {
    std::vector<uint32_t> exps;

    uint64_t degree() const;
    bool is_constant() const;
    // graded lexicographic: by total degree, then lexicographic on exponents
    static int cmp(const Monomial& a, const Monomial& b);
    bool operator==(const Monomial& o) const { return exps == o.exps; }
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    // componentwise division; nullopt if not divisible
    static std::optional<Monomial> divide(const Monomial& a, const Monomial& b);
};

// Terms sorted descending by monomial order; no zero coefficients.
class Poly {
public:
    Poly() = default;
    static Poly constant(size_t nvars, Rational c);
    static Poly variable(size_t nvars, size_t index);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const Rational* constant_value() const;  // non-null iff constant (zero included)
    const std::vector<std::pair<Monomial, Rational>>& terms() const { return terms_; }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    // exact division; nullopt when the division leaves a remainder
    static std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

    static Poly from_terms(std::vector<std::pair<Monomial, Rational>> terms);  // normalizes

private:
    std::vector<std::pair<Monomial, Rational>> terms_;
};

struct RatFun {
    Poly num, den;  // den != 0; normalized by rational content of den
    bool operator==(const RatFun& o) const;  // cross-multiplied equality
};

// ---------------------------------------------------------------------------

enum class RingOp { add, sub, mul, div, pow };

class Scalar {
public:
    Scalar() : dom_(Domain::rational()), v_(Rational(0)) {}

    static Scalar zero(const Domain& dom);
    static Scalar one(const Domain& dom);
    static Scalar of_int(const Domain& dom, long long v);
    // embed a rational constant into any domain (mod-p reduction for F_p)
    static Scalar of_rational(const Domain& dom, const Rational& q);
    static Scalar variable(const Domain& dom, std::string_view name);
    static Scalar fp(const Domain& dom, uint64_t value);

    const Domain& domain() const { return dom_; }
    bool is_zero() const;
    bool is_one() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar operator-() const;
    Scalar pow(long long e) const;
    Scalar inverse() const { return one(dom_) / *this; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // deterministic total order within one domain (tie-breaking in canonical forms)
    bool less(const Scalar& o) const;

    const Rational& as_rational() const;
    uint64_t as_fp() const;
    const Poly& as_poly() const;
    const RatFun& as_ratfun() const;

    std::string to_string() const;

    // exact k-th root within the domain, if one exists (k >= 1).
    // Rational: unique real-sign root, positive for even k.
    // F_p: smallest root by representative. Symbolic domains: nullopt.
    std::optional<Scalar> kth_root(unsigned k) const;

private:
    Scalar(Domain d, Rational q) : dom_(std::move(d)), v_(std::move(q)) {}
    Scalar(Domain d, uint64_t f) : dom_(std::move(d)), v_(f) {}
    Scalar(Domain d, Poly p) : dom_(std::move(d)), v_(std::move(p)) {}
    Scalar(Domain d, RatFun r) : dom_(std::move(d)), v_(std::move(r)) {}

    Domain dom_;
    std::variant<Rational, uint64_t, Poly, RatFun> v_;
};

Scalar ring_op(const Scalar& a, const Scalar& b, RingOp op);

// Specialize symbolic parameters. Bindings map variable names (a subset of the
// expression's domain variables) to rational-domain scalars. Fully bound
// expressions collapse to the rational domain.
Scalar substitute(const Scalar& expr, const std::map<std::string, Scalar>& bindings);

// ---------------------------------------------------------------------------

// sum(coeff_u * u) + constant = 0
struct LinearEquation {
    std::map<std::string, Scalar> coeffs;
    Scalar constant;
};

// Unique value of `unknown` making the equation hold. All other unknowns must
// carry zero coefficients. SingularCoefficient when the pivot is zero.
Scalar solve_affine(const LinearEquation& eq, const std::string& unknown);

// Probes eval at X = 0, 1, 2, checks the dependence is affine, and solves
// eval(X) = 0 through solve_affine. Used for every "choosing A_k" step.
Scalar solve_affine_probe(const std::function<Scalar(const Scalar&)>& eval, const Domain& dom,
                          const std::string& unknown);

}  // namespace nfa
