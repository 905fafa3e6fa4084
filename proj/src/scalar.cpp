#include "scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "numbers.hpp"

namespace nfa {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::domain_mismatch: return "DomainMismatch";
        case ErrorCode::division_by_zero: return "DivisionByZero";
        case ErrorCode::non_invertible: return "NonInvertible";
        case ErrorCode::singular_coefficient: return "SingularCoefficient";
        case ErrorCode::dimension_mismatch: return "DimensionMismatch";
        case ErrorCode::not_central: return "NotCentral";
        case ErrorCode::index_out_of_range: return "IndexOutOfRange";
        case ErrorCode::non_unit: return "NonUnit";
        case ErrorCode::singular_map: return "SingularMap";
        case ErrorCode::inconsistent_seed: return "InconsistentSeed";
        case ErrorCode::unrecognized_family: return "UnrecognizedFamily";
        case ErrorCode::search_space_too_large: return "SearchSpaceTooLarge";
        case ErrorCode::invalid_indices: return "InvalidIndices";
        case ErrorCode::invalid_argument: return "InvalidArgument";
        case ErrorCode::parse_error: return "ParseError";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------- Domain

static void validate_vars(const std::vector<std::string>& vars) {
    if (vars.empty()) fail(ErrorCode::invalid_argument, "symbolic domain needs at least one variable");
    for (const auto& v : vars) {
        if (v.empty()) fail(ErrorCode::invalid_argument, "empty variable name");
        for (char c : v)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                fail(ErrorCode::invalid_argument, "bad variable name: " + v);
    }
    for (size_t i = 1; i < vars.size(); ++i)
        if (!(vars[i - 1] < vars[i]))
            fail(ErrorCode::invalid_argument, "variables must be sorted and unique");
}

Domain Domain::rational() {
    static const auto data = std::make_shared<const Data>(Data{DomainKind::rational, 0, {}});
    return Domain(data);
}

Domain Domain::prime_field(uint64_t p) {
    if (p <= 2) fail(ErrorCode::invalid_argument, "prime field requires p > 2");
    if (p >= (1ull << 62)) fail(ErrorCode::invalid_argument, "prime too large");
    if (!is_prime_u64(p)) fail(ErrorCode::invalid_argument, "not a prime: " + std::to_string(p));
    return Domain(std::make_shared<const Data>(Data{DomainKind::prime_field, p, {}}));
}

Domain Domain::polynomial(std::vector<std::string> vars) {
    std::sort(vars.begin(), vars.end());
    validate_vars(vars);
    return Domain(std::make_shared<const Data>(Data{DomainKind::polynomial, 0, std::move(vars)}));
}

Domain Domain::rational_function(std::vector<std::string> vars) {
    std::sort(vars.begin(), vars.end());
    validate_vars(vars);
    return Domain(std::make_shared<const Data>(Data{DomainKind::rational_function, 0, std::move(vars)}));
}

int Domain::var_index(std::string_view name) const {
    const auto& vs = d_->vars;
    auto it = std::lower_bound(vs.begin(), vs.end(), name);
    if (it == vs.end() || *it != name) return -1;
    return int(it - vs.begin());
}

bool Domain::operator==(const Domain& o) const {
    if (d_ == o.d_) return true;
    return d_->kind == o.d_->kind && d_->p == o.d_->p && d_->vars == o.d_->vars;
}

std::string Domain::to_string() const {
    switch (d_->kind) {
        case DomainKind::rational: return "q";
        case DomainKind::prime_field: return "fp:" + std::to_string(d_->p);
        case DomainKind::polynomial:
        case DomainKind::rational_function: {
            std::string s = d_->kind == DomainKind::polynomial ? "poly:" : "ratfun:";
            for (size_t i = 0; i < d_->vars.size(); ++i) {
                if (i) s += ',';
                s += d_->vars[i];
            }
            return s;
        }
    }
    return "?";
}

Domain Domain::parse(std::string_view text) {
    if (text == "q") return rational();
    auto split_vars = [](std::string_view body) {
        std::vector<std::string> vars;
        size_t pos = 0;
        while (pos <= body.size()) {
            size_t comma = body.find(',', pos);
            if (comma == std::string_view::npos) {
                vars.emplace_back(body.substr(pos));
                break;
            }
            vars.emplace_back(body.substr(pos, comma - pos));
            pos = comma + 1;
        }
        return vars;
    };
    if (text.rfind("fp:", 0) == 0) {
        uint64_t p = 0;
        auto body = text.substr(3);
        if (body.empty()) fail(ErrorCode::parse_error, "fp: missing prime");
        for (char c : body) {
            if (!std::isdigit(static_cast<unsigned char>(c))) fail(ErrorCode::parse_error, "fp: bad prime");
            p = p * 10 + uint64_t(c - '0');
            if (p >= (1ull << 62)) fail(ErrorCode::parse_error, "fp: prime too large");
        }
        return prime_field(p);
    }
    if (text.rfind("poly:", 0) == 0) return polynomial(split_vars(text.substr(5)));
    if (text.rfind("ratfun:", 0) == 0) return rational_function(split_vars(text.substr(7)));
    fail(ErrorCode::parse_error, "bad domain: " + std::string(text));
}

// -------------------------------------------------------------------- Rational

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) fail(ErrorCode::division_by_zero, "rational with zero denominator");
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) fail(ErrorCode::division_by_zero, "rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}
Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

bool Rational::operator<(const Rational& o) const {
    return (num_ * o.den_).cmp(o.num_ * den_) < 0;
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::parse(std::string_view s) {
    size_t slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(BigInt::from_string(s), BigInt(1));
        return Rational(BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1)));
    } catch (const std::invalid_argument& e) {
        fail(ErrorCode::parse_error, std::string("bad rational: ") + std::string(s));
    }
}

// -------------------------------------------------------------------- Monomial

uint64_t Monomial::degree() const {
    uint64_t d = 0;
    for (auto e : exps) d += e;
    return d;
}

bool Monomial::is_constant() const {
    for (auto e : exps)
        if (e) return false;
    return true;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
    uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
    return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
    return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.exps.size(); ++i) {
        if (r.exps[i] < b.exps[i]) return std::nullopt;
        r.exps[i] -= b.exps[i];
    }
    return r;
}

// ------------------------------------------------------------------------ Poly

Poly Poly::constant(size_t nvars, Rational c) {
    Poly p;
    if (!c.is_zero()) p.terms_.push_back({Monomial{std::vector<uint32_t>(nvars, 0)}, std::move(c)});
    return p;
}

Poly Poly::variable(size_t nvars, size_t index) {
    Poly p;
    Monomial m{std::vector<uint32_t>(nvars, 0)};
    m.exps[index] = 1;
    p.terms_.push_back({std::move(m), Rational(1)});
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_constant());
}

const Rational* Poly::constant_value() const {
    static const Rational zero(0);
    if (terms_.empty()) return &zero;
    if (terms_.size() == 1 && terms_[0].first.is_constant()) return &terms_[0].second;
    return nullptr;
}

Poly Poly::from_terms(std::vector<std::pair<Monomial, Rational>> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return Monomial::cmp(a.first, b.first) > 0; });
    Poly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second = p.terms_.back().second + t.second;
            if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
        } else if (!t.second.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<std::pair<Monomial, Rational>> merged;
    merged.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        int c = Monomial::cmp(a.terms_[i].first, b.terms_[j].first);
        if (c > 0) merged.push_back(a.terms_[i++]);
        else if (c < 0) merged.push_back(b.terms_[j++]);
        else {
            Rational s = a.terms_[i].second + b.terms_[j].second;
            if (!s.is_zero()) merged.push_back({a.terms_[i].first, std::move(s)});
            ++i, ++j;
        }
    }
    while (i < a.terms_.size()) merged.push_back(a.terms_[i++]);
    while (j < b.terms_.size()) merged.push_back(b.terms_[j++]);
    Poly p;
    p.terms_ = std::move(merged);
    return p;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    std::vector<std::pair<Monomial, Rational>> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            prod.push_back({ta.first * tb.first, ta.second * tb.second});
    return Poly::from_terms(std::move(prod));
}

std::optional<Poly> Poly::divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(ErrorCode::division_by_zero, "polynomial division by zero");
    if (const Rational* c = b.constant_value()) {
        Poly q = a;
        for (auto& t : q.terms_) t.second = t.second / *c;
        return q;
    }
    Poly rem = a, quot;
    const auto& lead = b.terms_.front();
    while (!rem.is_zero()) {
        auto m = Monomial::divide(rem.terms_.front().first, lead.first);
        if (!m) return std::nullopt;
        Poly factor;
        factor.terms_.push_back({*m, rem.terms_.front().second / lead.second});
        quot = quot + factor;
        rem = rem - factor * b;
    }
    return quot;
}

bool RatFun::operator==(const RatFun& o) const { return num * o.den == o.num * den; }

// ---------------------------------------------------------------------- Scalar

Scalar Scalar::zero(const Domain& dom) {
    switch (dom.kind()) {
        case DomainKind::rational: return Scalar(dom, Rational(0));
        case DomainKind::prime_field: return Scalar(dom, uint64_t(0));
        case DomainKind::polynomial: return Scalar(dom, Poly());
        case DomainKind::rational_function:
            return Scalar(dom, RatFun{Poly(), Poly::constant(dom.vars().size(), Rational(1))});
    }
    fail(ErrorCode::invalid_argument, "bad domain");
}

Scalar Scalar::one(const Domain& dom) { return of_int(dom, 1); }

Scalar Scalar::of_int(const Domain& dom, long long v) { return of_rational(dom, Rational(v)); }

Scalar Scalar::of_rational(const Domain& dom, const Rational& q) {
    switch (dom.kind()) {
        case DomainKind::rational: return Scalar(dom, q);
        case DomainKind::prime_field: {
            BigInt p((long long)dom.prime());
            BigInt n = q.num() % p;
            if (n.is_negative()) n = n + p;
            BigInt d = q.den() % p;
            uint64_t nv = *n.to_u64_abs();
            uint64_t dv = *d.to_u64_abs();
            if (dv == 0)
                fail(ErrorCode::non_invertible, "denominator divisible by p");
            uint64_t inv = powmod_u64(dv, dom.prime() - 2, dom.prime());
            return Scalar(dom, mulmod_u64(nv, inv, dom.prime()));
        }
        case DomainKind::polynomial: return Scalar(dom, Poly::constant(dom.vars().size(), q));
        case DomainKind::rational_function:
            return Scalar(dom, RatFun{Poly::constant(dom.vars().size(), q),
                                      Poly::constant(dom.vars().size(), Rational(1))});
    }
    fail(ErrorCode::invalid_argument, "bad domain");
}

Scalar Scalar::variable(const Domain& dom, std::string_view name) {
    if (!dom.is_symbolic()) fail(ErrorCode::domain_mismatch, "variables require a symbolic domain");
    int idx = dom.var_index(name);
    if (idx < 0) fail(ErrorCode::invalid_argument, "unknown variable: " + std::string(name));
    Poly v = Poly::variable(dom.vars().size(), size_t(idx));
    if (dom.kind() == DomainKind::polynomial) return Scalar(dom, std::move(v));
    return Scalar(dom, RatFun{std::move(v), Poly::constant(dom.vars().size(), Rational(1))});
}

Scalar Scalar::fp(const Domain& dom, uint64_t value) {
    if (dom.kind() != DomainKind::prime_field) fail(ErrorCode::domain_mismatch, "fp value in non-field domain");
    return Scalar(dom, value % dom.prime());
}

bool Scalar::is_zero() const {
    switch (dom_.kind()) {
        case DomainKind::rational: return std::get<Rational>(v_).is_zero();
        case DomainKind::prime_field: return std::get<uint64_t>(v_) == 0;
        case DomainKind::polynomial: return std::get<Poly>(v_).is_zero();
        case DomainKind::rational_function: return std::get<RatFun>(v_).num.is_zero();
    }
    return false;
}

bool Scalar::is_one() const { return *this == one(dom_); }

const Rational& Scalar::as_rational() const {
    if (dom_.kind() != DomainKind::rational) fail(ErrorCode::domain_mismatch, "not a rational");
    return std::get<Rational>(v_);
}
uint64_t Scalar::as_fp() const {
    if (dom_.kind() != DomainKind::prime_field) fail(ErrorCode::domain_mismatch, "not a field element");
    return std::get<uint64_t>(v_);
}
const Poly& Scalar::as_poly() const {
    if (dom_.kind() != DomainKind::polynomial) fail(ErrorCode::domain_mismatch, "not a polynomial");
    return std::get<Poly>(v_);
}
const RatFun& Scalar::as_ratfun() const {
    if (dom_.kind() != DomainKind::rational_function) fail(ErrorCode::domain_mismatch, "not a rational function");
    return std::get<RatFun>(v_);
}

static void check_same_domain(const Scalar& a, const Scalar& b) {
    if (a.domain() != b.domain())
        fail(ErrorCode::domain_mismatch,
             "operands in different domains: " + a.domain().to_string() + " vs " + b.domain().to_string());
}

static RatFun ratfun_normalize(Poly num, Poly den) {
    if (den.is_zero()) fail(ErrorCode::division_by_zero, "rational function with zero denominator");
    if (num.is_zero()) return RatFun{Poly(), Poly::constant(den.terms().empty() ? 0 : den.terms()[0].first.exps.size(), Rational(1))};
    // scale so the denominator's leading coefficient is 1
    const Rational& lead = den.terms().front().second;
    if (!lead.is_one()) {
        auto inv = Poly::constant(den.terms().front().first.exps.size(), Rational(1) / lead);
        num = num * inv;
        den = den * inv;
    }
    return RatFun{std::move(num), std::move(den)};
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    check_same_domain(a, b);
    switch (a.dom_.kind()) {
        case DomainKind::rational: return Scalar(a.dom_, std::get<Rational>(a.v_) + std::get<Rational>(b.v_));
        case DomainKind::prime_field: {
            uint64_t p = a.dom_.prime();
            return Scalar(a.dom_, (std::get<uint64_t>(a.v_) + std::get<uint64_t>(b.v_)) % p);
        }
        case DomainKind::polynomial: return Scalar(a.dom_, std::get<Poly>(a.v_) + std::get<Poly>(b.v_));
        case DomainKind::rational_function: {
            const auto& x = std::get<RatFun>(a.v_);
            const auto& y = std::get<RatFun>(b.v_);
            return Scalar(a.dom_, ratfun_normalize(x.num * y.den + y.num * x.den, x.den * y.den));
        }
    }
    fail(ErrorCode::invalid_argument, "bad domain");
}

Scalar Scalar::operator-() const {
    switch (dom_.kind()) {
        case DomainKind::rational: return Scalar(dom_, -std::get<Rational>(v_));
        case DomainKind::prime_field: {
            uint64_t v = std::get<uint64_t>(v_);
            return Scalar(dom_, v == 0 ? 0 : dom_.prime() - v);
        }
        case DomainKind::polynomial: return Scalar(dom_, -std::get<Poly>(v_));
        case DomainKind::rational_function: {
            const auto& x = std::get<RatFun>(v_);
            return Scalar(dom_, RatFun{-x.num, x.den});
        }
    }
    fail(ErrorCode::invalid_argument, "bad domain");
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    check_same_domain(a, b);
    switch (a.dom_.kind()) {
        case DomainKind::rational: return Scalar(a.dom_, std::get<Rational>(a.v_) * std::get<Rational>(b.v_));
        case DomainKind::prime_field:
            return Scalar(a.dom_, mulmod_u64(std::get<uint64_t>(a.v_), std::get<uint64_t>(b.v_), a.dom_.prime()));
        case DomainKind::polynomial: return Scalar(a.dom_, std::get<Poly>(a.v_) * std::get<Poly>(b.v_));
        case DomainKind::rational_function: {
            const auto& x = std::get<RatFun>(a.v_);
            const auto& y = std::get<RatFun>(b.v_);
            return Scalar(a.dom_, ratfun_normalize(x.num * y.num, x.den * y.den));
        }
    }
    fail(ErrorCode::invalid_argument, "bad domain");
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    check_same_domain(a, b);
    if (b.is_zero()) fail(ErrorCode::division_by_zero, "division by zero");
    switch (a.dom_.kind()) {
        case DomainKind::rational: return Scalar(a.dom_, std::get<Rational>(a.v_) / std::get<Rational>(b.v_));
        case DomainKind::prime_field: {
            uint64_t p = a.dom_.prime();
            uint64_t inv = powmod_u64(std::get<uint64_t>(b.v_), p - 2, p);
            return Scalar(a.dom_, mulmod_u64(std::get<uint64_t>(a.v_), inv, p));
        }
        case DomainKind::polynomial: {
            auto q = Poly::divide_exact(std::get<Poly>(a.v_), std::get<Poly>(b.v_));
            if (!q) fail(ErrorCode::non_invertible, "inexact polynomial division");
            return Scalar(a.dom_, std::move(*q));
        }
        case DomainKind::rational_function: {
            const auto& x = std::get<RatFun>(a.v_);
            const auto& y = std::get<RatFun>(b.v_);
            return Scalar(a.dom_, ratfun_normalize(x.num * y.den, x.den * y.num));
        }
    }
    fail(ErrorCode::invalid_argument, "bad domain");
}

Scalar Scalar::pow(long long e) const {
    if (e < 0) return one(dom_) / pow(-e);
    Scalar base = *this, result = one(dom_);
    unsigned long long k = (unsigned long long)e;
    while (k) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

bool Scalar::operator==(const Scalar& o) const {
    if (dom_ != o.dom_) return false;
    return v_ == o.v_;
}

bool Scalar::less(const Scalar& o) const {
    check_same_domain(*this, o);
    switch (dom_.kind()) {
        case DomainKind::rational: return std::get<Rational>(v_) < std::get<Rational>(o.v_);
        case DomainKind::prime_field: return std::get<uint64_t>(v_) < std::get<uint64_t>(o.v_);
        default: return to_string() < o.to_string();
    }
}

static std::string poly_to_string(const Poly& p, const std::vector<std::string>& vars) {
    if (p.is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < p.terms().size(); ++i) {
        const auto& [m, c] = p.terms()[i];
        if (i) out += " + ";
        std::string mono;
        for (size_t v = 0; v < m.exps.size(); ++v) {
            if (!m.exps[v]) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[v];
            if (m.exps[v] > 1) mono += "^" + std::to_string(m.exps[v]);
        }
        if (mono.empty()) out += c.to_string();
        else if (c.is_one()) out += mono;
        else if ((-c).is_one()) out += "-" + mono;
        else out += c.to_string() + "*" + mono;
    }
    return out;
}

std::string Scalar::to_string() const {
    switch (dom_.kind()) {
        case DomainKind::rational: return std::get<Rational>(v_).to_string();
        case DomainKind::prime_field: return std::to_string(std::get<uint64_t>(v_));
        case DomainKind::polynomial: return poly_to_string(std::get<Poly>(v_), dom_.vars());
        case DomainKind::rational_function: {
            const auto& r = std::get<RatFun>(v_);
            if (const Rational* c = r.den.constant_value(); c && c->is_one())
                return poly_to_string(r.num, dom_.vars());
            return "(" + poly_to_string(r.num, dom_.vars()) + ")/(" + poly_to_string(r.den, dom_.vars()) + ")";
        }
    }
    return "?";
}

std::optional<Scalar> Scalar::kth_root(unsigned k) const {
    if (k == 0) return std::nullopt;
    if (k == 1) return *this;
    switch (dom_.kind()) {
        case DomainKind::rational: {
            const auto& q = std::get<Rational>(v_);
            auto rn = BigInt::exact_kth_root(q.num(), k);
            auto rd = BigInt::exact_kth_root(q.den(), k);
            if (!rn || !rd) return std::nullopt;
            return Scalar(dom_, Rational(*rn, *rd));
        }
        case DomainKind::prime_field: {
            uint64_t p = dom_.prime();
            if (p > 10000019ull)
                fail(ErrorCode::invalid_argument, "kth_root: prime too large for exhaustive root search");
            uint64_t v = std::get<uint64_t>(v_);
            if (v == 0) return Scalar(dom_, uint64_t(0));
            for (uint64_t c = 1; c < p; ++c)
                if (powmod_u64(c, k, p) == v) return Scalar(dom_, c);
            return std::nullopt;
        }
        default:
            return std::nullopt;  // roots are never extracted symbolically
    }
}

Scalar ring_op(const Scalar& a, const Scalar& b, RingOp op) {
    switch (op) {
        case RingOp::add: return a + b;
        case RingOp::sub: return a - b;
        case RingOp::mul: return a * b;
        case RingOp::div: return a / b;
        case RingOp::pow: {
            if (b.domain().kind() != DomainKind::rational || !b.as_rational().is_integer())
                fail(ErrorCode::invalid_argument, "pow exponent must be an integer");
            auto e = b.as_rational().num().to_ll();
            if (!e) fail(ErrorCode::invalid_argument, "pow exponent too large");
            return a.pow(*e);
        }
    }
    fail(ErrorCode::invalid_argument, "bad ring op");
}

// ------------------------------------------------------------------ substitute

static Poly substitute_poly(const Poly& p, const std::vector<int>& bound_idx,
                            const std::vector<Rational>& bound_val, size_t nvars) {
    std::vector<std::pair<Monomial, Rational>> out;
    out.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) {
        Rational coeff = c;
        Monomial rest{std::vector<uint32_t>(nvars, 0)};
        for (size_t v = 0; v < nvars; ++v) {
            if (!m.exps[v]) continue;
            if (bound_idx[v] >= 0) {
                Rational pw(1);
                for (uint32_t i = 0; i < m.exps[v]; ++i) pw = pw * bound_val[size_t(bound_idx[v])];
                coeff = coeff * pw;
            } else {
                rest.exps[v] = m.exps[v];
            }
        }
        out.push_back({std::move(rest), std::move(coeff)});
    }
    return Poly::from_terms(std::move(out));
}

Scalar substitute(const Scalar& expr, const std::map<std::string, Scalar>& bindings) {
    const Domain& dom = expr.domain();
    if (!dom.is_symbolic()) return expr;  // nothing to bind

    size_t nvars = dom.vars().size();
    std::vector<int> bound_idx(nvars, -1);
    std::vector<Rational> bound_val;
    for (const auto& [name, value] : bindings) {
        int idx = dom.var_index(name);
        if (idx < 0) fail(ErrorCode::invalid_argument, "binding for unknown variable: " + name);
        if (value.domain().kind() != DomainKind::rational)
            fail(ErrorCode::domain_mismatch, "binding values must be rationals");
        bound_idx[size_t(idx)] = int(bound_val.size());
        bound_val.push_back(value.as_rational());
    }

    if (dom.kind() == DomainKind::polynomial) {
        Poly r = substitute_poly(expr.as_poly(), bound_idx, bound_val, nvars);
        if (const Rational* c = r.constant_value()) return Scalar::of_rational(Domain::rational(), *c);
        Scalar out = Scalar::zero(dom);
        // rebuild in the same domain
        for (const auto& [m, c] : r.terms()) {
            Scalar term = Scalar::of_rational(dom, c);
            for (size_t v = 0; v < nvars; ++v)
                for (uint32_t i = 0; i < m.exps[v]; ++i) term = term * Scalar::variable(dom, dom.vars()[v]);
            out = out + term;
        }
        return out;
    }

    // rational function: substitute numerator and denominator
    const RatFun& rf = expr.as_ratfun();
    Poly num = substitute_poly(rf.num, bound_idx, bound_val, nvars);
    Poly den = substitute_poly(rf.den, bound_idx, bound_val, nvars);
    if (den.is_zero()) fail(ErrorCode::division_by_zero, "denominator vanishes under substitution");
    const Rational* cn = num.constant_value();
    const Rational* cd = den.constant_value();
    if (cn && cd) return Scalar::of_rational(Domain::rational(), *cn / *cd);
    Scalar out_num = Scalar::zero(dom), out_den = Scalar::zero(dom);
    auto lift = [&](const Poly& p) {
        Scalar acc = Scalar::zero(dom);
        for (const auto& [m, c] : p.terms()) {
            Scalar term = Scalar::of_rational(dom, c);
            for (size_t v = 0; v < nvars; ++v)
                for (uint32_t i = 0; i < m.exps[v]; ++i) term = term * Scalar::variable(dom, dom.vars()[v]);
            acc = acc + term;
        }
        return acc;
    };
    out_num = lift(num);
    out_den = lift(den);
    return out_num / out_den;
}

// ----------------------------------------------------------------- solve_affine

Scalar solve_affine_probe(const std::function<Scalar(const Scalar&)>& eval, const Domain& dom,
                          const std::string& unknown) {
    Scalar v0 = eval(Scalar::zero(dom));
    Scalar v1 = eval(Scalar::one(dom));
    Scalar v2 = eval(Scalar::of_int(dom, 2));
    Scalar c1 = v1 - v0;
    if (!((v2 - v0) - (c1 + c1)).is_zero())
        fail(ErrorCode::invalid_argument, "step is not affine in " + unknown);
    LinearEquation eq{{{unknown, c1}}, v0};
    return solve_affine(eq, unknown);
}

Scalar solve_affine(const LinearEquation& eq, const std::string& unknown) {
    auto it = eq.coeffs.find(unknown);
    if (it == eq.coeffs.end())
        fail(ErrorCode::invalid_argument, "unknown '" + unknown + "' not present in equation");
    for (const auto& [name, coeff] : eq.coeffs) {
        if (name == unknown) continue;
        if (!coeff.is_zero())
            fail(ErrorCode::invalid_argument, "unknown '" + name + "' is not bound");
    }
    const Scalar& pivot = it->second;
    if (pivot.is_zero())
        fail(ErrorCode::singular_coefficient, "coefficient of '" + unknown + "' is zero");
    return (-eq.constant) / pivot;
}

}  // namespace nfa
