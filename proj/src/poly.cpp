#include "wbr/poly.hpp"

#include <algorithm>

namespace wbr {

std::string indet_name(Indet v) {
    switch (v) {
        case Indet::delta: return "d";
        case Indet::q: return "q";
        case Indet::z: return "z";
    }
    throw InternalError("indet_name");
}

Poly::Poly(Indet var, std::vector<Rat> coeffs) : var_(var), coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Indet var, const Rat& c) {
    Poly p(var);
    if (!rat_is_zero(c)) p.coeffs_ = {c};
    return p;
}

Poly Poly::monomial(Indet var, const Rat& c, int deg) {
    Poly p(var);
    if (deg < 0) throw IndexOutOfRange("Poly::monomial: negative degree");
    if (!rat_is_zero(c)) {
        p.coeffs_.assign(static_cast<size_t>(deg) + 1, Rat(0));
        p.coeffs_.back() = c;
    }
    return p;
}

const Rat& Poly::coeff(int i) const {
    static const Rat kZero(0);
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

const Rat& Poly::lc() const {
    static const Rat kZero(0);
    return coeffs_.empty() ? kZero : coeffs_.back();
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

void Poly::trim() {
    while (!coeffs_.empty() && rat_is_zero(coeffs_.back())) coeffs_.pop_back();
}

void Poly::check_var(const Poly& o) const {
    if (var_ != o.var_) throw MixedModes("polynomials over different indeterminates");
}

Poly Poly::operator-() const {
    Poly p(var_);
    p.coeffs_.reserve(coeffs_.size());
    for (const Rat& c : coeffs_) p.coeffs_.push_back(-c);
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    check_var(o);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_var(o);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_var(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.var_);
    std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (rat_is_zero(a.coeffs_[i])) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(a.var_, std::move(c));
}

Poly Poly::operator*(const Rat& c) const {
    if (rat_is_zero(c)) return Poly(var_);
    Poly p(var_);
    p.coeffs_.reserve(coeffs_.size());
    for (const Rat& a : coeffs_) p.coeffs_.push_back(a * c);
    return p;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    a.check_var(b);
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly rem = a;
    Poly quot(a.var_);
    const int db = b.degree();
    while (!rem.is_zero() && rem.degree() >= db) {
        const int k = rem.degree() - db;
        const Rat c = rem.lc() / b.lc();
        Poly t = Poly::monomial(a.var_, c, k);
        quot += t;
        rem -= t * b;
    }
    return {quot, rem};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InternalError("exact_div: nonzero remainder");
    return q;
}

Poly poly_gcd(Poly a, Poly b) {
    a.check_var(b);
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Rat Poly::content() const {
    if (coeffs_.empty()) return Rat(1);
    Int num_gcd(0), den_lcm(1);
    for (const Rat& c : coeffs_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / lc());
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    const std::string x = indet_name(var_);
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = coeff(i);
        if (rat_is_zero(c)) continue;
        const bool first = out.empty();
        Rat a = rat_abs(c);
        if (sgn(c) < 0)
            out += first ? "-" : "-";
        else if (!first)
            out += "+";
        if (i == 0) {
            out += rat_to_string(a);
        } else {
            if (a != 1) out += rat_to_string(a) + "*";
            out += x;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.var() != den_.var()) throw MixedModes("rational function with mixed indeterminates");
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
}

RatFun RatFun::from_poly(Poly p) {
    const Indet v = p.var();
    return RatFun(std::move(p), Poly::constant(v, 1));
}

Rat RatFun::constant_value() const {
    if (!is_constant()) throw InternalError("RatFun::constant_value on non-constant");
    return num_.coeff(0) / den_.coeff(0);
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.var(), 1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    const Rat scale = Rat(1) / den_.lc();
    num_ = num_ * scale;
    den_ = den_ * scale;
}

RatFun RatFun::operator-() const {
    RatFun r(var());
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) { return RatFun(a.num_ * b.num_, a.den_ * b.den_); }

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw DivisionByZero("rational function division by zero");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

Rat RatFun::eval(const Rat& x) const {
    const Rat d = den_.eval(x);
    if (rat_is_zero(d)) throw DivisionByZero("pole at evaluation point");
    return num_.eval(x) / d;
}

std::string RatFun::to_string() const {
    if (is_polynomial()) {
        const Rat d = den_.coeff(0);
        return (num_ * (Rat(1) / d)).to_string();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace wbr
