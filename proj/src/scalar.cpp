#include "wbr/scalar.hpp"

namespace wbr {

void Scalar::assign(RatFun f) {
    if (f.is_constant())
        v_ = f.constant_value();
    else
        v_ = std::move(f);
}

bool Scalar::is_zero() const {
    return is_rational() && rat_is_zero(std::get<Rat>(v_));
}

bool Scalar::is_one() const {
    return is_rational() && std::get<Rat>(v_) == 1;
}

const Rat& Scalar::rational() const {
    if (!is_rational()) throw InternalError("Scalar::rational on a rational function");
    return std::get<Rat>(v_);
}

const RatFun& Scalar::fun() const {
    if (is_rational()) throw InternalError("Scalar::fun on a plain rational");
    return std::get<RatFun>(v_);
}

RatFun Scalar::as_fun(Indet var) const {
    if (is_rational()) return RatFun::constant(var, std::get<Rat>(v_));
    const RatFun& f = std::get<RatFun>(v_);
    if (f.var() != var) throw MixedModes("scalar over a different indeterminate");
    return f;
}

namespace {

template <typename FRat, typename FFun>
Scalar binop(const Scalar& a, const Scalar& b, FRat frat, FFun ffun) {
    if (a.is_rational() && b.is_rational()) return Scalar(frat(a.rational(), b.rational()));
    const Indet var = a.is_rational() ? b.fun().var() : a.fun().var();
    return Scalar(ffun(a.as_fun(var), b.as_fun(var)));
}

} // namespace

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(Rat(-rational()));
    return Scalar(-fun());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    return binop(a, b, [](const Rat& x, const Rat& y) { return Rat(x + y); },
                 [](const RatFun& x, const RatFun& y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return binop(a, b, [](const Rat& x, const Rat& y) { return Rat(x - y); },
                 [](const RatFun& x, const RatFun& y) { return x - y; });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    return binop(a, b, [](const Rat& x, const Rat& y) { return Rat(x * y); },
                 [](const RatFun& x, const RatFun& y) { return x * y; });
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DivisionByZero("scalar division by zero");
    return binop(a, b, [](const Rat& x, const Rat& y) { return Rat(x / y); },
                 [](const RatFun& x, const RatFun& y) { return x / y; });
}

bool Scalar::operator<(const Scalar& o) const {
    if (is_rational() != o.is_rational()) return is_rational();
    if (is_rational()) return rational() < o.rational();
    return to_string() < o.to_string();
}

Scalar Scalar::pow(unsigned e) const {
    Scalar acc(Rat(1));
    Scalar base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

Rat Scalar::eval(const Rat& x) const {
    if (is_rational()) return rational();
    return fun().eval(x);
}

std::string Scalar::to_string() const {
    if (is_rational()) return rat_to_string(rational());
    return fun().to_string();
}

ScalarMode ScalarMode::rational_at(const Rat& delta0) {
    ScalarMode m;
    m.kind_ = Kind::RationalAt;
    m.delta0_ = delta0;
    return m;
}

ScalarMode ScalarMode::generic_delta() {
    ScalarMode m;
    m.kind_ = Kind::GenericDelta;
    return m;
}

ScalarMode ScalarMode::generic_q(unsigned N) {
    ScalarMode m;
    m.kind_ = Kind::GenericQ;
    m.n_ = N;
    return m;
}

ScalarMode ScalarMode::rational_qr(const Rat& q0, const Rat& rho0) {
    if (rat_is_zero(q0) || q0 == 1 || q0 == -1)
        throw Error("rational_qr: q0 must avoid {0,1,-1}");
    if (rat_is_zero(rho0)) throw Error("rational_qr: rho0 must be nonzero");
    ScalarMode m;
    m.kind_ = Kind::RationalQR;
    m.q0_ = q0;
    m.rho0_ = rho0;
    return m;
}

Scalar ScalarMode::delta() const {
    switch (kind_) {
        case Kind::RationalAt: return Scalar(delta0_);
        case Kind::GenericDelta: return Scalar(Poly::monomial(Indet::delta, 1, 1));
        case Kind::GenericQ: {
            // (q^N - q^-N)/(q - q^-1) = (1 + q^2 + ... + q^(2N-2)) / q^(N-1)
            if (n_ == 0) return Scalar(Rat(0));
            std::vector<Rat> num(2 * n_ - 1, Rat(0));
            for (unsigned i = 0; i < n_; ++i) num[2 * i] = 1;
            return Scalar(RatFun(Poly(Indet::q, std::move(num)),
                                 Poly::monomial(Indet::q, 1, static_cast<int>(n_) - 1)));
        }
        case Kind::RationalQR: {
            const Rat num = rho0_ - 1 / rho0_;
            const Rat den = q0_ - 1 / q0_;
            return Scalar(Rat(num / den));
        }
    }
    throw InternalError("ScalarMode::delta");
}

Scalar ScalarMode::q() const {
    switch (kind_) {
        case Kind::GenericQ: return Scalar(Poly::monomial(Indet::q, 1, 1));
        case Kind::RationalQR: return Scalar(q0_);
        default: throw MixedModes("q requested outside a quantum mode");
    }
}

Scalar ScalarMode::rho() const {
    switch (kind_) {
        case Kind::GenericQ: return Scalar(Poly::monomial(Indet::q, 1, static_cast<int>(n_)));
        case Kind::RationalQR: return Scalar(rho0_);
        default: throw MixedModes("rho requested outside a quantum mode");
    }
}

unsigned ScalarMode::big_n() const {
    if (kind_ != Kind::GenericQ) throw MixedModes("N requested outside generic-q mode");
    return n_;
}

bool ScalarMode::operator==(const ScalarMode& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case Kind::RationalAt: return delta0_ == o.delta0_;
        case Kind::GenericDelta: return true;
        case Kind::GenericQ: return n_ == o.n_;
        case Kind::RationalQR: return q0_ == o.q0_ && rho0_ == o.rho0_;
    }
    return false;
}

std::string ScalarMode::to_string() const {
    switch (kind_) {
        case Kind::RationalAt: return "delta=" + rat_to_string(delta0_);
        case Kind::GenericDelta: return "delta=generic";
        case Kind::GenericQ: return "q=generic,rho=q^" + std::to_string(n_);
        case Kind::RationalQR:
            return "q=" + rat_to_string(q0_) + ",rho=" + rat_to_string(rho0_);
    }
    throw InternalError("ScalarMode::to_string");
}

} // namespace wbr
