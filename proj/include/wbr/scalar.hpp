// Exact coefficient arithmetic shared by every module: a scalar is either a
// rational number or a univariate rational function (in delta or in q).
//
// The representation is canonical: a rational function that reduces to a
// constant is always collapsed to the plain rational, so operator== is
// structural equality. Mixing rational functions over different
// indeterminates throws MixedModes; rationals promote to constants freely.
#pragma once

#include <string>
#include <variant>
#include <vector>

#include "wbr/poly.hpp"

namespace wbr {

class Scalar {
public:
    Scalar() : v_(Rat(0)) {}
    Scalar(const Rat& a) : v_(a) {}
    Scalar(long a) : v_(Rat(a)) {}
    Scalar(int a) : v_(Rat(a)) {}
    Scalar(RatFun f) { assign(std::move(f)); }
    Scalar(Poly p) { assign(RatFun::from_poly(std::move(p))); }

    bool is_rational() const { return std::holds_alternative<Rat>(v_); }
    bool is_zero() const;
    bool is_one() const;
    const Rat& rational() const; // throws if not rational
    const RatFun& fun() const;   // throws if rational

    /// As a rational function over the given indeterminate (promoting a
    /// plain rational to a constant).
    RatFun as_fun(Indet var) const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const { return v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    /// Arbitrary strict total order (for canonical sorting of scalar sets).
    bool operator<(const Scalar& o) const;

    Scalar pow(unsigned e) const;

    /// Substitute a rational value for the indeterminate (identity on plain
    /// rationals). Throws DivisionByZero on a pole.
    Rat eval(const Rat& x) const;

    std::string to_string() const;

private:
    void assign(RatFun f);

    std::variant<Rat, RatFun> v_;
};

/// Evaluation context: which field the computation runs over and the values
/// of the parameters delta (and q, rho for the quantized algebra).
class ScalarMode {
public:
    enum class Kind { RationalAt, GenericDelta, GenericQ, RationalQR };

    static ScalarMode rational_at(const Rat& delta0);
    static ScalarMode generic_delta();
    static ScalarMode generic_q(unsigned N);
    /// Requires q0 not in {0,1,-1} and rho0 != 0.
    static ScalarMode rational_qr(const Rat& q0, const Rat& rho0);

    Kind kind() const { return kind_; }
    bool is_quantum() const { return kind_ == Kind::GenericQ || kind_ == Kind::RationalQR; }

    Scalar delta() const;
    Scalar q() const;    // quantum modes only
    Scalar rho() const;  // quantum modes only
    unsigned big_n() const; // GenericQ only

    Scalar zero() const { return Scalar(Rat(0)); }
    Scalar one() const { return Scalar(Rat(1)); }

    bool operator==(const ScalarMode& o) const;
    bool operator!=(const ScalarMode& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    ScalarMode() = default;

    Kind kind_ = Kind::GenericDelta;
    Rat delta0_;
    unsigned n_ = 0;
    Rat q0_, rho0_;
};

} // namespace wbr
