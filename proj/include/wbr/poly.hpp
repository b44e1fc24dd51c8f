// Dense univariate polynomials over the rationals, and reduced fractions
// of them. Each polynomial carries a tag naming its indeterminate; mixing
// tags in one operation throws MixedModes.
#pragma once

#include <string>
#include <vector>

#include "wbr/rational.hpp"

namespace wbr {

enum class Indet : unsigned char { delta, q, z };

std::string indet_name(Indet v);

class Poly {
public:
    explicit Poly(Indet var = Indet::delta) : var_(var) {}
    Poly(Indet var, std::vector<Rat> coeffs);

    static Poly constant(Indet var, const Rat& c);
    /// c * x^deg
    static Poly monomial(Indet var, const Rat& c, int deg);

    Indet var() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of x^i (0 outside the stored range).
    const Rat& coeff(int i) const;
    /// Leading coefficient; 0 for the zero polynomial.
    const Rat& lc() const;

    Rat eval(const Rat& x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(const Rat& c) const;

    bool operator==(const Poly& o) const { return var_ == o.var_ && coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Quotient and remainder of polynomial division (divisor nonzero).
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    /// Exact quotient; throws InternalError if the remainder is nonzero.
    friend Poly exact_div(const Poly& a, const Poly& b);
    /// Monic gcd; gcd(0,0) = 0.
    friend Poly poly_gcd(Poly a, Poly b);

    /// Positive rational c such that (*this)/c has coprime integer
    /// coefficients. Content of 0 is 1.
    Rat content() const;
    Poly monic() const;

    /// "3*d^2-2*d+1", highest degree first; "0" for zero.
    std::string to_string() const;

private:
    void trim();
    void check_var(const Poly& o) const;

    Indet var_;
    std::vector<Rat> coeffs_; // coeffs_[i] = coefficient of x^i; no trailing zeros
};

/// Reduced fraction num/den with den monic and nonzero.
class RatFun {
public:
    explicit RatFun(Indet var = Indet::delta) : num_(var), den_(Poly::constant(var, 1)) {}
    RatFun(Poly num, Poly den);
    static RatFun from_poly(Poly p);
    static RatFun constant(Indet var, const Rat& c) { return from_poly(Poly::constant(var, c)); }

    Indet var() const { return num_.var(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    /// Constant (degree <= 0 numerator over degree-0 denominator)?
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    Rat constant_value() const;

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b); // throws DivisionByZero

    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    /// Evaluate at a rational point; throws DivisionByZero on a pole.
    Rat eval(const Rat& x) const;
    bool has_pole_at(const Rat& x) const { return rat_is_zero(den_.eval(x)); }

    std::string to_string() const;

private:
    void normalize();

    Poly num_, den_;
};

} // namespace wbr
