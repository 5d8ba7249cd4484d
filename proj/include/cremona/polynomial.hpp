#pragma once

// Dense univariate polynomials over Q, ascending coefficient order.

#include "cremona/arith.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cremona {

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Polynomial(const Rational& c);                  // NOLINT(google-explicit-constructor)
    explicit Polynomial(std::vector<Rational> ascending);

    /// The indeterminate t.
    static Polynomial t();
    /// c * t^k.
    static Polynomial monomial(const Rational& c, std::size_t k);
    static Polynomial from_integers(std::span<const long> ascending);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const Rational& leading() const;
    /// Coefficient of t^k (zero beyond the degree).
    Rational coeff(std::size_t k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const;
    Polynomial derivative() const;
    Polynomial monic() const;
    /// Integer polynomial with coprime coefficients and positive leading
    /// coefficient, equal to this up to a nonzero rational factor.
    Polynomial primitive() const;
    bool has_integer_coefficients() const;
    /// Multiplicity of t = 0 as a root.
    std::size_t trailing_zeros() const;
    Polynomial pow(unsigned e) const;
    /// p(t) -> t^degree * p(1/t).
    Polynomial reversed() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    std::string str(char var = 't') const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder over Q; throws std::domain_error on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
/// Exact quotient; throws std::domain_error if b does not divide a.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

/// Primitive gcd (integer coefficients, positive leading); gcd(0,0) = 0.
/// Modular algorithm (CRT over 62-bit primes, certified by exact division).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// Same result by the primitive Euclidean remainder sequence; reference path.
Polynomial gcd_euclidean(const Polynomial& a, const Polynomial& b);

/// Returns (g, s) with s*a = g (mod m), g = gcd(a, m) monic.
std::pair<Polynomial, Polynomial> half_extended_gcd(const Polynomial& a, const Polynomial& m);

/// p / gcd(p, p'), made primitive.
Polynomial squarefree_part(const Polynomial& p);

} // namespace cremona
