#pragma once

// Exact spectral data of lattice maps.
//
// Everything here is certified: characteristic polynomials are computed by
// fraction-free elimination over Q[t], real roots are isolated with Sturm
// sequences, and signs of elements of Q(lambda) are decided either by an
// exact gcd test (zero) or by interval evaluation on an isolating interval
// whose result excludes zero. Nothing is decided by "looks small".

#include "cremona/kernels.hpp"
#include "cremona/matrix.hpp"
#include "cremona/polynomial.hpp"
#include "cremona/weyl.hpp"

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cremona {

/// The charpoly does not have the (t +- 1)^a t^m t^d q(t + 1/t) shape with
/// a unique dominant real eigenvalue.
class SpectralStructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The eigenspace has dimension != 1 (0 means lambda is not an eigenvalue).
class EigenspaceError : public std::runtime_error {
public:
    EigenspaceError(std::size_t dimension, const std::string& what)
        : std::runtime_error(what), dimension_(dimension) {}
    std::size_t dimension() const { return dimension_; }

private:
    std::size_t dimension_;
};

/// Interval refinement hit the width cap without deciding a sign.
class SignUndecidedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// det(tI - A), monic. Fraction-free Bareiss elimination over Q[t].
Polynomial charpoly(const QMatrix& a, Exec exec = Exec::parallel);

/// t^{deg q} q(t + 1/t).
Polynomial reciprocal_lift(const Polynomial& q);

/// Inverse of reciprocal_lift: q with reciprocal_lift(q) == p, if one exists.
std::optional<Polynomial> reciprocal_unlift(const Polynomial& p);

/// The m-th cyclotomic polynomial.
Polynomial cyclotomic(unsigned m);

/// Divides out every cyclotomic factor of a squarefree polynomial.
Polynomial strip_cyclotomic_factors(Polynomial p);

/// Square-free factorization: result[i] is the product of the irreducible
/// factors of multiplicity i+1 (primitive; constants for absent multiplicities).
std::vector<Polynomial> squarefree_factorization(const Polynomial& p);

class SturmSequence {
public:
    explicit SturmSequence(const Polynomial& p);  ///< p is made squarefree first

    /// Distinct real roots in (a, b].
    std::size_t count_half_open(const Rational& a, const Rational& b) const;
    /// Distinct real roots in [a, b].
    std::size_t count_closed(const Rational& a, const Rational& b) const;
    /// Distinct real roots in (a, +inf).
    std::size_t count_above(const Rational& a) const;
    /// Distinct real roots in (-inf, a).
    std::size_t count_below(const Rational& a) const;
    std::size_t count_all() const;

    const Polynomial& base() const { return seq_.front(); }

private:
    int variations(const Rational& x) const;
    int variations_at_infinity(bool positive) const;
    std::vector<Polynomial> seq_;
};

/// A real root of an integer polynomial, identified by an isolating interval.
class RealAlgebraic {
public:
    /// Validates: minpoly squarefree and nonzero; exactly one root in [lo, hi];
    /// either lo == hi is the root, or the endpoints are non-roots.
    RealAlgebraic(Polynomial minpoly, Rational lo, Rational hi);

    const Polynomial& minpoly() const { return minpoly_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    bool is_rational() const { return lo_ == hi_; }
    Rational midpoint() const { return (lo_ + hi_) / 2; }
    double approx() const { return to_double(midpoint()); }

private:
    struct Trusted {};
    RealAlgebraic(Trusted, Polynomial minpoly, Rational lo, Rational hi)
        : minpoly_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {}
    friend std::vector<RealAlgebraic> isolate_real_roots(const Polynomial& p);
    friend RealAlgebraic refine(const RealAlgebraic& a, const Rational& width);

    Polynomial minpoly_;
    Rational lo_, hi_;
};

/// Real roots of p (squarefree part taken internally), ascending.
/// Throws std::domain_error for the zero polynomial.
std::vector<RealAlgebraic> isolate_real_roots(const Polynomial& p);

/// Same root, interval of width <= width (bisection with exact signs).
RealAlgebraic refine(const RealAlgebraic& a, const Rational& width);

/// Sign of (a - r), exact.
int compare(const RealAlgebraic& a, const Rational& r);

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Q(lambda) presented as Q[t]/(modulus) together with the real embedding
/// fixed by the generator's isolating interval. Arithmetic requires the
/// modulus to be irreducible; make() removes cyclotomic factors that do not
/// vanish at the generator, which is enough for Salem-type generators.
class NumberField {
public:
    static FieldPtr make(const RealAlgebraic& generator);

    const Polynomial& modulus() const { return modulus_; }
    const RealAlgebraic& generator() const { return generator_; }
    int degree() const { return modulus_.degree(); }

private:
    explicit NumberField(RealAlgebraic gen) : modulus_(gen.minpoly()), generator_(std::move(gen)) {}
    Polynomial modulus_;
    RealAlgebraic generator_;
};

class FieldElement {
public:
    FieldElement(FieldPtr field, const Polynomial& rep);
    FieldElement(FieldPtr field, const Rational& c) : FieldElement(std::move(field), Polynomial(c)) {}
    static FieldElement generator(const FieldPtr& field) { return {field, Polynomial::t()}; }

    const FieldPtr& field() const { return field_; }
    /// Reduced representative, degree < field degree.
    const Polynomial& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }

    FieldElement operator-() const { return {field_, -rep_}; }
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);
    FieldElement& operator*=(const Rational& c);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend FieldElement operator*(FieldElement a, const Rational& c) { return a *= c; }
    friend FieldElement operator*(const Rational& c, FieldElement a) { return a *= c; }
    friend FieldElement operator+(FieldElement a, const Rational& c) { return a += FieldElement(a.field_, c); }
    friend FieldElement operator-(FieldElement a, const Rational& c) { return a -= FieldElement(a.field_, c); }

    FieldElement inverse() const;
    FieldElement pow(unsigned e) const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    void check_same_field(const FieldElement& o) const;
    FieldPtr field_;
    Polynomial rep_;
};

/// Exact sign of x at the field's embedding.
int sign_of(const FieldElement& x);
/// Exact sign of x's representative evaluated at lambda. lambda's minpoly
/// must be a multiple of the field modulus.
int sign_of(const FieldElement& x, const RealAlgebraic& lambda);

/// Floating approximations of field elements, evaluated at the midpoint of
/// the generator refined to the given width.
std::vector<double> approximate(std::span<const FieldElement> xs, const Rational& width);

/// Exact enclosure [lo, hi] of x by interval evaluation on the generator's
/// isolating interval refined to the given width.
std::pair<Rational, Rational> enclose(const FieldElement& x, const Rational& width);

struct DominanceCertificate {
    Polynomial charpoly;
    std::size_t t_power = 0;       ///< multiplicity of the root 0
    std::size_t minus_one = 0;     ///< multiplicity of (t + 1) outside the lift
    std::size_t plus_one = 0;      ///< multiplicity of (t - 1) outside the lift
    Polynomial q;                  ///< charpoly = (t-1)^a (t+1)^b t^m reciprocal_lift(q)
    RealAlgebraic mu;              ///< the unique root of q above 2, mu = lambda + 1/lambda
    std::size_t q_roots_in_band = 0;  ///< roots of q in [-2, 2], with multiplicity
    Polynomial minpoly;            ///< minimal polynomial of lambda (cyclotomic factors removed)
};

struct DominantEigenvalue {
    RealAlgebraic lambda;
    DominanceCertificate certificate;
};

/// Certified dominant eigenvalue of the divisor matrix. Throws
/// SpectralStructureError if the shape check or the dominance check fails.
DominantEigenvalue dominant_eigenvalue(const LatticeMap& map, Exec exec = Exec::parallel);

/// Kernel vector of (a - lambda I) over Q(lambda), normalized so that its
/// first nonzero coordinate is 1. Throws EigenspaceError unless the kernel
/// is one-dimensional.
std::vector<FieldElement> kernel_vector(const QMatrix& a, const FieldPtr& field);

/// lambda-eigenvector of the divisor matrix with H-coordinate 1.
std::vector<FieldElement> eigenvector(const LatticeMap& map, const RealAlgebraic& lambda);

/// Exact check of a * v == lambda * v in Q(lambda).
bool is_eigenvector(const QMatrix& a, std::span<const FieldElement> v);

} // namespace cremona
