#pragma once

// Exact point configurations in P^n, parameterized rational curves, and the
// standard Cremona transformation acting on both.
//
// Indices of points and coordinates in the public API are 1-based, matching
// E_1..E_k and X_1..X_{n+1}.

#include "cremona/kernels.hpp"
#include "cremona/matrix.hpp"
#include "cremona/picard.hpp"
#include "cremona/polynomial.hpp"
#include "cremona/weyl.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cremona {

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Frame points not in general position.
class GeneralPositionError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

/// A point maps into the indeterminacy locus (two or more frame coordinates vanish).
class IndeterminacyError : public GeometryError {
public:
    IndeterminacyError(std::size_t point, std::pair<int, int> coords, const std::string& what)
        : GeometryError(what), point_(point), coords_(coords) {}
    std::size_t point() const { return point_; }  ///< 1-based, 0 for a bare point
    std::pair<int, int> coords() const { return coords_; }

private:
    std::size_t point_;
    std::pair<int, int> coords_;
};

/// Two points of a configuration coincide.
class DistinctnessError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

/// A curve lies in a coordinate hyperplane of the frame.
class ContainmentError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

/// A curve is one of the flopped lines {X_a = X_b = 0}.
class FlopLineError : public GeometryError {
public:
    FlopLineError(std::pair<int, int> coords, const std::string& what) : GeometryError(what), coords_(coords) {}
    std::pair<int, int> coords() const { return coords_; }

private:
    std::pair<int, int> coords_;
};

/// The orbit class has negative entries, so the interpolation test does not apply.
class NotApplicableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A point of P^n as coprime integers with positive leading nonzero entry.
class ProjPoint {
public:
    explicit ProjPoint(std::span<const Rational> coords);
    explicit ProjPoint(std::span<const Integer> coords);
    static ProjPoint of(std::initializer_list<long> coords);

    std::size_t size() const { return coords_.size(); }
    int dim() const { return static_cast<int>(coords_.size()) - 1; }
    const std::vector<Integer>& coords() const { return coords_; }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }
    std::vector<Rational> rationals() const { return {coords_.begin(), coords_.end()}; }
    std::size_t bits() const;

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

private:
    void normalize();
    std::vector<Integer> coords_;
};

std::string to_string(const ProjPoint& p);

/// k points of P^n, pairwise distinct.
class Configuration {
public:
    Configuration(BlowupSignature sig, std::vector<ProjPoint> points);

    const BlowupSignature& signature() const { return sig_; }
    const std::vector<ProjPoint>& points() const { return points_; }
    const ProjPoint& point(std::size_t i) const;  ///< 1-based
    std::size_t bits() const;

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    BlowupSignature sig_;
    std::vector<ProjPoint> points_;
};

/// Coordinatewise inversion, cleared of denominators.
ProjPoint standard_cremona_point(const ProjPoint& p);

/// g.p for a square matrix g.
ProjPoint apply(const QMatrix& g, const ProjPoint& p);

/// Integral g with g(p_{c_i}) = e_i and g(p_ref) = [1:...:1], primitive.
QMatrix normalize_frame(const Configuration& config, std::span<const int> centers, int ref);

/// Replaces every non-center point p by g^{-1} Cr(g p); centers stay put.
Configuration cremona_step(const Configuration& config, std::span<const int> centers, int ref);

/// Relabels q_i = p_{sigma(i)}.
Configuration relabel(const Configuration& config, std::span<const int> sigma);

/// Relabel by the variant's sigma, then Cremona on 1..n+1 with reference n+2.
Configuration rho(const Configuration& config, Variant v);
Configuration rho_planar(const Configuration& config);
Configuration rho_spatial(const Configuration& config);
Configuration rho_inverse(const Configuration& config, Variant v);

struct DegeneracyReport {
    std::vector<std::array<int, 2>> coincident;
    std::vector<std::array<int, 3>> collinear;
    std::vector<std::array<int, 4>> coplanar;  ///< only for n = 3
    bool clean() const { return coincident.empty() && collinear.empty() && coplanar.empty(); }
};

DegeneracyReport degeneracy_report(int n, std::span<const ProjPoint> points, Exec exec = Exec::parallel);
DegeneracyReport degeneracy_report(const Configuration& config, Exec exec = Exec::parallel);

/// Determinant of the 6x6 matrix of conic monomials at six points of P^2.
Rational conic_determinant(std::span<const ProjPoint> six);

/// [s:t] -> (f_1(s,t) : ... : f_{n+1}(s,t)) stored dehomogenized at s = 1.
/// The homogeneous degree is the largest univariate degree; the tuple is kept
/// free of common factors (including s) and of common content.
class RationalCurve {
public:
    explicit RationalCurve(std::vector<Polynomial> polys);
    /// s a + t b.
    static RationalCurve line_through(const ProjPoint& a, const ProjPoint& b);

    int degree() const { return degree_; }
    std::size_t size() const { return polys_.size(); }
    const std::vector<Polynomial>& polys() const { return polys_; }
    const Polynomial& operator[](std::size_t i) const { return polys_[i]; }
    std::size_t bits() const;

    friend bool operator==(const RationalCurve&, const RationalCurve&) = default;

private:
    std::vector<Polynomial> polys_;
    int degree_ = 0;
};

std::string to_string(const RationalCurve& c);

/// g.f coordinatewise (no normalization beyond the constructor's).
RationalCurve apply(const QMatrix& g, const RationalCurve& c);

/// Number of parameters (with multiplicity) mapping to p.
int multiplicity_at(const RationalCurve& c, const ProjPoint& p);

/// (degree; multiplicities at the configuration points) in raw coordinates.
QCurve curve_class_of(const RationalCurve& c, const Configuration& config);

/// Coordinate pairs (a, b), 1-based, whose flopped line {X_a = X_b = 0} meets
/// the strict transform of c in the blow-up of the coordinate points. A pair
/// is reported iff the homogeneous gcd of f_a, f_b has more roots than the
/// curve's multiplicities at the coordinate points on that line account for.
std::vector<std::pair<int, int>> meets_indeterminacy(const RationalCurve& c);

/// Strict transform under g^{-1} Cr g, in original coordinates.
RationalCurve curve_strict_transform(const RationalCurve& c, const QMatrix& g);

struct TrackStep {
    std::size_t step = 0;
    QCurve expected;
    std::optional<QCurve> realized;
    std::vector<std::pair<int, int>> meets;
    std::size_t config_bits = 0;
    std::size_t curve_bits = 0;
    int curve_degree = 0;
    std::string error;
    bool ok = false;
};

struct TrackReport {
    std::size_t requested = 0;
    std::vector<TrackStep> steps;
    bool ok() const;
};

/// Follows the line through p_1, p_2 under the variant's sigma-pattern steps,
/// checking indeterminacy avoidance and class agreement with curve_iterates.
TrackReport track_line_orbit(const Configuration& config, std::size_t steps);

/// Kernel dimension of degree-d forms on P^2 with all partials of order < m_i
/// vanishing at p_i.
std::size_t interpolation_rank(const Configuration& config, const QDivisor& cls);

/// interpolation_rank of the n-th orbit class of h - e_1 - e_2 - e_3 is >= 1.
bool v_n_membership(const Configuration& config, std::size_t n);

/// Seeded configuration with integer coordinates in [-bound, bound], drawn from
/// std::mt19937_64 as raw % (2 bound + 1) - bound. Zero vectors and repeats
/// are skipped.
Configuration random_configuration(const BlowupSignature& sig, std::uint64_t seed, unsigned bound = 10);

} // namespace cremona
