#pragma once

// Orbits of classes under a lattice map, exact negativity certificates
// against the dominant eigendivisor, and the floating-point power iteration.

#include "cremona/picard.hpp"
#include "cremona/spectra.hpp"
#include "cremona/weyl.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cremona {

using FieldDivisor = DivisorClass<FieldElement>;

/// The dominant eigendivisor D_lambda of a map, H-coordinate 1.
struct Eigendivisor {
    RealAlgebraic lambda;
    FieldPtr field;
    FieldDivisor divisor;
    DominanceCertificate certificate;
};

Eigendivisor eigendivisor(const LatticeMap& map, Exec exec = Exec::parallel);

struct OrbitRecord {
    std::size_t step = 0;
    QCurve curve_class;
    int pairing_sign = 0;
    FieldElement pairing_value;
};

/// Curve classes (curve matrix)^n seed for n = 0..steps; no pairings.
std::vector<QCurve> curve_iterates(const LatticeMap& map, const QCurve& seed, std::size_t steps);

/// Records for n = 0..steps, paired against d (or against the map's D_lambda).
std::vector<OrbitRecord> curve_orbit(const LatticeMap& map, const QCurve& seed, std::size_t steps,
                                     const FieldDivisor& d);
std::vector<OrbitRecord> curve_orbit(const LatticeMap& map, const QCurve& seed, std::size_t steps);

/// (div matrix)^n seed for n = 0..steps.
std::vector<QDivisor> divisor_orbit(const LatticeMap& map, const QDivisor& seed, std::size_t steps);

class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct NegativityItem {
    std::size_t step = 0;
    FieldElement value;       ///< D . C_n
    FieldElement scaled;      ///< lambda^n (D . C_n), equal to D . C_0
    int sign = 0;
};

struct NegativityCertificate {
    FieldElement base_value;  ///< D . C_0
    int base_sign = 0;
    std::vector<NegativityItem> items;
};

/// Checks lambda^n (D . C_n) = D . C_0 exactly in Q(lambda) for every record,
/// and sign(D . C_0) = -1 with lambda > 0. Throws CertificateError on any
/// failure, including a record whose stored sign or value disagrees.
NegativityCertificate negativity_certificate(const FieldDivisor& d, const std::vector<OrbitRecord>& orbit,
                                             const RealAlgebraic& lambda);

class DegenerateStartError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PowerIteration {
    std::vector<std::vector<double>> iterates;  ///< unit vectors T^n v / |T^n v|, n = 0..iterations
    std::vector<double> sines;                  ///< sine of the angle to the eigendirection, per iterate
    std::vector<double> eigendirection;         ///< unit vector along the exact eigenvector
    double final_sine = 1.0;
};

/// Floating-point power iteration on the divisor matrix. Throws
/// DegenerateStartError if start has no lambda-component (exactly zero, or
/// relative size below tolerance).
PowerIteration power_iteration(const LatticeMap& map, const QDivisor& start, std::size_t iterations,
                               double tolerance = 1e-12);

} // namespace cremona
