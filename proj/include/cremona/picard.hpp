#pragma once

// N^1 and N_1 of the blow-up of P^n at k points, in the standard bases
// (H, E_1..E_k) and (h, e_1..e_k).
//
// Classes are stored in raw coordinates: dH - sum m_i E_i is the vector
// (d, -m_1, ..., -m_k). Lattice maps then act by plain matrix-vector
// products. The "(d; m_1..m_k)" presentation exists only at the text boundary.

#include "cremona/arith.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cremona {

struct BlowupSignature {
    int n = 2;  ///< dimension of the ambient projective space
    int k = 1;  ///< number of blown-up points

    /// Throws std::invalid_argument unless n >= 2 and k >= 1.
    static BlowupSignature make(int n, int k);
    std::size_t rank() const { return static_cast<std::size_t>(k) + 1; }
    friend bool operator==(const BlowupSignature&, const BlowupSignature&) = default;
};

std::string to_string(const BlowupSignature& sig);

namespace detail {
template <typename F>
std::vector<F> checked_coords(const BlowupSignature& sig, std::vector<F> coords) {
    if (coords.size() != sig.rank()) {
        throw DimensionError("class has " + std::to_string(coords.size()) + " coordinates, signature " +
                             to_string(sig) + " needs " + std::to_string(sig.rank()));
    }
    return coords;
}
} // namespace detail

/// A class in N^1(X) over the coefficient field F.
template <typename F>
class DivisorClass {
public:
    DivisorClass(BlowupSignature sig, std::vector<F> raw)
        : sig_(sig), coords_(detail::checked_coords(sig, std::move(raw))) {}

    const BlowupSignature& signature() const { return sig_; }
    const std::vector<F>& raw() const { return coords_; }
    const F& operator[](std::size_t i) const { return coords_[i]; }
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

private:
    BlowupSignature sig_;
    std::vector<F> coords_;
};

/// A class in N_1(X) over the coefficient field F.
template <typename F>
class CurveClass {
public:
    CurveClass(BlowupSignature sig, std::vector<F> raw)
        : sig_(sig), coords_(detail::checked_coords(sig, std::move(raw))) {}

    const BlowupSignature& signature() const { return sig_; }
    const std::vector<F>& raw() const { return coords_; }
    const F& operator[](std::size_t i) const { return coords_[i]; }
    friend bool operator==(const CurveClass&, const CurveClass&) = default;

private:
    BlowupSignature sig_;
    std::vector<F> coords_;
};

using QDivisor = DivisorClass<Rational>;
using QCurve = CurveClass<Rational>;

/// D^t G C with G = diag(1, -1, ..., -1). F must multiply with G
/// (Rational * Rational, FieldElement * Rational, ...).
template <typename F, typename G>
F pair(const DivisorClass<F>& d, const CurveClass<G>& c) {
    if (!(d.signature() == c.signature())) {
        throw DimensionError("pairing across signatures " + to_string(d.signature()) + " and " +
                             to_string(c.signature()));
    }
    F acc = d[0] * c[0];
    for (std::size_t i = 1; i < d.raw().size(); ++i) acc -= d[i] * c[i];
    return acc;
}

QDivisor hyperplane_class(const BlowupSignature& sig);
QDivisor exceptional_class(const BlowupSignature& sig, int i);
QCurve line_class(const BlowupSignature& sig);
QCurve exceptional_line_class(const BlowupSignature& sig, int i);

/// Builds the raw vector of dH - sum m_i E_i from the presentation (d; m).
std::vector<Rational> raw_from_presentation(const Rational& d, std::span<const Rational> m);

enum class ClassKind { divisor, curve };

/// Parses "d; m1,...,mk". The caller picks divisor or curve by kind and
/// receives the raw vector. Throws ParseError.
std::vector<Rational> parse_class_raw(std::string_view text, const BlowupSignature& sig);
QDivisor parse_divisor(std::string_view text, const BlowupSignature& sig);
QCurve parse_curve(std::string_view text, const BlowupSignature& sig);

/// Emits "d; m1,...,mk" from a raw vector.
std::string format_class(std::span<const Rational> raw);
inline std::string format_class(const QDivisor& d) { return format_class(d.raw()); }
inline std::string format_class(const QCurve& c) { return format_class(c.raw()); }

} // namespace cremona
