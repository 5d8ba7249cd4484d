#pragma once

// Lattice maps induced by Cremona transformations and point relabelings.
//
// A LatticeMap carries two matrices: one on divisor raw coordinates and one
// on curve raw coordinates. They are adjoint for the pairing form
// G = diag(1,-1,...,-1): div^t * G * curve = G.
//
// Permutations use one-line notation with the convention
// (Pi x)_i = x_{pi(i)}: the point that ends up in slot i is the one that
// was in slot pi(i). This is the convention under which iterating the
// spatial sigma-map on h - e_1 - e_2 produces the known orbit table.

#include "cremona/matrix.hpp"
#include "cremona/picard.hpp"

#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cremona {

struct Perm {
    std::vector<int> images;  ///< one-line notation, 1-based
    friend bool operator==(const Perm&, const Perm&) = default;
};

struct CremonaGen {
    std::vector<int> centers;  ///< n+1 distinct 1-based indices
    friend bool operator==(const CremonaGen&, const CremonaGen&) = default;
};

using WeylGenerator = std::variant<Perm, CremonaGen>;
using Word = std::vector<WeylGenerator>;

class LatticeMap {
public:
    const BlowupSignature& signature() const { return sig_; }
    const QMatrix& div_matrix() const { return div_; }
    const QMatrix& curve_matrix() const { return curve_; }
    /// Generators in application order (first element applied first).
    const Word& word() const { return word_; }

    QDivisor apply(const QDivisor& d) const;
    QCurve apply(const QCurve& c) const;

    /// div^t G curve == G, exactly.
    bool is_adjoint() const;

    /// Builds a map from raw matrices without any invariant checks. Used for
    /// fault-injection fixtures; normal code goes through the builders below.
    static LatticeMap unchecked(BlowupSignature sig, QMatrix div, QMatrix curve, Word word);

private:
    LatticeMap(BlowupSignature sig, QMatrix div, QMatrix curve, Word word)
        : sig_(sig), div_(std::move(div)), curve_(std::move(curve)), word_(std::move(word)) {}

    friend LatticeMap cremona_matrices(const BlowupSignature&, std::span<const int>);
    friend LatticeMap perm_matrix(const BlowupSignature&, std::span<const int>);
    friend LatticeMap compose(std::span<const LatticeMap>);
    friend LatticeMap identity_map(const BlowupSignature&);

    BlowupSignature sig_;
    QMatrix div_;
    QMatrix curve_;
    Word word_;
};

/// G-adjoint of an invertible divisor matrix: G (A^{-1})^t G.
QMatrix adjoint_curve_matrix(const QMatrix& div);

/// Cremona transformation centered at the given points (1-based, n+1 distinct).
/// Throws std::invalid_argument on repeated or out-of-range centers.
LatticeMap cremona_matrices(const BlowupSignature& sig, std::span<const int> centers);

/// Block map (1) + Pi_pi. Throws std::invalid_argument unless pi is a bijection of 1..k.
LatticeMap perm_matrix(const BlowupSignature& sig, std::span<const int> pi);

LatticeMap identity_map(const BlowupSignature& sig);

/// Composition in application order: compose({A, B}) applies A first, so its
/// matrices are B*A. Throws DimensionError on mixed signatures.
LatticeMap compose(std::span<const LatticeMap> maps);

LatticeMap map_of(const BlowupSignature& sig, const WeylGenerator& gen);
LatticeMap map_of(const BlowupSignature& sig, const Word& word);

enum class Variant { planar10, spatial9 };

BlowupSignature signature_of(Variant v);
/// sigma in one-line notation: (8,9,10,1,...,7) for planar10, (6,7,8,9,1,...,5) for spatial9.
std::vector<int> sigma_of(Variant v);
/// Cremona block on the first n+1 points composed after the sigma relabeling.
LatticeMap m_sigma(Variant v);
std::string to_string(Variant v);
Variant parse_variant(std::string_view text);

/// Whether the Coxeter group T_{p,q,r} is finite: 1/p + 1/q + 1/r > 1.
bool is_coxeter_finite(int p, int q, int r);

/// Parses "perm(6,7,8,9,1,2,3,4,5); cr(1,2,3,4)" (applied left to right).
Word parse_word(std::string_view text, const BlowupSignature& sig);
std::string format_word(const Word& word);

/// A word of the given length with uniformly chosen generators: each letter is
/// a Cremona on random distinct centers or a random permutation, equally often.
Word random_word(const BlowupSignature& sig, std::mt19937_64& gen, std::size_t length);

} // namespace cremona
