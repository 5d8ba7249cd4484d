#include "cremona/report.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace cremona {

namespace {

constexpr std::array<Claim, 23> registry{{
    {"adjoint.cremona.planar10", "M^t I_{1,3} \\check{M} = I_{1,3}", "planar Cremona block is adjoint to its curve action"},
    {"adjoint.cremona.spatial9", "M^t I_{1,4} \\check{M} = I_{1,4}", "spatial Cremona block is adjoint to its curve action"},
    {"adjoint.msigma", "M_\\sigma^t G \\check{M}_\\sigma = G", "both sigma-pattern maps preserve the pairing"},
    {"adjoint.random_words", "W^t G \\check{W} = G", "random composed words preserve the pairing"},
    {"charpoly.planar10", "\\chi_{M_\\sigma}(t) = (t-1) t^5 q(t+t^{-1}), q = t^5-t^4-6t^3+5t^2+8t-5",
     "planar characteristic polynomial"},
    {"charpoly.spatial9", "\\chi_{M_\\sigma}(t) = (t+1)(t-1) t^4 q(t+t^{-1}), q = t^4-3t^3+4t-1",
     "spatial characteristic polynomial"},
    {"coxeter.finite", "T_{p,q,r} finite <=> 1/p + 1/q + 1/r > 1", "finiteness of T_{2,3,5} versus T_{2,3,6}, T_{2,3,7}, T_{2,4,5}"},
    {"eigenvector.planar10", "C_\\lambda = h - 0.451 e_1 - 0.440 e_2 - 0.408 e_3 - 0.315 e_4 - 0.307 e_5 - 0.285 e_6 - 0.220 e_7 - 0.215 e_8 - 0.199 e_9 - 0.154 e_{10}",
     "planar eigenvector digits"},
    {"eigenvector.spatial9", "D_\\lambda = H - 0.640 E_1 - 0.634 E_2 - 0.615 E_3 - 0.554 E_4 - 0.355 E_5 - 0.352 E_6 - 0.341 E_7 - 0.307 E_8 - 0.197 E_9",
     "spatial eigenvector digits"},
    {"geometry.track", "[\\bar\\ell_n] = \\check{M}_\\sigma^n [\\ell_{12}], \\bar\\ell_n \\cap \\mathrm{Ind} = \\emptyset",
     "tracked line realizes the orbit classes and avoids the indeterminacy locus"},
    {"inequality.planar10", "r_1 + r_2 + r_3 > 1", "planar coefficient inequality"},
    {"inequality.spatial9", "r_1 + r_2 > 1", "spatial coefficient inequality"},
    {"lambda.planar10", "\\lambda \\approx 1.431, q(\\mu) = 0 has all other roots in [-2,2]", "planar dominant eigenvalue"},
    {"lambda.spatial9", "\\lambda \\approx 1.800, q(\\mu) = 0 has all other roots in [-2,2]", "spatial dominant eigenvalue"},
    {"negativity.planar10", "\\lambda^n (C_\\lambda \\cdot M_\\sigma^n C_0) = C_\\lambda \\cdot C_0 < 0",
     "planar negativity certificates"},
    {"negativity.spatial9", "\\lambda^n (D_\\lambda \\cdot C_n) = D_\\lambda \\cdot C_0 = 1 - (r_1 + r_2) < 0",
     "spatial negativity certificates"},
    {"nodal.generic", "\\mathbf p \\notin V_0, \\rho(\\mathbf p) \\notin V_1", "generic configuration is not nodal"},
    {"nodal.v0", "p_1, p_2, p_3 collinear => \\mathbf p \\in V_0", "constructed configuration lies in V_0"},
    {"nodal.v1", "\\mathbf p \\in V_0 => \\rho(\\mathbf p) \\in V_1, first six points on a conic", "image configuration lies in V_1"},
    {"orbit.row6", "C_6 = \\check{M}_\\sigma C_5", "row 6 by one further exact matrix application"},
    {"orbit.table", "C_n = \\check{M}_\\sigma^n (h - e_1 - e_2), n = 0..5", "orbit table rows"},
    {"pairing.random", "(M D) \\cdot (\\check{M} C) = D \\cdot C", "pairing invariance on random class pairs"},
    {"power_iteration", "T^n v / |T^n v| \\to D_\\lambda / |D_\\lambda|", "floating-point convergence to the eigendirection"},
}};

} // namespace

std::span<const Claim> claims() { return registry; }

const Claim& claim(std::string_view id) {
    const auto it = std::find_if(registry.begin(), registry.end(), [&](const Claim& c) { return c.id == id; });
    if (it == registry.end()) throw std::out_of_range("unknown claim id '" + std::string(id) + "'");
    return *it;
}

} // namespace cremona
