#pragma once

// Data-parallel inner loops. Every kernel has a serial reference path that
// runs the same per-element work in order; the tests compare the two and
// bench/ times them against each other.
//
// All per-element work writes only to its own output slot, so the OpenMP
// path is race-free and its results are bit-identical to the serial path.

#include "cremona/matrix.hpp"
#include "cremona/polynomial.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace cremona {

enum class Exec { serial, parallel };

/// Number of OpenMP threads the parallel path will use (1 without OpenMP).
int parallel_threads();

/// One fraction-free Bareiss step on rows/cols > k of a polynomial matrix:
///   m(i,j) <- (m(i,j) * m(k,k) - m(i,k) * m(k,j)) / prev,  exact division.
void bareiss_step(Matrix<Polynomial>& m, std::size_t k, const Polynomial& prev, Exec exec);

/// Evaluates pred(0..count-1) and returns the flags in index order.
std::vector<char> map_indices(std::size_t count, const std::function<bool(std::size_t)>& pred, Exec exec);

} // namespace cremona
