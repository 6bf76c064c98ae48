#pragma once

// Graded rings used throughout the examples and the default corpus.

#include <cstddef>

#include "grw/grading.hpp"

namespace grw {

// Z_n over Z_2 with the trivial grading.
GradedRingPtr graded_zn(std::size_t n);
// Z_n[i] with the real/imaginary Z_2-grading.
GradedRingPtr graded_gaussian(std::size_t n);
// M_2(Z_n) with the Z_4 checkerboard grading.
GradedRingPtr graded_matrix(std::size_t n, std::size_t carrier_cap = kDefaultCarrierCap);
// Z_a[i] x Z_b[i] with the componentwise grading.
GradedRingPtr graded_gaussian_product(std::size_t a, std::size_t b);

}  // namespace grw
