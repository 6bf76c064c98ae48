#include "grw/catalog.hpp"

#include <memory>
#include <string>

namespace grw {

GradedRingPtr graded_zn(std::size_t n) {
  auto r = std::make_shared<const FiniteRing>(make_zn(n));
  auto g = make_trivial_grading(*r, make_cyclic(2));
  return std::make_shared<const GradedRing>(r, std::move(g), "zn(" + std::to_string(n) + ")");
}

GradedRingPtr graded_gaussian(std::size_t n) {
  auto r = std::make_shared<const FiniteRing>(make_gaussian(n));
  auto g = make_gaussian_grading(*r);
  return std::make_shared<const GradedRing>(r, std::move(g),
                                            "gaussian(" + std::to_string(n) + ")");
}

GradedRingPtr graded_matrix(std::size_t n, std::size_t carrier_cap) {
  auto r = std::make_shared<const FiniteRing>(make_matrix_ring(make_zn(n), 2, carrier_cap));
  auto g = make_checkerboard_grading(*r);
  return std::make_shared<const GradedRing>(r, std::move(g),
                                            "matrix(zn(" + std::to_string(n) + "),2)");
}

GradedRingPtr graded_gaussian_product(std::size_t a, std::size_t b) {
  auto ga = graded_gaussian(a);
  auto gb = graded_gaussian(b);
  auto r = std::make_shared<const FiniteRing>(make_product_ring(ga->ring(), gb->ring()));
  auto g = make_product_grading(*ga, *gb);
  return std::make_shared<const GradedRing>(
      r, std::move(g), "product(" + ga->label() + "," + gb->label() + ")");
}

}  // namespace grw
