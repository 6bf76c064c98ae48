#include "grw/parallel.hpp"

#include <omp.h>

namespace grw {

void set_num_workers(int n) {
  if (n > 0) omp_set_num_threads(n);
}

int num_workers() { return omp_get_max_threads(); }

}  // namespace grw
