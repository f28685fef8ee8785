#include "bisect/parallel.hpp"

#include <omp.h>

namespace bisect {

int worker_count() { return omp_get_max_threads(); }

}  // namespace bisect
