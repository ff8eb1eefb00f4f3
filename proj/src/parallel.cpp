#include "rsat/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rsat {

void set_max_threads(int k)
{
#ifdef _OPENMP
    if (k > 0)
        omp_set_num_threads(k);
#else
    (void)k;
#endif
}

int max_threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace rsat
