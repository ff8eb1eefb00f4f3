#pragma once

namespace rsat {

// Caps the OpenMP worker count for all parallel scans; no-op when built
// without OpenMP.
void set_max_threads(int k);
int max_threads();

} // namespace rsat
