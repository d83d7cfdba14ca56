#pragma once

// Execution policy for the kernels that come in a serial reference version
// and an OpenMP version. Both must produce identical results.

namespace glj {

enum class Exec { serial, parallel };

// Thread count used by Exec::parallel kernels. Defaults to the value of
// GLJ_NUM_THREADS when set, otherwise the OpenMP default.
int num_threads();
void set_num_threads(int n);

}  // namespace glj
