#pragma once

namespace schreier {

// Kernels with an OpenMP implementation keep a serial reference path; both
// must produce identical results.
enum class Execution { serial, parallel };

}  // namespace schreier
