#pragma once

namespace bisect {

/// Selects the OpenMP kernel or the plain serial loop. Both produce identical
/// results; the serial path is the reference used in tests.
enum class Execution { serial, parallel };

int worker_count();

}  // namespace bisect
