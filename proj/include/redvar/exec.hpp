#pragma once

namespace redvar {

// Selects the serial reference or the OpenMP implementation of a kernel.
enum class Exec { Serial, Parallel };

}  // namespace redvar
