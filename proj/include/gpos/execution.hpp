#pragma once

namespace gpos {

/// Selects between the serial reference kernel and its OpenMP counterpart.
/// Both produce bit-identical results.
enum class Execution { serial, parallel };

}  // namespace gpos
