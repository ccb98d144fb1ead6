#pragma once

#include "ezheeg/numeric.hpp"

namespace ezheeg {

// Universal constant c with L_p'(0, chi_K omega) / L(0, chi_K) = c * log(varpi)/h
// under the canonical embedding labeling. Determined empirically across the
// split pairs (5,-11), (5,-19), (7,-19), (7,-31), (11,-7) at two precisions
// (see test_kubota_leopoldt): the ratio is -1 at every pair, to full working
// precision. Frozen here; never adjusted per-run.
inline Rat fg_frozen_normalization() { return Rat(-1); }

} // namespace ezheeg
