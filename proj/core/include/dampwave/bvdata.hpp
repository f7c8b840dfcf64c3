#pragma once

#include <cstdint>

#include "dampwave/problem.hpp"

namespace dampwave {

/// Seeded piecewise-constant data with `pieces` pieces, f-+ in [m, M] and int rho0 = 0.
/// The zero-mean shift is applied equally to f- and f+; values are then scaled toward 0
/// when the shift leaves [m, M]. Requires pieces >= 1 and m <= 0 <= M, m < M.
InitialData generate_bv_data(std::uint64_t seed, int pieces, double m, double M);

}  // namespace dampwave
