#pragma once

#include "gaussdiss/gaussian_core.hpp"

namespace gaussdiss {

/// Physicists' Hermite polynomial H_j(z) by the three-term recurrence.
Complex hermite_complex(int j, Complex z);

/// Laguerre polynomial L_l(x) by the three-term recurrence.
double laguerre(int l, double x);

}  // namespace gaussdiss
