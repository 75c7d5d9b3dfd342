#pragma once

namespace nonrigid::numerics {

/// Gamma(a/2) for a in {1, 2, 3, 4}; OutOfRange otherwise.
double gamma_half_integer(int a);

}  // namespace nonrigid::numerics
