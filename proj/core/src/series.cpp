#include "nonrigid/error.hpp"
#include "nonrigid/foliation.hpp"

namespace nonrigid::foliation {

std::vector<BigInt> formal_series_coefficients(int n_max) {
  if (n_max < 0) throw Error(ErrorKind::InvalidArgument, "n_max must be non-negative");
  std::vector<BigInt> a(static_cast<std::size_t>(n_max) + 1, BigInt{0});
  for (int n = 2; n <= n_max; ++n) {
    BigInt next = BigInt{n - 5} * a[static_cast<std::size_t>(n - 2)];
    if (n == 6) next += 1;
    a[static_cast<std::size_t>(n)] = std::move(next);
  }
  return a;
}

}  // namespace nonrigid::foliation
