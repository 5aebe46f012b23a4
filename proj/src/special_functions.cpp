#include "gaussdiss/special_functions.hpp"

#include "gaussdiss/errors.hpp"

namespace gaussdiss {

Complex hermite_complex(int j, Complex z) {
  if (j < 0) throw DomainError("hermite_complex: order must be >= 0");
  Complex prev{1.0, 0.0};
  if (j == 0) return prev;
  Complex cur = 2.0 * z;
  for (int i = 1; i < j; ++i) {
    const Complex next = 2.0 * z * cur - 2.0 * static_cast<double>(i) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre(int l, double x) {
  if (l < 0) throw DomainError("laguerre: order must be >= 0");
  double prev = 1.0;
  if (l == 0) return prev;
  double cur = 1.0 - x;
  for (int i = 1; i < l; ++i) {
    const double next = ((2.0 * i + 1.0 - x) * cur - i * prev) / (i + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace gaussdiss
