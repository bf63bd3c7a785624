#pragma once

#include <utility>
#include <vector>

namespace pgate::detail {

// Fraction-free Gaussian elimination over an integral domain. Ops supplies
// one(), zero(), is_zero(x), mul(x, y), sub(x, y), neg(x) and
// exact_div(x, y); every division performed by the algorithm is exact.
template <class T, class Ops>
T bareiss_determinant(std::vector<std::vector<T>> a, const Ops& ops) {
  const std::size_t n = a.size();
  if (n == 0) return ops.one();
  bool negate = false;
  T prev = ops.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ops.is_zero(a[k][k])) {
      std::size_t r = k + 1;
      while (r < n && ops.is_zero(a[r][k])) ++r;
      if (r == n) return ops.zero();
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = ops.sub(ops.mul(a[i][j], a[k][k]), ops.mul(a[i][k], a[k][j]));
        a[i][j] = ops.exact_div(v, prev);
      }
    }
    prev = a[k][k];
  }
  T det = std::move(a[n - 1][n - 1]);
  return negate ? ops.neg(det) : det;
}

}  // namespace pgate::detail
