#include "dimkac/linalg.hpp"

namespace dimkac {

Poly bareiss_determinant(Matrix<Poly> a) {
  const std::size_t n = a.size();
  if (n == 0) return Poly(1);
  Poly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k].is_zero()) ++piv;
      if (piv == n) return Poly(0);
      std::swap(a[k], a[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        if (prev.is_one()) {
          a[i][j] = std::move(v);
        } else {
          auto q = v.divide_exact(prev);
          if (!q) throw std::logic_error("bareiss: inexact division");
          a[i][j] = std::move(*q);
        }
      }
      a[i][k] = Poly(0);
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

}  // namespace dimkac
