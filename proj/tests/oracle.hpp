#pragma once
// Test-only reference routines on dense rational coefficient vectors. They
// share no code with the library's sparse series engine.

#include <gmpxx.h>

#include <vector>

namespace oracle {

using Q = mpq_class;
using Dense = std::vector<Q>;  // c[k] is the coefficient of z^k

inline Dense mul(const Dense& a, const Dense& b, int order) {
  Dense c(order + 1);
  for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
    for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

inline Dense pow(const Dense& a, int n, int order) {
  Dense r(order + 1);
  r[0] = 1;
  for (int k = 0; k < n; ++k) r = mul(r, a, order);
  return r;
}

// 1/a by the recursion b_n = -(1/a_0) sum_{k>=1} a_k b_{n-k}.
inline Dense reciprocal(const Dense& a, int order) {
  Dense b(order + 1);
  b[0] = Q(1) / a[0];
  for (int n = 1; n <= order; ++n) {
    Q s = 0;
    for (int k = 1; k <= n && k < static_cast<int>(a.size()); ++k) s += a[k] * b[n - k];
    b[n] = -s / a[0];
  }
  return b;
}

inline Q factorial(int n) {
  Q f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// e^{c z} coefficients.
inline Dense exp_linear(const Q& c, int order) {
  Dense r(order + 1);
  Q p = 1;
  for (int k = 0; k <= order; ++k) {
    r[k] = p / factorial(k);
    p *= c;
  }
  return r;
}

// Compositional inverse by Lagrange inversion:
// [z^n] g = (1/n) [w^{n-1}] (w / s(w))^n, with s = z + ...
inline Dense lagrange_reversion(const Dense& s, int order) {
  Dense shifted(order + 1);  // s(w)/w
  for (int k = 1; k <= order + 1 && k < static_cast<int>(s.size()); ++k) shifted[k - 1] = s[k];
  const Dense ratio = reciprocal(shifted, order);
  Dense g(order + 1);
  for (int n = 1; n <= order; ++n) g[n] = pow(ratio, n, order)[n - 1] / n;
  return g;
}

// z/tanh z, x/sinh x style series from their Taylor coefficients.
inline Dense tanh_over_z(int order) {
  // tanh z / z = sinh z / (z cosh z)
  Dense sinh_z(order + 1), cosh_z(order + 1);
  for (int k = 0; k <= order; ++k) {
    if (k % 2 == 0) {
      sinh_z[k] = Q(1) / factorial(k + 1);
      cosh_z[k] = Q(1) / factorial(k);
    }
  }
  return mul(sinh_z, reciprocal(cosh_z, order), order);
}

inline Dense sinh_half_over_half(int order) {
  // sinh(z/2)/(z/2) = sum (z/2)^{2k} / (2k+1)!
  Dense r(order + 1);
  for (int k = 0; k <= order; k += 2) {
    Q half_pow = 1;
    for (int j = 0; j < k; ++j) half_pow /= 2;
    r[k] = half_pow / factorial(k + 1);
  }
  return r;
}

inline Dense todd_normal(int order) {
  // (1 - e^{-z})/z = sum_{k>=0} (-1)^k z^k / (k+1)!
  Dense r(order + 1);
  for (int k = 0; k <= order; ++k) r[k] = Q(k % 2 == 0 ? 1 : -1) / factorial(k + 1);
  return r;
}

// [z^n] phi^{-(n+1)}
inline Q genus_of_cpn(const Dense& phi, int n) { return pow(reciprocal(phi, n), n + 1, n)[n]; }

}  // namespace oracle
