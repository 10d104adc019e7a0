#pragma once

// Reference computations that share no code path with the library kernels.

#include <functional>
#include <ostream>
#include <vector>

#include "ellambda/precision.hpp"

namespace ellambda {

// Readable gtest failure output.
inline void PrintTo(const Real& x, std::ostream* os) { *os << x.to_scientific(20); }
inline void PrintTo(const Complex& z, std::ostream* os) { *os << z.to_string(20); }

}  // namespace ellambda

namespace oracle {

using ellambda::Complex;
using ellambda::Real;

// lambda = theta2^4 / theta3^4 with theta sums in the nome exp(pi i tau).
inline Complex theta_lambda(const Complex& tau, long bits) {
  const Real pi = Real::pi(bits);
  const Complex i_pi_tau(-pi * tau.im(), pi * tau.re());
  const auto q_pow = [&](const Real& e) { return exp(i_pi_tau * e); };
  const Real eps = Real::pow2(-bits - 8, bits);
  Complex t2 = Complex::zero(bits);
  Complex t3 = Complex::from_int(1, bits);
  for (long n = 0;; ++n) {
    const Real h = Real::from_int(2 * n + 1, bits) / 2;
    const Complex a = 2 * q_pow(h * h);
    const Complex b = n > 0 ? 2 * q_pow(Real::from_int(n * n, bits)) : Complex::zero(bits);
    t2 += a;
    t3 += b;
    if (n > 2 && a.abs() < eps && b.abs() < eps) break;
  }
  return pow(t2 / t3, 4);
}

// eta via the pentagonal number series q^(1/24) sum (-1)^k q^(k(3k-1)/2).
inline Complex pentagonal_eta(const Complex& tau, long bits) {
  const Real two_pi = 2 * Real::pi(bits);
  const Complex two_pi_i_tau(-two_pi * tau.im(), two_pi * tau.re());
  const Real eps = Real::pow2(-bits - 8, bits);
  Complex sum = Complex::from_int(1, bits);
  for (long k = 1;; ++k) {
    const Complex a = exp(two_pi_i_tau * Real::from_int(k * (3 * k - 1) / 2, bits));
    const Complex b = exp(two_pi_i_tau * Real::from_int(k * (3 * k + 1) / 2, bits));
    const Complex term = a + b;
    sum += (k % 2 == 0) ? term : -term;
    if (a.abs() < eps) break;
  }
  return exp(two_pi_i_tau / 24) * sum;
}

// Root of a continuous f on [lo, hi] with a sign change, by plain bisection.
inline Real bisect(const std::function<Real(const Real&)>& f, Real lo, Real hi, long bits) {
  Real flo = f(lo);
  for (long it = 0; it < bits + 64; ++it) {
    Real mid = (lo + hi) / 2;
    const Real fm = f(mid);
    if (fm.is_zero()) return mid;
    if ((fm.sign() > 0) == (flo.sign() > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

inline Real rel_err(const Complex& a, const Complex& b) { return ellambda::relative_residual(a, b); }

}  // namespace oracle
