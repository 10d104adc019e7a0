#pragma once

#include <array>
#include <vector>

#include "ellambda/precision.hpp"

namespace ellambda {

/// The six values of lambda over one j:
///   l1, (l1-1)/l1, 1/(1-l1), 1-l1, 1/l1, l1/(l1-1).
struct LambdaOrbit {
  std::array<Complex, 6> values;
};

/// DegenerateLambda when lam is within 2^-(P/2) of 0 or 1.
LambdaOrbit six_lambda_values(const Complex& lam, const PrecisionContext& ctx);

struct MultisetMatch {
  bool matched = false;
  /// Largest |a - b| / max(1, |b|) over the chosen pairs.
  Real max_residual;
};

/// Greedy nearest pairing of two equally sized multisets. Each element of
/// `a` takes the closest unused element of `b`.
MultisetMatch match_multiset(const std::vector<Complex>& a, const std::vector<Complex>& b, const Real& rel_tol);

/// 4k / (1 + k)^2, the squared modulus at tau/2. PoleAtMinusOne at k = -1.
Complex landen_halved_modulus_sq(const Complex& k);

/// alpha_d = (sqrt((1-l)/l) - sqrt(l/(1-l))) / 4 with l = lambda(sqrt(-d)).
/// ConsistencyFailure unless l is real and lies in (0, 1).
Real alpha_from_d(const Real& d, const PrecisionContext& ctx);

/// lambda((sqrt(-d) - 1)/(sqrt(-d) + 1)) from the q-product, checked against
/// 1/2 + i alpha_d. ConsistencyFailure if they differ by more than
/// 2^-(P-2G) relative.
Complex lambda_tilde_numeric(const Real& d, const PrecisionContext& ctx);

/// -64 (4a^2 - 3)^3 / (4a^2 + 1)^2
Real j_from_alpha(const Real& alpha);

}  // namespace ellambda
