#pragma once

#include "lowcross/types.hpp"

namespace lowcross {

/// Every subset Y of the ground set is assumed to have a perfect matching
/// with crossing number at most a |Y|^gamma + b.
struct AssumptionParams {
  double a = 1.0;
  double b = 0.0;
  double gamma = 1.0;

  /// Throws ParameterError unless a > 0, b >= 0 and 0 < gamma <= 1.
  void validate() const;
};

/// Parameters implied by a dual shatter bound pi*(k) <= c k^d on m ranges:
/// a = (2c)^{1/d} / (2 ln2 (1 - 1/d)), b = ln m / ln 2, gamma = 1 - 1/d.
/// Requires c > 0, d > 1 and m >= 34.
AssumptionParams params_from_dual_shatter(double c, double d, double m);

}  // namespace lowcross
