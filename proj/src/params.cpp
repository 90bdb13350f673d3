#include "lowcross/params.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lowcross/errors.hpp"

namespace lowcross {

void AssumptionParams::validate() const {
  if (!(a > 0.0) || !std::isfinite(a)) throw ParameterError("assumption parameter a must be positive");
  if (!(b >= 0.0) || !std::isfinite(b)) throw ParameterError("assumption parameter b must be non-negative");
  if (!(gamma > 0.0 && gamma <= 1.0)) throw ParameterError("assumption parameter gamma must lie in (0, 1]");
}

AssumptionParams params_from_dual_shatter(double c, double d, double m) {
  if (!(c > 0.0)) throw ParameterError("dual shatter constant c must be positive");
  if (!(d > 1.0)) throw ParameterError("dual shatter exponent d must exceed 1");
  if (!(m >= 34.0)) throw PreconditionError("dual shatter parameters need m >= 34, got " + std::to_string(m));
  AssumptionParams p;
  p.gamma = 1.0 - 1.0 / d;
  p.a = std::pow(2.0 * c, 1.0 / d) / (2.0 * std::numbers::ln2 * p.gamma);
  p.b = std::log(m) / std::numbers::ln2;
  return p;
}

}  // namespace lowcross
