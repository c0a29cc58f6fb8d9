#pragma once

#include <optional>
#include <vector>

#include "qo/rational.hpp"

namespace qo {

// A point x >= 0 with A x = b, or nothing. Exact two-phase simplex with Bland's rule.
std::optional<std::vector<Rational>> lp_feasible(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b);

}  // namespace qo
