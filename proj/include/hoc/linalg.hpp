#pragma once

#include <vector>

#include "hoc/rational.hpp"

namespace hoc {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Exact basis of the right null space of a rectangular matrix.
/// Empty basis for a full-column-rank matrix.
std::vector<RationalVector> null_space(const RationalMatrix& rows);

}  // namespace hoc
