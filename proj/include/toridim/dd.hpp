#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "toridim/exactlin.hpp"

namespace toridim {

/// Extreme rays of the pointed cone {x : <a, x> >= 0 for every row a}, by
/// incremental double description. The rows must span the ambient space.
/// Rays come back primitive and sorted lexicographically.
std::vector<IntVec> extreme_rays(std::span<const IntVec> rows, std::size_t dim);

}  // namespace toridim
