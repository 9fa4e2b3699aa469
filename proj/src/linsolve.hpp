#pragma once

#include <optional>
#include <vector>

#include "qsum/rational.hpp"

namespace qsum::detail {

/// One solution of a x == b over Q, or nullopt when inconsistent. Free
/// variables are set to zero.
std::optional<std::vector<Rat>> solve_linear_system(std::vector<std::vector<Rat>> a,
                                                    std::vector<Rat> b);

}  // namespace qsum::detail
