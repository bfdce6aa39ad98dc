#pragma once

#include <optional>

#include "wheels/graph.hpp"

namespace wheels {

// Decides whether g is exactly a subdivision of the wheel W_k. The graph
// must be 2-connected; all degree-2 vertices are then contracted to a fixed
// point and the result must have k+1 vertices of which k have degree 3 and
// one has degree k (for k == 3: four vertices, all of degree 3, i.e. K_4).
// On success returns the contracted wheel, which keeps the surviving
// original vertex ids; otherwise returns std::nullopt. The input graph is
// never mutated. Requires k >= 3 (std::invalid_argument otherwise).
std::optional<graph> is_k_wheel(const graph& g, int k);

}  // namespace wheels
