#pragma once

#include <string>

#include "harp/embedding.hpp"
#include "harp/graph.hpp"

namespace harp {

// Minimal scatter plot of a 2-d embedding with edge lines, for eyeballing
// per-level layouts.
void write_layout_svg(const Graph& g, const EmbeddingMatrix& coords,
                      const std::string& path);

}  // namespace harp
