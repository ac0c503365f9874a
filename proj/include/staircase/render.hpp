#pragma once

#include <optional>
#include <string>

#include "staircase/boundary.hpp"
#include "staircase/path.hpp"

// Deterministic lattice figures: dotted grid, dashed boundary, solid path.
// Identical inputs yield byte-identical output in both formats.
namespace staircase::render {

struct RenderOptions {
  std::optional<Boundary> boundary;
  // When set, waypoint visits (points (2ik+k+1, 2i+1) on the path) are
  // marked.
  std::optional<long long> k;
};

// Character canvas: grid points '.', boundary '#', path vertices 'o'
// ('X' where the path sits on the boundary), edges '-'/'|', waypoint
// visits '@'. An empty path draws no ink beyond grid and boundary.
std::string render_ascii(const LatticePath& path, const RenderOptions& options);

// SVG at 20 units per cell with the lattice origin at the bottom left.
std::string render_svg(const LatticePath& path, const RenderOptions& options);

}  // namespace staircase::render
