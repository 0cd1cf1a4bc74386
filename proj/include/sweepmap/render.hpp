#pragma once

#include <string>

#include "sweepmap/path.hpp"

namespace sweepmap {

// ASCII drawing on the (2n+1) x (n+1) lattice, north up. Path vertices are
// '+', steps '-' and '|', free points above the boundary '.', free points on
// the boundary line (level 0) '~'. Points below the boundary stay blank.
// Ends with a newline.
std::string render_path(const DyckPath& path);

}  // namespace sweepmap
