#pragma once

#include <string>

#include "cellule/cells.hpp"

namespace cellule {

struct PlotOptions {
  double window = 2.0;  // cartesian half-width of the viewport
  int max_length = 24;  // cap on alcove enumeration
};

// Rank-2 picture of the alcove tiling: alcoves colored by their block in
// the lowest-cell decomposition (gray outside it), hyperplanes stroked by
// weight, special points marked per orbit class.  Throws RankUnsupported
// for rank != 2.
std::string render_alcove_svg(std::shared_ptr<const CoxeterSystem> sys, const PlotOptions& opt);

}  // namespace cellule
