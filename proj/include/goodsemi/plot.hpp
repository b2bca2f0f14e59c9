#pragma once

#include <string>

#include "goodsemi/ideal.hpp"

namespace goodsemi {

/// Lattice window and caption of a two-dimensional plot.
struct PlotSpec {
  Box window;
  std::string title;
};

/// Window [min(0, mu), gamma + 2]. Throws PreconditionError unless s = 2.
PlotSpec default_plot(const IdealFrame& E, std::string title = {});

/// Rows from the top of the window down; '#' marks members, '.' the rest.
std::string ascii_plot(const IdealFrame& E, const PlotSpec& spec);

/// Filled circles for members, hollow circles for non-members, with axes.
std::string svg_plot(const IdealFrame& E, const PlotSpec& spec);

}  // namespace goodsemi
