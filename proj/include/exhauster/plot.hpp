#pragma once

#include <cstddef>
#include <string>

#include "exhauster/geometry.hpp"

namespace exh {

enum class PlotFormat { csv, svg };

/// theta-rho plot of every body curve plus the lower envelope.
/// CSV: header `theta,rho_<label>...,envelope`, one row per sample.
/// SVG: one polyline per body (id = label) and one for the envelope.
/// Throws ValidationError if samples < 2.
std::string emit_curves(const Exhauster& ex, std::size_t samples, PlotFormat format);

}  // namespace exh
