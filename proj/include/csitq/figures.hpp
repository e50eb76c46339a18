#pragma once

#include <ostream>
#include <string>

#include "csitq/asymptotics.hpp"

namespace csitq {

/// RFC-4180-style CSV with header p,classical,ea_rate,ratio.
void write_ratio_csv(std::ostream& out, const RatioCurve& curve);

/// Minimal self-contained SVG line plot of the three curves over log10(p).
std::string ratio_curve_svg(const RatioCurve& curve);

}  // namespace csitq
