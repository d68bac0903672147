#pragma once

#include <string>
#include <vector>

namespace casclab::tool {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    // Optional per-point 95% CI bounds; same length as y when present.
    std::vector<double> y_lo;
    std::vector<double> y_hi;
    bool step = false; // draw as a staircase (CCDF style)
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = false;
    std::vector<Series> series;
};

/// Renders a fixed-size, fixed-style SVG chart. Output is deterministic:
/// same spec, same bytes.
std::string render_svg(const PlotSpec& spec);

void write_svg(const std::string& path, const PlotSpec& spec);

} // namespace casclab::tool
