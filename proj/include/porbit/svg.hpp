// Minimal self-contained SVG line chart: one polyline with point markers,
// axes, and tick labels. Enough to eyeball a sweep without a plotting stack.

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "porbit/serialize.hpp"

namespace porbit {

inline std::string line_chart_svg(const std::string& title, const std::string& x_label,
                                  const std::string& y_label,
                                  const std::vector<std::pair<double, double>>& points) {
    const double width = 640, height = 420;
    const double left = 70, right = 20, top = 40, bottom = 50;
    double xmin = points.front().first, xmax = xmin;
    double ymin = 0.0, ymax = 1.0;  // h* lives in [0, 1]
    for (auto [x, y] : points) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;
    auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * (width - left - right); };
    auto sy = [&](double y) {
        return height - bottom - (y - ymin) / (ymax - ymin) * (height - top - bottom);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_double(width) +
           "\" height=\"" + format_double(height) + "\" font-family=\"sans-serif\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + format_double(width / 2) + "\" y=\"22\" text-anchor=\"middle\" "
           "font-size=\"15\">" + title + "</text>\n";
    // axes
    svg += "<line x1=\"" + format_double(left) + "\" y1=\"" + format_double(height - bottom) +
           "\" x2=\"" + format_double(width - right) + "\" y2=\"" +
           format_double(height - bottom) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + format_double(left) + "\" y1=\"" + format_double(top) + "\" x2=\"" +
           format_double(left) + "\" y2=\"" + format_double(height - bottom) +
           "\" stroke=\"black\"/>\n";
    // ticks
    const int ticks = 5;
    for (int i = 0; i <= ticks; ++i) {
        double fx = xmin + (xmax - xmin) * i / ticks;
        double fy = ymin + (ymax - ymin) * i / ticks;
        svg += "<line x1=\"" + format_double(sx(fx)) + "\" y1=\"" + format_double(height - bottom) +
               "\" x2=\"" + format_double(sx(fx)) + "\" y2=\"" +
               format_double(height - bottom + 5) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + format_double(sx(fx)) + "\" y=\"" +
               format_double(height - bottom + 20) + "\" text-anchor=\"middle\" font-size=\"11\">" +
               format_double(std::round(fx * 1000) / 1000) + "</text>\n";
        svg += "<line x1=\"" + format_double(left - 5) + "\" y1=\"" + format_double(sy(fy)) +
               "\" x2=\"" + format_double(left) + "\" y2=\"" + format_double(sy(fy)) +
               "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + format_double(left - 10) + "\" y=\"" + format_double(sy(fy) + 4) +
               "\" text-anchor=\"end\" font-size=\"11\">" +
               format_double(std::round(fy * 1000) / 1000) + "</text>\n";
    }
    svg += "<text x=\"" + format_double((left + width - right) / 2) + "\" y=\"" +
           format_double(height - 10) + "\" text-anchor=\"middle\" font-size=\"12\">" + x_label +
           "</text>\n";
    svg += "<text x=\"16\" y=\"" + format_double((top + height - bottom) / 2) +
           "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 16 " +
           format_double((top + height - bottom) / 2) + ")\">" + y_label + "</text>\n";
    // data
    std::string poly;
    for (auto [x, y] : points)
        poly += format_double(sx(x)) + "," + format_double(sy(y)) + " ";
    svg += "<polyline points=\"" + poly + "\" fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"2\"/>\n";
    for (auto [x, y] : points)
        svg += "<circle cx=\"" + format_double(sx(x)) + "\" cy=\"" + format_double(sy(y)) +
               "\" r=\"3\" fill=\"#1f6fb2\"/>\n";
    svg += "</svg>\n";
    return svg;
}

}  // namespace porbit
