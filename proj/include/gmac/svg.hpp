#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "gmac/io.hpp"
#include "gmac/region.hpp"

namespace gmac {

/// One polyline on a plot.
struct PlotSeries {
    std::string label;
    std::vector<Point> points;
};

/// Self-contained deterministic SVG line chart: axes with ticks, one
/// polyline per series, and a legend. No external references.
inline std::string render_svg(const std::vector<PlotSeries>& series, const std::string& x_label,
                              const std::string& y_label) {
    static const char* kColors[] = {"#1f6fb4", "#d95f02", "#1b9e77", "#7570b3",
                                    "#e7298a", "#66a61e", "#e6ab02", "#a6761d"};
    const int width = 720, height = 540;
    const double ml = 72, mr = 24, mt = 24, mb = 56;

    double xmax = 0.0, ymax = 0.0, xmin = 0.0, ymin = 0.0;
    for (const PlotSeries& s : series)
        for (const Point& p : s.points) {
            xmax = std::max(xmax, p.r1);
            ymax = std::max(ymax, p.r2);
            xmin = std::min(xmin, p.r1);
            ymin = std::min(ymin, p.r2);
        }
    if (xmax <= xmin) xmax = xmin + 1.0;
    if (ymax <= ymin) ymax = ymin + 1.0;
    xmax *= xmax > 0 ? 1.05 : 1.0;
    ymax *= ymax > 0 ? 1.05 : 1.0;

    auto sx = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr); };
    auto sy = [&](double y) { return height - mb - (y - ymin) / (ymax - ymin) * (height - mt - mb); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
           " " + std::to_string(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes
    svg += "<line x1=\"" + fmt_fixed(ml, 1) + "\" y1=\"" + fmt_fixed(sy(ymin), 1) + "\" x2=\"" +
           fmt_fixed(double(width) - mr, 1) + "\" y2=\"" + fmt_fixed(sy(ymin), 1) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + fmt_fixed(ml, 1) + "\" y1=\"" + fmt_fixed(sy(ymin), 1) + "\" x2=\"" +
           fmt_fixed(ml, 1) + "\" y2=\"" + fmt_fixed(mt, 1) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    // ticks: five per axis, rounded labels
    for (int i = 0; i <= 5; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 5.0;
        const double yv = ymin + (ymax - ymin) * i / 5.0;
        svg += "<line x1=\"" + fmt_fixed(sx(xv), 1) + "\" y1=\"" + fmt_fixed(sy(ymin), 1) +
               "\" x2=\"" + fmt_fixed(sx(xv), 1) + "\" y2=\"" + fmt_fixed(sy(ymin) + 5, 1) +
               "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fmt_fixed(sx(xv), 1) + "\" y=\"" + fmt_fixed(sy(ymin) + 20, 1) +
               "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" +
               fmt_fixed(xv, 2) + "</text>\n";
        svg += "<line x1=\"" + fmt_fixed(ml - 5, 1) + "\" y1=\"" + fmt_fixed(sy(yv), 1) +
               "\" x2=\"" + fmt_fixed(ml, 1) + "\" y2=\"" + fmt_fixed(sy(yv), 1) +
               "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fmt_fixed(ml - 8, 1) + "\" y=\"" + fmt_fixed(sy(yv) + 4, 1) +
               "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">" +
               fmt_fixed(yv, 2) + "</text>\n";
    }
    svg += "<text x=\"" + fmt_fixed((ml + width - mr) / 2, 1) + "\" y=\"" +
           fmt_fixed(double(height) - 12, 1) +
           "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">" + x_label +
           "</text>\n";
    svg += "<text x=\"16\" y=\"" + fmt_fixed((mt + height - mb) / 2, 1) +
           "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
           fmt_fixed((mt + height - mb) / 2, 1) + ")\">" + y_label + "</text>\n";

    // series
    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kColors[s % (sizeof(kColors) / sizeof(kColors[0]))];
        std::string pts;
        for (const Point& p : series[s].points)
            pts += fmt_fixed(sx(p.r1), 2) + "," + fmt_fixed(sy(p.r2), 2) + " ";
        if (!pts.empty()) pts.pop_back();
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
    }

    // legend
    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kColors[s % (sizeof(kColors) / sizeof(kColors[0]))];
        const double ly = mt + 10 + 18 * double(s);
        svg += "<line x1=\"" + fmt_fixed(ml + 12, 1) + "\" y1=\"" + fmt_fixed(ly, 1) + "\" x2=\"" +
               fmt_fixed(ml + 36, 1) + "\" y2=\"" + fmt_fixed(ly, 1) + "\" stroke=\"" + color +
               "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + fmt_fixed(ml + 42, 1) + "\" y=\"" + fmt_fixed(ly + 4, 1) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + series[s].label + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

/// The Pareto polyline already spans axis to axis; plot it as-is.
inline PlotSeries region_series(const std::string& label, const RateRegion2D& region) {
    return PlotSeries{label, region.vertices};
}

} // namespace gmac
