#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace leja::tools {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

std::string render_loglog_svg(const std::vector<std::pair<double, double>>& points,
                              double slope, double intercept,
                              const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label) {
    constexpr double width = 640, height = 480;
    constexpr double ml = 70, mr = 25, mt = 40, mb = 55;

    double lx_min = 1e300, lx_max = -1e300, ly_min = 1e300, ly_max = -1e300;
    std::vector<std::pair<double, double>> logs;
    for (const auto& [x, y] : points) {
        if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) continue;
        const double lx = std::log10(x), ly = std::log10(y);
        logs.emplace_back(lx, ly);
        lx_min = std::min(lx_min, lx);
        lx_max = std::max(lx_max, lx);
        ly_min = std::min(ly_min, ly);
        ly_max = std::max(ly_max, ly);
    }
    if (logs.empty()) {
        lx_min = ly_min = 0.0;
        lx_max = ly_max = 1.0;
    }
    if (lx_max - lx_min < 1e-9) lx_max = lx_min + 1.0;
    if (ly_max - ly_min < 1e-9) ly_max = ly_min + 1.0;
    const double pad_x = 0.04 * (lx_max - lx_min), pad_y = 0.06 * (ly_max - ly_min);
    lx_min -= pad_x;
    lx_max += pad_x;
    ly_min -= pad_y;
    ly_max += pad_y;

    const auto px = [&](double lx) {
        return ml + (lx - lx_min) / (lx_max - lx_min) * (width - ml - mr);
    };
    const auto py = [&](double ly) {
        return height - mb - (ly - ly_min) / (ly_max - ly_min) * (height - mt - mb);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
           "viewBox=\"0 0 640 480\">\n";
    svg += "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
    svg += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"15\">" + title + "</text>\n";

    // Axes box.
    svg += "<rect x=\"" + num(ml) + "\" y=\"" + num(mt) + "\" width=\"" +
           num(width - ml - mr) + "\" height=\"" + num(height - mt - mb) +
           "\" fill=\"none\" stroke=\"black\"/>\n";

    // Decade ticks.
    for (int e = static_cast<int>(std::ceil(lx_min)); e <= static_cast<int>(std::floor(lx_max)); ++e) {
        const double x = px(e);
        svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(height - mb) + "\" x2=\"" + num(x) +
               "\" y2=\"" + num(height - mb + 5) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(x) + "\" y=\"" + num(height - mb + 20) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">1e" +
               std::to_string(e) + "</text>\n";
    }
    for (int e = static_cast<int>(std::ceil(ly_min)); e <= static_cast<int>(std::floor(ly_max)); ++e) {
        const double y = py(e);
        svg += "<line x1=\"" + num(ml - 5) + "\" y1=\"" + num(y) + "\" x2=\"" + num(ml) +
               "\" y2=\"" + num(y) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(ml - 8) + "\" y=\"" + num(y + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">1e" +
               std::to_string(e) + "</text>\n";
    }

    svg += "<text x=\"" + num((ml + width - mr) / 2) + "\" y=\"" + num(height - 12) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + x_label +
           "</text>\n";
    svg += "<text x=\"16\" y=\"" + num((mt + height - mb) / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 16 " + num((mt + height - mb) / 2) + ")\">" + y_label +
           "</text>\n";

    // Fitted line log10 y = slope * log10 x + intercept/ln(10)... the
    // intercept is supplied in natural-log form: ln y = slope ln x + b.
    if (std::isfinite(slope)) {
        const double b10 = intercept / std::log(10.0);
        const double y1 = slope * lx_min + b10, y2 = slope * lx_max + b10;
        svg += "<line x1=\"" + num(px(lx_min)) + "\" y1=\"" + num(py(y1)) + "\" x2=\"" +
               num(px(lx_max)) + "\" y2=\"" + num(py(y2)) +
               "\" stroke=\"#c44\" stroke-width=\"1.5\"/>\n";
        char label[64];
        std::snprintf(label, sizeof label, "fitted slope %.3f", slope);
        svg += "<text x=\"" + num(width - mr - 8) + "\" y=\"" + num(mt + 18) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"13\" "
               "fill=\"#c44\">" + label + "</text>\n";
    }

    for (const auto& [lx, ly] : logs) {
        svg += "<circle cx=\"" + num(px(lx)) + "\" cy=\"" + num(py(ly)) +
               "\" r=\"2.5\" fill=\"#246\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace leja::tools
