#include "gdm/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace gdm {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
constexpr int kPaletteSize = 6;

constexpr double kWidth = 640, kHeight = 480;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

} // namespace

std::string render_log_plot(const std::string& title, const std::string& x_label,
                            const std::string& y_label, const std::vector<PlotSeries>& series) {
    double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
    double ly_min = std::numeric_limits<double>::infinity(), ly_max = -ly_min;
    for (const PlotSeries& s : series) {
        for (size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (s.y[i] <= 0) continue;
            x_min = std::min(x_min, s.x[i]);
            x_max = std::max(x_max, s.x[i]);
            const double ly = std::log10(s.y[i]);
            ly_min = std::min(ly_min, ly);
            ly_max = std::max(ly_max, ly);
        }
    }
    if (!(x_min <= x_max)) { // nothing plottable
        x_min = 0;
        x_max = 1;
        ly_min = -1;
        ly_max = 0;
    }
    if (x_max == x_min) x_max = x_min + 1;
    // Snap the y range to whole decades so gridlines land on powers of ten.
    ly_min = std::floor(ly_min);
    ly_max = std::ceil(ly_max);
    if (ly_max == ly_min) ly_max = ly_min + 1;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto sx = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
    auto sy = [&](double ly) { return kTop + (ly_max - ly) / (ly_max - ly_min) * plot_h; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
           "viewBox=\"0 0 640 480\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out += "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
    out += "<text x=\"320\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" + title + "</text>\n";

    // Decade gridlines and y tick labels.
    for (double ly = ly_min; ly <= ly_max + 1e-9; ly += 1.0) {
        const double y = sy(ly);
        out += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(y) + "\" x2=\"" + num(kWidth - kRight) +
               "\" y2=\"" + num(y) + "\" stroke=\"#dddddd\"/>\n";
        char lab[32];
        std::snprintf(lab, sizeof lab, "1e%g", ly);
        out += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(y + 4) +
               "\" text-anchor=\"end\">" + lab + "</text>\n";
    }

    // X ticks: at most 13 evenly spaced round steps.
    double x_step = std::pow(10.0, std::floor(std::log10((x_max - x_min) / 6.0)));
    while ((x_max - x_min) / x_step > 12.0) x_step *= 2.0;
    const double x_first = std::ceil(x_min / x_step) * x_step;
    for (double x = x_first; x <= x_max + 1e-9; x += x_step) {
        const double px = sx(x);
        out += "<line x1=\"" + num(px) + "\" y1=\"" + num(kHeight - kBottom) + "\" x2=\"" + num(px) +
               "\" y2=\"" + num(kHeight - kBottom + 5) + "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + num(px) + "\" y=\"" + num(kHeight - kBottom + 18) +
               "\" text-anchor=\"middle\">" + tick_label(x) + "</text>\n";
    }

    // Axes.
    out += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) +
           "\" y2=\"" + num(kHeight - kBottom) + "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kHeight - kBottom) + "\" x2=\"" +
           num(kWidth - kRight) + "\" y2=\"" + num(kHeight - kBottom) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 12) +
           "\" text-anchor=\"middle\">" + x_label + "</text>\n";
    out += "<text x=\"16\" y=\"" + num(kTop + plot_h / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
           num(kTop + plot_h / 2) + ")\">" + y_label + "</text>\n";

    // Series polylines and markers.
    for (size_t si = 0; si < series.size(); ++si) {
        const PlotSeries& s = series[si];
        const char* color = kPalette[si % kPaletteSize];
        std::string pts;
        for (size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (s.y[i] <= 0) continue;
            if (!pts.empty()) pts += ' ';
            pts += num(sx(s.x[i])) + "," + num(sy(std::log10(s.y[i])));
        }
        if (!pts.empty())
            out += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + color +
                   "\" stroke-width=\"1.5\"/>\n";
        for (size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (s.y[i] <= 0) continue;
            out += "<circle cx=\"" + num(sx(s.x[i])) + "\" cy=\"" + num(sy(std::log10(s.y[i]))) +
                   "\" r=\"2.5\" fill=\"" + color + "\"/>\n";
        }
        // Legend entry.
        const double lx = kWidth - kRight - 150, ly = kTop + 8 + 16 * static_cast<double>(si);
        out += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + 22) +
               "\" y2=\"" + num(ly) + "\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
        out += "<text x=\"" + num(lx + 28) + "\" y=\"" + num(ly + 4) + "\">" + s.label + "</text>\n";
    }

    out += "</svg>\n";
    return out;
}

} // namespace gdm
