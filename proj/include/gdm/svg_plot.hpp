#ifndef GDM_SVG_PLOT_HPP
#define GDM_SVG_PLOT_HPP

#include <string>
#include <vector>

namespace gdm {

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

/// Self-contained SVG line chart with a linear x axis and a log10 y axis,
/// meant for error-rate curves. Points with y <= 0 are skipped (they have
/// no place on a log axis). Output is deterministic for equal inputs.
std::string render_log_plot(const std::string& title, const std::string& x_label,
                            const std::string& y_label, const std::vector<PlotSeries>& series);

} // namespace gdm

#endif
