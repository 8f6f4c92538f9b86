#pragma once

#include <filesystem>
#include <string_view>

namespace sociodyn {

enum class PlotKind { PriceTrace, Sweep, Histogram };

PlotKind parse_plot_kind(std::string_view s);

// Static SVG chart. price-trace reads a steps.csv (first scenario/seed in the
// file), sweep reads a sweep.csv, histogram reads a histogram.csv. Throws
// ConfigError naming a missing column.
void emit_plot(const std::filesystem::path& csv_in, PlotKind kind,
               const std::filesystem::path& svg_out);

}  // namespace sociodyn
