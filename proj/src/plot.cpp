#include "sociodyn/plot.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "sociodyn/csv.h"
#include "sociodyn/types.h"

namespace sociodyn {
namespace {

struct Series {
  std::string name;
  std::string color;
  std::vector<double> x;
  std::vector<double> y;
};

struct Frame {
  double left = 70, top = 40, width = 560, height = 300;
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;

  double px(double x) const { return left + (x - x0) / (x1 - x0) * width; }
  double py(double y) const { return top + height - (y - y0) / (y1 - y0) * height; }
};

std::string f2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

double to_double(const std::string& s) {
  try {
    return std::stod(s);
  } catch (const std::exception&) {
    throw ConfigError("not a number: '" + s + "'");
  }
}

std::vector<double> column(const csv::Table& t, std::string_view name,
                           const std::vector<std::size_t>& rows) {
  const auto c = t.column(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto r : rows) out.push_back(to_double(t.rows[r][c]));
  return out;
}

Frame fit(const std::vector<Series>& series, bool zero_based) {
  Frame f;
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const auto& s : series) {
    for (const double x : s.x) xmin = std::min(xmin, x), xmax = std::max(xmax, x);
    for (const double y : s.y) ymin = std::min(ymin, y), ymax = std::max(ymax, y);
  }
  if (!std::isfinite(xmin)) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (zero_based) ymin = std::min(ymin, 0.0);
  if (xmax <= xmin) xmax = xmin + 1;
  if (ymax <= ymin) ymax = ymin + 1;
  const double pad = 0.05 * (ymax - ymin);
  f.x0 = xmin;
  f.x1 = xmax;
  f.y0 = zero_based ? ymin : ymin - pad;
  f.y1 = ymax + pad;
  return f;
}

void axes(std::string& svg, const Frame& f, const std::string& xlabel, const std::string& ylabel) {
  svg += "<rect x=\"" + f2(f.left) + "\" y=\"" + f2(f.top) + "\" width=\"" + f2(f.width) +
         "\" height=\"" + f2(f.height) + "\" fill=\"none\" stroke=\"#333\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = f.x0 + (f.x1 - f.x0) * i / 4.0;
    const double yv = f.y0 + (f.y1 - f.y0) * i / 4.0;
    svg += "<text x=\"" + f2(f.px(xv)) + "\" y=\"" + f2(f.top + f.height + 16) +
           "\" text-anchor=\"middle\">" + csv::num(xv) + "</text>\n";
    svg += "<text x=\"" + f2(f.left - 6) + "\" y=\"" + f2(f.py(yv) + 4) +
           "\" text-anchor=\"end\">" + csv::num(yv) + "</text>\n";
  }
  svg += "<text x=\"" + f2(f.left + f.width / 2) + "\" y=\"" + f2(f.top + f.height + 34) +
         "\" text-anchor=\"middle\">" + xlabel + "</text>\n";
  svg += "<text x=\"16\" y=\"" + f2(f.top + f.height / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         f2(f.top + f.height / 2) + ")\">" + ylabel + "</text>\n";
}

void lines(std::string& svg, const Frame& f, const std::vector<Series>& series) {
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    svg += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (i) svg += ' ';
      svg += f2(f.px(s.x[i])) + "," + f2(f.py(s.y[i]));
    }
    svg += "\"/>\n";
    const double ly = f.top + 14 + 16.0 * static_cast<double>(k);
    svg += "<line x1=\"" + f2(f.left + f.width + 10) + "\" y1=\"" + f2(ly - 4) + "\" x2=\"" +
           f2(f.left + f.width + 30) + "\" y2=\"" + f2(ly - 4) + "\" stroke=\"" + s.color +
           "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + f2(f.left + f.width + 34) + "\" y=\"" + f2(ly) + "\">" + s.name +
           "</text>\n";
  }
}

std::string document(const std::string& title, const std::string& body, double height) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"760\" height=\"" + f2(height) +
         "\" font-family=\"sans-serif\" font-size=\"11\">\n"
         "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
         "<text x=\"380\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" + title +
         "</text>\n" + body + "</svg>\n";
}

std::string price_trace(const csv::Table& t) {
  const auto c_scn = t.column("scenario");
  const auto c_seed = t.column("seed");
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.rows[i][c_scn] == t.rows[0][c_scn] && t.rows[i][c_seed] == t.rows[0][c_seed]) {
      rows.push_back(i);
    }
  }
  const auto steps = column(t, "step", rows);
  std::vector<Series> s = {
      {"mean FPr", "#1f77b4", steps, column(t, "mean_fpr", rows)},
      {"spot FPr", "#9ecae1", steps, column(t, "spot_fpr", rows)},
      {"mean MPr", "#d62728", steps, column(t, "mean_mpr", rows)},
      {"spot MPr", "#ff9896", steps, column(t, "spot_mpr", rows)},
  };
  std::string body;
  const Frame f = fit(s, true);
  axes(body, f, "step", "price");
  lines(body, f, s);
  const std::string title = rows.empty() ? std::string("prices")
                                         : "prices, " + t.rows[0][c_scn] + " seed " + t.rows[0][c_seed];
  return document(title, body, 390);
}

std::string sweep(const csv::Table& t) {
  std::vector<std::size_t> rows(t.rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  const auto xs = column(t, "value", rows);
  const std::string param = t.rows.empty() ? "value" : t.rows[0][t.column("param")];
  std::string body;
  std::vector<Series> tar = {{"mean TAR", "#2ca02c", xs, column(t, "mean_tar", rows)}};
  std::vector<Series> age = {{"mean Age", "#9467bd", xs, column(t, "mean_age", rows)}};
  Frame top = fit(tar, true);
  axes(body, top, param, "TAR");
  lines(body, top, tar);
  Frame bottom = fit(age, true);
  bottom.top = top.top + top.height + 70;
  axes(body, bottom, param, "Age");
  lines(body, bottom, age);
  return document("sweep over " + param, body, 790);
}

std::string histogram(const csv::Table& t) {
  std::vector<std::size_t> rows(t.rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  const auto lo = column(t, "bin_lo", rows);
  const auto hi = column(t, "bin_hi", rows);
  const auto count = column(t, "count", rows);
  Frame f;
  f.x0 = lo.empty() ? 0 : *std::min_element(lo.begin(), lo.end());
  f.x1 = hi.empty() ? 1 : *std::max_element(hi.begin(), hi.end());
  f.y0 = 0;
  f.y1 = count.empty() ? 1 : std::max(1.0, *std::max_element(count.begin(), count.end()) * 1.05);
  if (f.x1 <= f.x0) f.x1 = f.x0 + 1;
  std::string body;
  axes(body, f, "goods per agent (food + minerals)", "agents");
  for (std::size_t i = 0; i < lo.size(); ++i) {
    const double x = f.px(lo[i]);
    const double w = std::max(0.5, f.px(hi[i]) - x - 0.5);
    const double y = f.py(count[i]);
    body += "<rect x=\"" + f2(x) + "\" y=\"" + f2(y) + "\" width=\"" + f2(w) + "\" height=\"" +
            f2(f.py(0) - y) + "\" fill=\"#8c6d31\"/>\n";
  }
  return document("wealth distribution", body, 390);
}

}  // namespace

PlotKind parse_plot_kind(std::string_view s) {
  if (s == "price-trace") return PlotKind::PriceTrace;
  if (s == "sweep") return PlotKind::Sweep;
  if (s == "histogram") return PlotKind::Histogram;
  throw ConfigError("unknown plot kind '" + std::string(s) + "'");
}

void emit_plot(const std::filesystem::path& csv_in, PlotKind kind,
               const std::filesystem::path& svg_out) {
  const auto table = csv::read(csv_in);
  std::string svg;
  switch (kind) {
    case PlotKind::PriceTrace: svg = price_trace(table); break;
    case PlotKind::Sweep: svg = sweep(table); break;
    case PlotKind::Histogram: svg = histogram(table); break;
  }
  std::ofstream out(svg_out, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + svg_out.string() + "'");
  out << svg;
}

}  // namespace sociodyn
