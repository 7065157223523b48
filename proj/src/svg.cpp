#include "nsys/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "nsys/systems.hpp"

namespace nsys {

namespace {

const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
constexpr int kPaletteSize = 8;
constexpr double kMarginLeft = 62, kMarginRight = 16, kMarginTop = 18, kMarginBottom = 42;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Frame {
  double x0, x1, y0, y1;
  double width, height;

  double X(double x) const {
    return kMarginLeft + (x - x0) / (x1 - x0) * (width - kMarginLeft - kMarginRight);
  }
  double Y(double y) const {
    return height - kMarginBottom -
           (y - y0) / (y1 - y0) * (height - kMarginTop - kMarginBottom);
  }
};

struct Guide {
  double x;
  std::string label;
  bool labeled;
};

struct SlopeLabel {
  double x, y;
  std::string text;
};

std::string render(const std::vector<std::vector<std::pair<double, double>>>& series,
                   const std::vector<std::string>& names, const std::vector<Guide>& guides,
                   const std::vector<SlopeLabel>& slopes, const SvgOptions& opt) {
  Frame f{};
  f.width = opt.width;
  f.height = opt.height;
  bool first = true;
  for (const auto& s : series)
    for (const auto& [x, y] : s) {
      if (first) {
        f.x0 = f.x1 = x;
        f.y0 = f.y1 = y;
        first = false;
      } else {
        f.x0 = std::min(f.x0, x);
        f.x1 = std::max(f.x1, x);
        f.y0 = std::min(f.y0, y);
        f.y1 = std::max(f.y1, y);
      }
    }
  if (first) throw std::invalid_argument("nothing to draw");
  if (f.x1 == f.x0) {
    f.x0 -= 1;
    f.x1 += 1;
  }
  if (f.y1 == f.y0) {
    f.y0 -= 1;
    f.y1 += 1;
  }

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + std::to_string(opt.width) +
         " " + std::to_string(opt.height) + "\" width=\"" + std::to_string(opt.width) +
         "\" height=\"" + std::to_string(opt.height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  const double ax_y = f.height - kMarginBottom;
  svg += "<line x1=\"" + fmt(kMarginLeft) + "\" y1=\"" + fmt(ax_y) + "\" x2=\"" +
         fmt(f.width - kMarginRight) + "\" y2=\"" + fmt(ax_y) +
         "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  svg += "<line x1=\"" + fmt(kMarginLeft) + "\" y1=\"" + fmt(kMarginTop) + "\" x2=\"" +
         fmt(kMarginLeft) + "\" y2=\"" + fmt(ax_y) +
         "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

  for (const Guide& g : guides) {
    const double px = f.X(g.x);
    svg += "<line x1=\"" + fmt(px) + "\" y1=\"" + fmt(kMarginTop) + "\" x2=\"" + fmt(px) +
           "\" y2=\"" + fmt(ax_y) +
           "\" stroke=\"#bbbbbb\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
    if (g.labeled)
      svg += "<text x=\"" + fmt(px) + "\" y=\"" + fmt(ax_y + 16) +
             "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">" + g.label +
             "</text>\n";
  }

  // y-axis extremes
  for (double yv : {f.y0, f.y1}) {
    svg += "<text x=\"" + fmt(kMarginLeft - 6) + "\" y=\"" + fmt(f.Y(yv) + 4) +
           "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\">" + fmt(yv) +
           "</text>\n";
  }

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % kPaletteSize];
    std::string points;
    for (const auto& [x, y] : series[s]) {
      if (!points.empty()) points += ' ';
      points += fmt(f.X(x)) + "," + fmt(f.Y(y));
    }
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
  }

  for (std::size_t s = 0; s < names.size(); ++s) {
    const char* color = kPalette[s % kPaletteSize];
    svg += "<text x=\"" + fmt(f.width - kMarginRight - 4) + "\" y=\"" +
           fmt(kMarginTop + 14 * static_cast<double>(s) + 10) +
           "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"end\" fill=\"";
    svg += color;
    svg += "\">" + names[s] + "</text>\n";
  }

  for (const SlopeLabel& sl : slopes) {
    svg += "<text x=\"" + fmt(f.X(sl.x)) + "\" y=\"" + fmt(f.Y(sl.y) - 5) +
           "\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\" "
           "fill=\"#444444\">" +
           sl.text + "</text>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace

std::string render_svg(const PLMap& P, const SvgOptions& opt) {
  std::vector<std::vector<std::pair<double, double>>> series(
      static_cast<std::size_t>(P.components()));
  for (int j = 1; j <= P.components(); ++j) {
    auto& s = series[static_cast<std::size_t>(j - 1)];
    s.reserve(P.breakpoint_count());
    for (std::size_t k = 0; k < P.breakpoint_count(); ++k)
      s.emplace_back(rat_double(P.breakpoint(k)),
                     rat_double(P.value_at(k)[static_cast<std::size_t>(j - 1)]));
  }
  std::vector<std::string> names;
  for (int j = 1; j <= P.components(); ++j) names.push_back("P_" + std::to_string(j));

  std::vector<Guide> guides;
  if (opt.guides) {
    const std::size_t count = P.breakpoint_count();
    const std::size_t label_stride = std::max<std::size_t>(1, count / 24);
    const std::size_t guide_stride = count <= 60 ? 1 : label_stride;
    for (std::size_t k = 0; k < count; ++k) {
      if (k % guide_stride != 0 && k + 1 != count) continue;
      guides.push_back({rat_double(P.breakpoint(k)), rat_str(P.breakpoint(k)),
                        k % label_stride == 0 || k + 1 == count});
    }
  }

  std::vector<SlopeLabel> slopes;
  if (opt.slope_labels) {
    for (std::size_t k = 0; k < P.segment_count(); ++k) {
      const auto band = segment_band(P, k);
      if (!band) continue;
      const Rat mid_q = (P.breakpoint(k) + P.breakpoint(k + 1)) / 2;
      const Rat mid_v = (P.value_at(k)[static_cast<std::size_t>(band->hi - 1)] +
                         P.value_at(k + 1)[static_cast<std::size_t>(band->hi - 1)]) /
                        2;
      slopes.push_back({rat_double(mid_q), rat_double(mid_v),
                        band->width() == 1 ? "1" : "1/" + std::to_string(band->width())});
    }
  }

  return render(series, names, guides, slopes, opt);
}

std::string render_trajectory_svg(const std::vector<TrajectoryPoint>& trajectory,
                                  const SvgOptions& opt) {
  if (trajectory.empty()) throw std::invalid_argument("empty trajectory");
  const std::size_t d = trajectory.front().L.size();
  std::vector<std::vector<std::pair<double, double>>> series(d);
  for (const TrajectoryPoint& pt : trajectory)
    for (std::size_t j = 0; j < d; ++j) series[j].emplace_back(pt.q, pt.L[j]);
  std::vector<std::string> names;
  for (std::size_t j = 1; j <= d; ++j) names.push_back("L_" + std::to_string(j));

  std::vector<Guide> guides;
  if (opt.guides && trajectory.size() > 1) {
    const double q_max = trajectory.back().q;
    const int ticks = 8;
    for (int t = 0; t <= ticks; ++t) {
      const double q = q_max * t / ticks;
      guides.push_back({q, fmt(q), true});
    }
  }
  return render(series, names, guides, {}, opt);
}

}  // namespace nsys
