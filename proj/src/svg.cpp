#include "oligosim/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "oligosim/text_format.hpp"

namespace oligosim {
namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 64.0;
constexpr double kRight = kWidth - 124.0;  // legend lives right of the plot
constexpr double kTop = 48.0;
constexpr double kBottom = kHeight - 52.0;

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c",
                                    "#d62728", "#9467bd", "#8c564b"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

// Round tick spacing (1, 2, or 5 times a power of ten) so axis labels stay
// short.
double nice_step(double range, int target_ticks) {
  const double raw = range / target_ticks;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double base = raw / mag;
  double mult = 10.0;
  if (base < 1.5) {
    mult = 1.0;
  } else if (base < 3.5) {
    mult = 2.0;
  } else if (base < 7.5) {
    mult = 5.0;
  }
  return mult * mag;
}

void append_text(std::string& out, double x, double y,
                 const std::string& anchor, int size,
                 const std::string& text) {
  out += "  <text x=\"" + format_g9(x) + "\" y=\"" + format_g9(y) +
         "\" font-family=\"sans-serif\" font-size=\"" +
         format_int(size) + "\" fill=\"#333333\" text-anchor=\"" + anchor +
         "\">" + text + "</text>\n";
}

void append_line(std::string& out, double x1, double y1, double x2, double y2,
                 const std::string& stroke, const std::string& width) {
  out += "  <line x1=\"" + format_g9(x1) + "\" y1=\"" + format_g9(y1) +
         "\" x2=\"" + format_g9(x2) + "\" y2=\"" + format_g9(y2) +
         "\" stroke=\"" + stroke + "\" stroke-width=\"" + width + "\"/>\n";
}

}  // namespace

std::string render_line_chart(const std::string& title,
                              const std::string& x_label,
                              std::span<const Series> series) {
  std::size_t n_points = 0;
  double data_lo = 0.0;
  double data_hi = 0.0;
  bool any_value = false;
  for (const Series& s : series) {
    n_points = std::max(n_points, s.values.size());
    for (double v : s.values) {
      if (!any_value) {
        data_lo = data_hi = v;
        any_value = true;
      } else {
        data_lo = std::min(data_lo, v);
        data_hi = std::max(data_hi, v);
      }
    }
  }
  // Anchor the axis at zero for nonnegative data; flat data still needs a
  // nonzero span.
  double y_lo = std::min(0.0, data_lo);
  double y_hi = data_hi;
  if (y_hi <= y_lo) {
    y_hi = y_lo + 1.0;
  }
  const double pad = 0.05 * (y_hi - y_lo);
  y_hi += pad;
  if (y_lo < 0.0) {
    y_lo -= pad;
  }
  const double x_lo = 0.0;
  const double x_hi = n_points > 1 ? static_cast<double>(n_points - 1) : 1.0;

  const auto map_x = [&](double t) {
    return kLeft + (t - x_lo) / (x_hi - x_lo) * (kRight - kLeft);
  };
  const auto map_y = [&](double v) {
    return kBottom - (v - y_lo) / (y_hi - y_lo) * (kBottom - kTop);
  };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" "
         "height=\"440\" viewBox=\"0 0 720 440\">\n";
  out += "  <rect x=\"0\" y=\"0\" width=\"720\" height=\"440\" "
         "fill=\"#ffffff\"/>\n";
  append_text(out, kWidth / 2.0, 28.0, "middle", 16, title);

  // Horizontal gridlines and y tick labels.
  {
    const double step = nice_step(y_hi - y_lo, 5);
    const long long k_lo = static_cast<long long>(std::ceil(y_lo / step));
    const long long k_hi = static_cast<long long>(std::floor(y_hi / step));
    for (long long k = k_lo; k <= k_hi; ++k) {
      const double v = static_cast<double>(k) * step;
      const double y = map_y(v);
      append_line(out, kLeft, y, kRight, y, "#dddddd", "1");
      append_text(out, kLeft - 8.0, y + 4.0, "end", 11, format_g9(v));
    }
  }

  // X ticks on whole intervals.
  {
    const double step =
        std::max(1.0, std::round(nice_step(x_hi - x_lo, 8)));
    for (double v = 0.0; v <= x_hi + 1e-9; v += step) {
      const double x = map_x(v);
      append_line(out, x, kBottom, x, kBottom + 5.0, "#333333", "1");
      append_text(out, x, kBottom + 18.0, "middle", 11, format_g9(v));
    }
  }

  append_line(out, kLeft, kTop, kLeft, kBottom, "#333333", "1");
  append_line(out, kLeft, kBottom, kRight, kBottom, "#333333", "1");
  append_text(out, (kLeft + kRight) / 2.0, kHeight - 12.0, "middle", 12,
              x_label);

  for (std::size_t i = 0; i < series.size(); ++i) {
    const std::string color(kPalette[i % kPaletteSize]);
    out += "  <polyline fill=\"none\" stroke=\"" + color +
           "\" stroke-width=\"1.5\" points=\"";
    const std::vector<double>& values = series[i].values;
    for (std::size_t t = 0; t < values.size(); ++t) {
      if (t > 0) {
        out += ' ';
      }
      out += format_g9(map_x(static_cast<double>(t))) + ',' +
             format_g9(map_y(values[t]));
    }
    out += "\"/>\n";
  }

  for (std::size_t i = 0; i < series.size(); ++i) {
    const std::string color(kPalette[i % kPaletteSize]);
    const double y = kTop + 14.0 + 18.0 * static_cast<double>(i);
    append_line(out, kRight + 10.0, y - 4.0, kRight + 30.0, y - 4.0, color,
                "2");
    append_text(out, kRight + 36.0, y, "start", 11, series[i].label);
  }

  out += "</svg>\n";
  return out;
}

}  // namespace oligosim
