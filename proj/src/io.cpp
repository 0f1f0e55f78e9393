#include "nhnet/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "nhnet/error.hpp"

namespace nhnet::io {
namespace {

std::string fixed(double v, int digits = 2) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.*f", digits, v);
  return buf.data();
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

constexpr std::array<const char*, 6> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void include(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (!(lo <= hi)) {
      lo = 0.0;
      hi = 1.0;
    }
    if (hi - lo < 1e-12 * std::max(1.0, std::abs(hi))) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
};

}  // namespace

std::string format_double(double v) {
  std::array<char, 40> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return buf.data();
}

void CsvTable::add_row(const std::vector<double>& row) {
  if (row.size() != header_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "CsvTable: row width " + std::to_string(row.size()) +
                                                  " does not match header width " + std::to_string(header_.size()));
  }
  rows_.push_back(row);
}

std::string CsvTable::str() const {
  std::string out;
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (i) out += ',';
    out += header_[i];
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_double(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string SvgPlot::render() const {
  const double left = 70.0;
  const double right = 20.0;
  const double top = 36.0;
  const double bottom = 50.0;
  const double pw = width - left - right;
  const double ph = height - top - bottom;

  Range xr;
  Range yr;
  for (const auto& s : series) {
    for (double v : s.x) xr.include(v);
    for (double v : s.y) yr.include(v);
  }
  xr.finish();
  yr.finish();
  const auto sx = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  const auto sy = [&](double y) { return top + (1.0 - (y - yr.lo) / (yr.hi - yr.lo)) * ph; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) + "\" height=\"" +
         std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) + " " + std::to_string(height) +
         "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + fixed(width / 2.0) + "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"15\">" + escape_xml(title) + "</text>\n";
  out += "<rect x=\"" + fixed(left) + "\" y=\"" + fixed(top) + "\" width=\"" + fixed(pw) + "\" height=\"" +
         fixed(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int k = 0; k <= 4; ++k) {
    const double fx = xr.lo + (xr.hi - xr.lo) * k / 4.0;
    const double fy = yr.lo + (yr.hi - yr.lo) * k / 4.0;
    out += "<text x=\"" + fixed(sx(fx)) + "\" y=\"" + fixed(top + ph + 18) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + fixed(fx, 3) + "</text>\n";
    out += "<text x=\"" + fixed(left - 6) + "\" y=\"" + fixed(sy(fy) + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + fixed(fy, 3) + "</text>\n";
  }
  out += "<text x=\"" + fixed(left + pw / 2.0) + "\" y=\"" + fixed(height - 10.0) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + escape_xml(x_label) + "</text>\n";
  out += "<text x=\"16\" y=\"" + fixed(top + ph / 2.0) + "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 16 " + fixed(top + ph / 2.0) + ")\">" + escape_xml(y_label) +
         "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    const char* colour = kPalette[i % kPalette.size()];
    const std::size_t n = std::min(s.x.size(), s.y.size());
    if (s.style == PlotSeries::Style::Line) {
      out += "<polyline fill=\"none\" stroke=\"" + std::string(colour) + "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t k = 0; k < n; ++k) {
        if (!std::isfinite(s.x[k]) || !std::isfinite(s.y[k])) continue;
        out += fixed(sx(s.x[k])) + "," + fixed(sy(s.y[k])) + " ";
      }
      out += "\"/>\n";
    } else {
      for (std::size_t k = 0; k < n; ++k) {
        if (!std::isfinite(s.x[k]) || !std::isfinite(s.y[k])) continue;
        out += "<circle cx=\"" + fixed(sx(s.x[k])) + "\" cy=\"" + fixed(sy(s.y[k])) + "\" r=\"2\" fill=\"" +
               colour + "\"/>\n";
      }
    }
    const double ly = top + 16.0 + 16.0 * static_cast<double>(i);
    out += "<text x=\"" + fixed(left + pw - 8) + "\" y=\"" + fixed(ly) + "\" text-anchor=\"end\" "
           "font-family=\"sans-serif\" font-size=\"12\" fill=\"" + colour + "\">" + escape_xml(s.label) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorKind::InvalidConfig, "cannot open " + path.string() + " for writing");
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!f) throw Error(ErrorKind::InvalidConfig, "failed writing " + path.string());
}

}  // namespace nhnet::io
