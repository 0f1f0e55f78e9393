#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace nhnet::io {

/// %.17g in the C locale.
std::string format_double(double v);

/// Comma-separated table, header row first, LF line endings.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(const std::vector<double>& row);
  [[nodiscard]] std::size_t rows() const { return rows_.size(); }
  [[nodiscard]] std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<double>> rows_;
};

struct PlotSeries {
  enum class Style { Line, Points };
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  Style style = Style::Line;
};

/// Static line/scatter chart with linear axes.
struct SvgPlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
  int width = 640;
  int height = 420;

  [[nodiscard]] std::string render() const;
};

/// Writes `content` to `path` in binary mode so line endings stay LF.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace nhnet::io
