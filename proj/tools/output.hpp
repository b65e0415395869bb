#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace warpstab::cli {

/// 17 significant digits, so values round-trip.
std::string num(double x);

void kv(std::ostream& out, const std::string& key, double value);
void kv(std::ostream& out, const std::string& key, const std::string& value);
void kv(std::ostream& out, const std::string& key, const char* value);
void kv(std::ostream& out, const std::string& key, bool value);
void kv(std::ostream& out, const std::string& key, int value);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<double> row) { rows_.push_back(std::move(row)); }
  [[nodiscard]] const std::vector<std::string>& header() const { return header_; }
  [[nodiscard]] const std::vector<std::vector<double>>& rows() const { return rows_; }
  [[nodiscard]] std::vector<double> column(std::size_t i) const;

  void write(std::ostream& out) const;
  /// Right-aligned columns for terminals.
  void write_aligned(std::ostream& out) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<double>> rows_;
};

/// Writes to `path`, or to `fallback` when path is empty.
void emit(const CsvTable& table, const std::string& path, std::ostream& fallback);

struct Series {
  std::string name;
  std::vector<double> y;
};

/// A plain line plot as SVG text. Non-finite points break the line.
void write_svg(const std::string& path, const std::string& title, const std::string& x_label,
               const std::vector<double>& x, const std::vector<Series>& series);

}  // namespace warpstab::cli
