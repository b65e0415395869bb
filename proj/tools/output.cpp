#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "warpstab/error.hpp"

namespace warpstab::cli {

std::string num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void kv(std::ostream& out, const std::string& key, double value) { out << key << '=' << num(value) << '\n'; }
void kv(std::ostream& out, const std::string& key, const std::string& value) { out << key << '=' << value << '\n'; }
void kv(std::ostream& out, const std::string& key, const char* value) { out << key << '=' << value << '\n'; }
void kv(std::ostream& out, const std::string& key, bool value) {
  out << key << '=' << (value ? "true" : "false") << '\n';
}
void kv(std::ostream& out, const std::string& key, int value) { out << key << '=' << value << '\n'; }

std::vector<double> CsvTable::column(std::size_t i) const {
  std::vector<double> c;
  c.reserve(rows_.size());
  for (const auto& r : rows_) c.push_back(r.at(i));
  return c;
}

void CsvTable::write(std::ostream& out) const {
  for (std::size_t i = 0; i < header_.size(); ++i) out << (i ? "," : "") << header_[i];
  out << '\n';
  for (const auto& r : rows_) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << num(r[i]);
    out << '\n';
  }
}

void CsvTable::write_aligned(std::ostream& out) const {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& h : header_) width.push_back(h.size());
  for (const auto& r : rows_) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.10g", r[i]);
      line.emplace_back(buf);
      width[i] = std::max(width[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto pad = [&](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
  for (std::size_t i = 0; i < header_.size(); ++i) out << (i ? "  " : "") << pad(header_[i], width[i]);
  out << '\n';
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) out << (i ? "  " : "") << pad(line[i], width[i]);
    out << '\n';
  }
}

void emit(const CsvTable& table, const std::string& path, std::ostream& fallback) {
  if (path.empty()) {
    table.write(fallback);
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::invalid_parameters, "cannot write " + path);
  table.write(f);
}

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string tick(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

}  // namespace

void write_svg(const std::string& path, const std::string& title, const std::string& x_label,
               const std::vector<double>& x, const std::vector<Series>& series) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::invalid_parameters, "cannot write " + path);
  const double W = 720, H = 440, L = 70, R = 160, T = 40, B = 50;
  double xlo = INFINITY, xhi = -INFINITY, ylo = INFINITY, yhi = -INFINITY;
  for (double v : x)
    if (std::isfinite(v)) xlo = std::min(xlo, v), xhi = std::max(xhi, v);
  for (const auto& s : series)
    for (double v : s.y)
      if (std::isfinite(v)) ylo = std::min(ylo, v), yhi = std::max(yhi, v);
  if (!(xhi > xlo)) xlo -= 0.5, xhi += 0.5;
  if (!(yhi > ylo)) ylo -= 0.5, yhi += 0.5;
  auto px = [&](double v) { return L + (v - xlo) / (xhi - xlo) * (W - L - R); };
  auto py = [&](double v) { return H - B - (v - ylo) / (yhi - ylo) * (H - T - B); };
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

  f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  f << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  f << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
    << escape(title) << "</text>\n";
  f << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R << "\" height=\"" << H - T - B
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  // zero line when it is in range
  if (ylo < 0 && yhi > 0) {
    f << "<line x1=\"" << L << "\" x2=\"" << W - R << "\" y1=\"" << fixed(py(0)) << "\" y2=\"" << fixed(py(0))
      << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
  }
  for (int k = 0; k <= 4; ++k) {
    const double xv = xlo + (xhi - xlo) * k / 4;
    const double yv = ylo + (yhi - ylo) * k / 4;
    f << "<text x=\"" << fixed(px(xv)) << "\" y=\"" << H - B + 16
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << tick(xv) << "</text>\n";
    f << "<text x=\"" << L - 6 << "\" y=\"" << fixed(py(yv) + 4)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << tick(yv) << "</text>\n";
  }
  f << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 12
    << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << escape(x_label) << "</text>\n";
  for (std::size_t si = 0; si < series.size(); ++si) {
    const char* col = colors[si % 6];
    std::string pts;
    auto flush = [&] {
      if (!pts.empty()) f << "<polyline fill=\"none\" stroke=\"" << col << "\" stroke-width=\"1.5\" points=\"" << pts << "\"/>\n";
      pts.clear();
    };
    for (std::size_t i = 0; i < x.size() && i < series[si].y.size(); ++i) {
      const double yv = series[si].y[i];
      if (!std::isfinite(x[i]) || !std::isfinite(yv)) {
        flush();
        continue;
      }
      pts += (pts.empty() ? "" : " ") + fixed(px(x[i])) + "," + fixed(py(yv));
    }
    flush();
    const double ly = T + 16 + 18.0 * static_cast<double>(si);
    f << "<line x1=\"" << W - R + 12 << "\" x2=\"" << W - R + 36 << "\" y1=\"" << ly - 4 << "\" y2=\"" << ly - 4
      << "\" stroke=\"" << col << "\" stroke-width=\"2\"/>\n";
    f << "<text x=\"" << W - R + 42 << "\" y=\"" << ly
      << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(series[si].name) << "</text>\n";
  }
  f << "</svg>\n";
}

}  // namespace warpstab::cli
