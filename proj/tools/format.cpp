#include "format.hpp"

#include <cmath>
#include <cstdio>

namespace extspec::cli {

std::string fmt_num(double x) {
  if (!std::isfinite(x)) return {};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

std::string fmt_cell(std::optional<double> x) { return x ? fmt_num(*x) : std::string{}; }

json num(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json cnum(std::complex<double> z) { return json::array({num(z.real()), num(z.imag())}); }

namespace {

void indent(std::ostream& os, int depth) {
  for (int i = 0; i < depth; ++i) os << "  ";
}

bool is_flat(const json& j) {
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

void write(std::ostream& os, const json& j, int depth) {
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        indent(os, depth + 1);
        os << json(it.key()).dump() << ": ";
        write(os, it.value(), depth + 1);
      }
      os << "\n";
      indent(os, depth);
      os << "}";
      return;
    }
    case json::value_t::array: {
      // short numeric arrays such as [re, im] stay on one line
      if (j.empty() || is_flat(j)) {
        os << "[";
        for (std::size_t k = 0; k < j.size(); ++k) {
          if (k) os << ", ";
          write(os, j[k], depth);
        }
        os << "]";
        return;
      }
      os << "[\n";
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) os << ",\n";
        indent(os, depth + 1);
        write(os, j[k], depth + 1);
      }
      os << "\n";
      indent(os, depth);
      os << "]";
      return;
    }
    case json::value_t::number_float:
      os << (std::isfinite(j.get<double>()) ? fmt_num(j.get<double>()) : "null");
      return;
    default:
      os << j.dump();
  }
}

}  // namespace

void write_json(std::ostream& os, const json& j) {
  write(os, j, 0);
  os << "\n";
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k) os << ',';
    os << cells[k];
  }
  os << '\n';
}

}  // namespace extspec::cli
