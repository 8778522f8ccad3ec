#include "mtcav/io.hpp"

#include <cmath>
#include <cstdio>

namespace mtcav::io {

std::string fmt(double value, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, value);
  return buf;
}

std::string fmt(double value) { return fmt(value, 12); }

std::string fmt(long long value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%lld", value);
  return buf;
}

std::string fmt(std::complex<double> value) {
  if (value.imag() == 0.0) {
    return fmt(value.real());
  }
  std::string s = fmt(value.real());
  s += value.imag() < 0 ? "-" : "+";
  s += fmt(std::abs(value.imag()));
  s += "i";
  return s;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << cells[i];
  }
  out << '\n';
}

void write_kv(std::ostream& out, const std::string& key, const std::string& value) {
  out << key << '=' << value << '\n';
}

void write_kv(std::ostream& out, const std::string& key, double value) {
  write_kv(out, key, fmt(value));
}

}  // namespace mtcav::io
