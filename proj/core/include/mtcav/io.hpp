#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <vector>

// Deterministic text formatting shared by the CSV and key=value report
// writers. All numbers use the C locale: '.' decimal point, lowercase
// scientific notation, no thousands separators. Identical inputs always
// produce identical bytes.

namespace mtcav::io {

std::string fmt(double value);
std::string fmt(double value, int significant_digits);
std::string fmt(long long value);

// Complex values render as "re", "re+imi" or "re-imi".
std::string fmt(std::complex<double> value);

// One CSV row; cells are written verbatim, separated by commas.
void write_csv_row(std::ostream& out, const std::vector<std::string>& cells);

// One "key=value" line.
void write_kv(std::ostream& out, const std::string& key, const std::string& value);
void write_kv(std::ostream& out, const std::string& key, double value);

}  // namespace mtcav::io
