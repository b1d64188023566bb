#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace extspec::cli {

using json = nlohmann::ordered_json;

// %.16e, i.e. 17 significant digits; empty for masked (non-finite) values
std::string fmt_num(double x);
std::string fmt_cell(std::optional<double> x);

json num(double x);  // null when not finite
json cnum(std::complex<double> z);  // [re, im]

// JSON with every number printed through fmt_num.
void write_json(std::ostream& os, const json& j);

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells);

}  // namespace extspec::cli
