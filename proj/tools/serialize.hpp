#pragma once

#include <string>
#include <vector>

#include "extspec/boundary.hpp"
#include "extspec/extfinite.hpp"
#include "extspec/report.hpp"
#include "format.hpp"

namespace extspec::cli {

// Row-major list of rows, each entry an [re, im] pair.
json matrix_to_json(const CMatrix& M);
CMatrix matrix_from_json(const json& j);

// {"angles": ["0", "1/2"], "matrix": [[[re, im], ...], ...]}; angles are strings so
// that exact fractions survive.  Missing "angles" leaves the list empty.
struct MatrixFile {
  std::vector<std::string> angles;
  CMatrix M;
};
MatrixFile matrix_file_from_json(const json& j);
json matrix_file_to_json(const MatrixFile& f);

// {"taylor": [[re, im], ...], "poles": [{"zeta": [re, im], "residue": [re, im]}, ...]}
json hardy_to_json(const HardyFunction& f);
HardyFunction hardy_from_json(const json& j);

json report_to_json(const Report& r);

}  // namespace extspec::cli
