#include "serialize.hpp"

#include <stdexcept>

namespace extspec::cli {

namespace {

cplx cplx_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument("expected a complex number as [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

json matrix_to_json(const CMatrix& M) {
  json rows = json::array();
  for (Eigen::Index a = 0; a < M.rows(); ++a) {
    json row = json::array();
    for (Eigen::Index b = 0; b < M.cols(); ++b) row.push_back(cnum(M(a, b)));
    rows.push_back(row);
  }
  return rows;
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a non-empty list of rows");
  const std::size_t m = j.size();
  CMatrix M(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(j[0].size()));
  for (std::size_t a = 0; a < m; ++a) {
    if (!j[a].is_array() || j[a].size() != static_cast<std::size_t>(M.cols()))
      throw std::invalid_argument("matrix rows differ in length");
    for (std::size_t b = 0; b < j[a].size(); ++b)
      M(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = cplx_from_json(j[a][b]);
  }
  return M;
}

MatrixFile matrix_file_from_json(const json& j) {
  MatrixFile f;
  if (!j.is_object() || !j.contains("matrix")) throw std::invalid_argument("matrix file needs a \"matrix\" entry");
  f.M = matrix_from_json(j.at("matrix"));
  if (j.contains("angles"))
    for (const auto& a : j.at("angles")) {
      if (!a.is_string()) throw std::invalid_argument("angles must be strings");
      f.angles.push_back(a.get<std::string>());
    }
  return f;
}

json matrix_file_to_json(const MatrixFile& f) {
  json j;
  j["angles"] = f.angles;
  j["matrix"] = matrix_to_json(f.M);
  return j;
}

json hardy_to_json(const HardyFunction& f) {
  json j;
  j["taylor"] = json::array();
  for (const auto& c : f.taylor) j["taylor"].push_back(cnum(c));
  j["poles"] = json::array();
  for (const auto& p : f.poles) j["poles"].push_back({{"zeta", cnum(p.zeta)}, {"residue", cnum(p.residue)}});
  return j;
}

HardyFunction hardy_from_json(const json& j) {
  HardyFunction f;
  if (!j.is_object()) throw std::invalid_argument("HardyFunction must be an object");
  if (j.contains("taylor"))
    for (const auto& c : j.at("taylor")) f.taylor.push_back(cplx_from_json(c));
  if (j.contains("poles"))
    for (const auto& p : j.at("poles")) {
      const cplx zeta = cplx_from_json(p.at("zeta"));
      if (std::abs(std::abs(zeta) - 1.0) > 1e-12) throw std::invalid_argument("pole points must lie on |z| = 1");
      f.poles.push_back({zeta, cplx_from_json(p.at("residue"))});
    }
  return f;
}

json report_to_json(const Report& r) {
  json j;
  j["name"] = r.name;
  j["pass"] = r.pass();
  j["checks"] = json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"value", num(c.value)}, {"bound", num(c.bound)}});
  return j;
}

}  // namespace extspec::cli
