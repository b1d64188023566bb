#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "extspec/boundary.hpp"
#include "extspec/errors.hpp"
#include "extspec/extfinite.hpp"
#include "extspec/forms.hpp"
#include "extspec/spectral11.hpp"
#include "extspec/verify.hpp"
#include "format.hpp"
#include "serialize.hpp"

namespace extspec::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kCommands{"spectrum", "kernel", "extension-spectrum", "verify", "plotdata"};

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

// Pulls --config out of args and merges its keys as flags that the command line does not set.
std::vector<std::string> apply_config(std::vector<std::string> args) {
  std::optional<std::string> path;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--config") {
      if (k + 1 >= args.size()) throw UsageError("--config needs a file");
      path = args[k + 1];
      args.erase(args.begin() + static_cast<long>(k), args.begin() + static_cast<long>(k) + 2);
      break;
    }
    if (args[k].rfind("--config=", 0) == 0) {
      path = args[k].substr(9);
      args.erase(args.begin() + static_cast<long>(k));
      break;
    }
  }
  if (!path) return args;
  auto kv = read_config(*path);
  const bool has_command = std::any_of(args.begin(), args.end(), [](const std::string& a) {
    return std::find(kCommands.begin(), kCommands.end(), a) != kCommands.end();
  });
  if (!has_command) {
    auto it = kv.find("command");
    if (it == kv.end()) throw UsageError("no command given on the command line or in the config file");
    args.insert(args.begin(), it->second);
  }
  kv.erase("command");
  for (const auto& [key, value] : kv) {
    const std::string flag = "--" + key;
    if (!has_flag(args, flag)) args.push_back(flag + "=" + value);
  }
  return args;
}

double parse_angle(const std::string& s) {
  try {
    const auto slash = s.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const double v = std::stod(s, &used);
      if (used != s.size()) throw UsageError("");
      return v;
    }
    const std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    std::size_t up = 0, uq = 0;
    const double num = std::stod(p, &up), den = std::stod(q, &uq);
    if (up != p.size() || uq != q.size() || den == 0.0) throw UsageError("");
    return num / den;
  } catch (const std::exception&) {
    throw UsageError("invalid angle '" + s + "' (expected a decimal or p/q, in turns)");
  }
}

BoundarySet parse_points(const std::vector<std::string>& pts) {
  std::vector<double> a;
  for (const auto& s : pts) a.push_back(parse_angle(s));
  return BoundarySet::make(a);
}

json angles_json(const std::vector<std::string>& pts) {
  json a = json::array();
  for (const auto& s : pts) a.push_back(s);
  return a;
}

struct SpectrumOptions {
  double theta = 0.0;
  int n_max = 10;
  std::string format = "json";
};

int cmd_spectrum(const SpectrumOptions& o, std::ostream& out) {
  const auto p = ExtensionParameter::make(o.theta);
  const SpectrumTable tab = spectrum(p, o.n_max);
  const double v = p.v();
  auto residual = [&](double lam) { return p.is_H() ? 0.0 : std::abs(G(lam) - v); };
  auto lo_of = [](const SpectrumEntry& e) { return e.n == 0 ? -HUGE_VAL : e.lo; };
  if (o.format == "csv") {
    write_csv_row(out, {"n", "lambda", "lo", "hi", "residual"});
    for (const auto& e : tab.entries)
      write_csv_row(out, {std::to_string(e.n), fmt_num(e.lambda), fmt_num(lo_of(e)), fmt_num(e.hi),
                          fmt_num(residual(e.lambda))});
    return kOk;
  }
  json j;
  j["theta"] = num(o.theta);
  j["n_max"] = o.n_max;
  j["entries"] = json::array();
  for (const auto& e : tab.entries)
    j["entries"].push_back({{"n", e.n},
                            {"lambda", num(e.lambda)},
                            {"lo", num(lo_of(e))},
                            {"hi", num(e.hi)},
                            {"residual", num(residual(e.lambda))}});
  j["residual_bound"] = num(tab.residual_bound);
  write_json(out, j);
  return kOk;
}

struct KernelOptions {
  std::vector<std::string> points;
  std::string format = "json";
};

int cmd_kernel(const KernelOptions& o, std::ostream& out) {
  const BoundarySet F = parse_points(o.points);
  const GramKernel g = gram(F);
  const auto [lu, prod] = vandermonde_det(F);
  const Eigen::Index m = g.Z.rows();
  if (o.format == "csv") {
    write_csv_row(out, {"quantity", "i", "j", "re", "im"});
    for (Eigen::Index a = 0; a < m; ++a)
      for (Eigen::Index b = 0; b < m; ++b)
        write_csv_row(out, {"Z", std::to_string(a), std::to_string(b), fmt_num(g.Z(a, b).real()),
                            fmt_num(g.Z(a, b).imag())});
    for (Eigen::Index a = 0; a < m; ++a)
      write_csv_row(out, {"eigenvalue", std::to_string(a), "", fmt_num(g.eigenvalues[a]), ""});
    write_csv_row(out, {"vandermonde_lu", "", "", fmt_num(lu), ""});
    write_csv_row(out, {"vandermonde_product", "", "", fmt_num(prod), ""});
    return kOk;
  }
  json j;
  j["angles"] = angles_json(o.points);
  j["Z"] = matrix_to_json(g.Z);
  j["eigenvalues"] = json::array();
  for (Eigen::Index a = 0; a < m; ++a) j["eigenvalues"].push_back(num(g.eigenvalues[a]));
  j["eigenvectors"] = matrix_to_json(g.eigenvectors);
  j["vandermonde"] = {{"lu", num(lu)}, {"product", num(prod)}};
  write_json(out, j);
  return kOk;
}

struct ExtensionOptions {
  std::vector<std::string> points;
  std::string matrix_file;
  int n_max = 5;
  std::string strategy = "count";
  std::string format = "json";
};

int cmd_extension(const ExtensionOptions& o, std::ostream& out, std::ostream& err) {
  std::ifstream in(o.matrix_file);
  if (!in) throw UsageError("cannot open matrix file " + o.matrix_file);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(std::string("matrix file: ") + e.what());
  }
  MatrixFile mf = matrix_file_from_json(doc);
  std::vector<std::string> pts = o.points.empty() ? mf.angles : o.points;
  if (pts.empty()) throw UsageError("no boundary set: pass --points or list angles in the matrix file");
  const BoundarySet F = parse_points(pts);
  if (static_cast<std::size_t>(mf.M.rows()) != F.m() || mf.M.cols() != mf.M.rows())
    throw UsageError("matrix is not m x m for the given boundary set");
  const GramKernel g = gram(F);
  const IsometryMatrix iso = is_in_GF(mf.M, g);
  if (!iso.accepted) {
    err << "M is not in G(F): defect " << fmt_num(iso.defect) << " > " << fmt_num(kGroupTol) << "\n";
    return kGroup;
  }
  const PsiStrategy strategy = o.strategy == "scan" ? PsiStrategy::determinant_scan : PsiStrategy::hermitian_count;
  const ExtensionSpectrum es = extension_spectrum(g, mf.M, o.n_max, strategy);
  auto lo_of = [](const ExtensionEntry& e) { return e.cell == 0 && !e.integer ? -HUGE_VAL : e.lo; };
  if (o.format == "csv") {
    write_csv_row(out, {"cell", "lambda", "lo", "hi", "integer", "residual"});
    for (const auto& e : es.entries)
      write_csv_row(out, {std::to_string(e.cell), fmt_num(e.lambda), fmt_num(lo_of(e)), fmt_num(e.hi),
                          e.integer ? "1" : "0", fmt_num(e.residual)});
    return kOk;
  }
  json j;
  j["angles"] = angles_json(pts);
  j["defect"] = num(iso.defect);
  j["phases"] = json::array();
  for (double ph : es.phases) j["phases"].push_back(num(ph));
  j["entries"] = json::array();
  for (const auto& e : es.entries) {
    json psi = json::array();
    for (Eigen::Index a = 0; a < e.psi.size(); ++a) psi.push_back(cnum(e.psi[a]));
    j["entries"].push_back({{"cell", e.cell},
                            {"lambda", num(e.lambda)},
                            {"lo", num(lo_of(e))},
                            {"hi", num(e.hi)},
                            {"integer", e.integer},
                            {"residual", num(e.residual)},
                            {"psi", psi}});
  }
  write_json(out, j);
  return kOk;
}

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::string format = "json";
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  std::vector<std::string> suites = o.suite == "all" ? suite_names() : std::vector<std::string>{o.suite};
  std::vector<Report> reports;
  bool pass = true;
  for (const auto& s : suites) {
    reports.push_back(verify_suite(s, o.seed));
    pass = pass && reports.back().pass();
  }
  if (o.format == "csv") {
    write_csv_row(out, {"suite", "check", "pass", "value", "bound"});
    for (const auto& r : reports)
      for (const auto& c : r.checks) {
        std::string name = c.name;
        std::replace(name.begin(), name.end(), ',', ';');
        write_csv_row(out, {r.name, name, c.pass ? "1" : "0", fmt_num(c.value), fmt_num(c.bound)});
      }
  } else {
    json j;
    j["suite"] = o.suite;
    j["seed"] = o.seed;
    j["pass"] = pass;
    j["reports"] = json::array();
    for (const auto& r : reports) j["reports"].push_back(report_to_json(r));
    write_json(out, j);
  }
  return pass ? kOk : kNumeric;
}

struct PlotOptions {
  std::string kind;
  std::optional<double> from, to;
  int samples = 1000;
  int n_max = 4;
  std::string function_file;
  std::string format = "csv";
};

int cmd_plotdata(const PlotOptions& o, std::ostream& out) {
  double a = 0.0, b = 1.0;
  if (o.kind == "G") a = -3.0, b = 5.0;
  if (o.kind == "lambda_vs_theta") a = -kPi, b = kPi;
  if (o.kind == "projection_norm") a = -3.0, b = 3.0;
  a = o.from.value_or(a);
  b = o.to.value_or(b);
  if (!(b > a)) throw UsageError("plotdata: need from < to");

  HardyFunction f;
  if (o.kind == "boundary") {
    if (o.function_file.empty()) throw UsageError("plotdata --kind boundary needs --function");
    std::ifstream in(o.function_file);
    if (!in) throw UsageError("cannot open function file " + o.function_file);
    try {
      f = hardy_from_json(json::parse(in));
    } catch (const json::exception& e) {
      throw UsageError(std::string("function file: ") + e.what());
    }
  }

  std::vector<std::string> columns{"x"};
  if (o.kind == "G") columns.push_back("G");
  if (o.kind == "projection_norm") columns.push_back("norm");
  if (o.kind == "Z" || o.kind == "rho2" || o.kind == "rho3" || o.kind == "boundary") {
    columns.push_back("re");
    columns.push_back("im");
  }
  if (o.kind == "lambda_vs_theta") {
    columns[0] = "theta";
    for (int n = 0; n <= o.n_max; ++n) columns.push_back("lambda_" + std::to_string(n));
  }

  std::vector<std::vector<double>> rows;
  const double nan = std::nan("");
  for (int k = 0; k < o.samples; ++k) {
    const double x = a + (b - a) * k / (o.samples - 1);
    std::vector<double> row{x};
    try {
      if (o.kind == "G") {
        row.push_back(G(x));
      } else if (o.kind == "projection_norm") {
        row.push_back(projection_norm(x));
      } else if (o.kind == "Z") {
        const cplx z = hurwitz_Z(x);
        row.insert(row.end(), {z.real(), z.imag()});
      } else if (o.kind == "rho2" || o.kind == "rho3") {
        const cplx z = o.kind == "rho2" ? rho2(e2pi(x)) : rho3(e2pi(x));
        row.insert(row.end(), {z.real(), z.imag()});
      } else if (o.kind == "boundary") {
        const cplx z = f(e2pi(x));
        row.insert(row.end(), {z.real(), z.imag()});
      } else {
        const auto p = ExtensionParameter::make(x);
        for (int n = 0; n <= o.n_max; ++n) row.push_back(eigenvalue(p, n));
      }
    } catch (const PoleError&) {
      row.resize(1);
    } catch (const DomainError&) {
      if (o.kind != "lambda_vs_theta") throw;
      row.resize(1);
    }
    row.resize(columns.size(), nan);
    for (double& v : row)
      if (!std::isfinite(v)) v = nan;
    rows.push_back(std::move(row));
  }

  if (o.format == "json") {
    json j;
    j["kind"] = o.kind;
    j["columns"] = columns;
    j["rows"] = json::array();
    for (const auto& r : rows) {
      json jr = json::array();
      for (double v : r) jr.push_back(num(v));
      j["rows"].push_back(jr);
    }
    write_json(out, j);
    return kOk;
  }
  write_csv_row(out, columns);
  for (const auto& r : rows) {
    std::vector<std::string> cells;
    for (double v : r) cells.push_back(fmt_num(v));
    write_csv_row(out, cells);
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  try {
    args = apply_config(raw_args);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  CLI::App app{"Spectral theory of selfadjoint extensions of z d/dz on the Hardy space", "extspec"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "csv"};

  SpectrumOptions so;
  auto* sp = app.add_subcommand("spectrum", "eigenvalues of the extension H_zeta, zeta = e^{i theta}");
  sp->add_option("--theta", so.theta, "extension parameter in (-pi, pi]")->required();
  sp->add_option("--n-max", so.n_max, "largest eigenvalue index")->check(CLI::NonNegativeNumber);
  sp->add_option("--format", so.format)->check(CLI::IsMember(formats));

  KernelOptions ko;
  auto* kp = app.add_subcommand("kernel", "Hurwitz zeta Gram matrix on a boundary set");
  kp->add_option("--points", ko.points, "angles in turns, comma separated (decimal or p/q)")
      ->required()
      ->delimiter(',');
  kp->add_option("--format", ko.format)->check(CLI::IsMember(formats));

  ExtensionOptions eo;
  auto* ep = app.add_subcommand("extension-spectrum", "spectrum of the extension given by M in G(F)");
  ep->add_option("--points", eo.points, "angles in turns; defaults to the matrix file's angles")->delimiter(',');
  ep->add_option("--matrix", eo.matrix_file, "JSON file with the matrix M")->required();
  ep->add_option("--n-max", eo.n_max)->check(CLI::NonNegativeNumber);
  ep->add_option("--strategy", eo.strategy)->check(CLI::IsMember({"count", "scan"}));
  ep->add_option("--format", eo.format)->check(CLI::IsMember(formats));

  VerifyOptions vo;
  auto* vp = app.add_subcommand("verify", "run the invariant suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  vp->add_option("--suite", vo.suite)->check(CLI::IsMember(suites));
  vp->add_option("--seed", vo.seed);
  vp->add_option("--format", vo.format)->check(CLI::IsMember(formats));

  PlotOptions po;
  auto* pp = app.add_subcommand("plotdata", "samples for plotting");
  pp->add_option("--kind", po.kind)
      ->required()
      ->check(CLI::IsMember({"G", "Z", "lambda_vs_theta", "projection_norm", "rho2", "rho3", "boundary"}));
  pp->add_option("--from", po.from);
  pp->add_option("--to", po.to);
  pp->add_option("--samples", po.samples)->check(CLI::Range(2, 10'000'000));
  pp->add_option("--n-max", po.n_max)->check(CLI::NonNegativeNumber);
  pp->add_option("--function", po.function_file, "HardyFunction JSON for --kind boundary");
  pp->add_option("--format", po.format)->check(CLI::IsMember(formats));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (sp->parsed()) return cmd_spectrum(so, out);
    if (kp->parsed()) return cmd_kernel(ko, out);
    if (ep->parsed()) return cmd_extension(eo, out, err);
    if (vp->parsed()) return cmd_verify(vo, out);
    if (pp->parsed()) return cmd_plotdata(po, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DegenerateSetError& e) {
    err << "error: " << e.what() << "\n";
    return kDegenerate;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumeric;
  }
  return kUsage;
}

}  // namespace extspec::cli
