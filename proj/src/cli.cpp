#include "birkpois/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "birkpois/errors.hpp"
#include "birkpois/local.hpp"
#include "birkpois/momentum.hpp"
#include "birkpois/poisson.hpp"
#include "birkpois/strata.hpp"
#include "birkpois/verify.hpp"

namespace bp {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string preset = "cp1";
  double tol = kDefaultTol;
  double fd_step = 1e-5;
  double jacobi_tol = 1e-5;
  std::uint64_t seed = 1;
  std::string grid = "-2,2,41";
  std::string out;
  std::string format = "json";
  std::string matrix;
  std::string input;
  std::string point;
  std::string mode = "birkhoff";
  std::string suite = "all";
  int index = -1;
};

// ---- serialization: complex as [re, im], matrices as row-major nested arrays

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const RMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const SignedPermutation& w) {
  return {{"perm", w.perm}, {"sign", w.sign}, {"identity", w.is_identity()}};
}

Complex parse_complex(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw UsageError("expected a number or a [re, im] pair");
}

bool is_complex_literal(const json& j) {
  return j.is_number() || (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number());
}

CMatrix parse_matrix(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
    throw UsageError("expected a non-empty nested array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw UsageError("ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = parse_complex(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("JSON parse error: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + cfg.out);
  f << text;
}

// ---- chart points

// cp presets: list of complex (vector z) or an n x 1 matrix; gr: n x m matrix;
// group: n x n matrix k.
CMatrix parse_point(const std::string& text, const SymmetricSpace& space) {
  const json j = parse_json_text(text);
  if (space.kind() == SpaceKind::GroupCase) return parse_matrix(j);
  if (is_complex_literal(j)) {
    CMatrix z(1, 1);
    z(0, 0) = parse_complex(j);
    if (space.n() != 1 || space.m() != 1) throw UsageError("point has the wrong shape for " + space.name());
    return z;
  }
  if (!j.is_array() || j.empty()) throw UsageError("point must be a JSON array");
  if (space.m() == 1 && is_complex_literal(j[0]) && !(j[0].is_array() && j[0][0].is_array())) {
    // flat list z_1..z_n; [[re, im], ...] pairs or plain reals
    bool pairs = true;
    for (const auto& e : j) pairs = pairs && is_complex_literal(e);
    if (pairs && static_cast<int>(j.size()) == space.n()) {
      CMatrix z(space.n(), 1);
      for (int i = 0; i < space.n(); ++i) z(i, 0) = parse_complex(j[static_cast<std::size_t>(i)]);
      return z;
    }
  }
  const CMatrix z = parse_matrix(j);
  if (z.rows() != space.n() || z.cols() != space.m()) throw UsageError("point has the wrong shape for " + space.name());
  return z;
}

CMatrix point_to_u(const CMatrix& z, const SymmetricSpace& space) {
  if (space.kind() == SpaceKind::GroupCase && !is_unitary(z, 1e-8)) throw UsageError("group point must be unitary");
  return canonical_rep(z, space);
}

double min_abs_minor(const CMatrix& g) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& x : principal_minors(g)) m = std::min(m, std::abs(x));
  return m;
}

json minors_json(const CMatrix& g) {
  json a = json::array();
  for (const auto& x : principal_minors(g)) a.push_back(to_json(x));
  return a;
}

// ---- subcommands

int cmd_factor(const RunConfig& cfg, std::ostream& out) {
  std::string text = cfg.matrix;
  if (!cfg.input.empty()) text = read_file(cfg.input);
  if (text.empty()) throw UsageError("factor needs --matrix or --input");
  const CMatrix g = parse_matrix(parse_json_text(text));
  if (g.rows() != g.cols()) throw UsageError("matrix must be square");
  json r;
  r["mode"] = cfg.mode;
  r["input"] = to_json(g);
  if (cfg.mode == "birkhoff") {
    const auto f = birkhoff_factor(g, cfg.tol);
    r["l"] = to_json(f.l);
    r["w"] = to_json(f.w);
    r["w_matrix"] = to_json(f.w.matrix());
    r["h"] = to_json(f.h);
    r["u_plus"] = to_json(f.u_plus);
    r["residual"] = (f.reconstruct() - g).norm();
  } else if (cfg.mode == "iwasawa") {
    const auto f = iwasawa_factor(g, cfg.tol);
    r["l"] = to_json(f.l);
    r["a"] = to_json(f.a);
    r["u"] = to_json(f.u);
    r["residual"] = (f.reconstruct() - g).norm();
  } else {
    throw UsageError("--mode must be birkhoff or iwasawa");
  }
  emit(cfg, r.dump(2) + "\n", out);
  return kExitOk;
}

int cmd_embed(const RunConfig& cfg, std::ostream& out) {
  const auto space = SymmetricSpace::parse(cfg.preset);
  if (cfg.point.empty()) throw UsageError("embed needs --point");
  const CMatrix z = parse_point(cfg.point, space);
  const CMatrix u = point_to_u(z, space);
  const CMatrix phi = cartan_embed(u, space);
  json r;
  r["preset"] = space.name();
  r["point"] = to_json(z);
  r["u"] = to_json(u);
  r["phi"] = to_json(phi);
  r["principal_minors"] = minors_json(phi);
  r["layer"] = to_json(birkhoff_layer(u, space, cfg.tol));
  emit(cfg, r.dump(2) + "\n", out);
  return kExitOk;
}

int cmd_pi(const RunConfig& cfg, std::ostream& out) {
  const auto space = SymmetricSpace::parse(cfg.preset);
  if (cfg.point.empty()) throw UsageError("pi needs --point");
  const CMatrix z = parse_point(cfg.point, space);
  const CMatrix u = point_to_u(z, space);
  const auto op = bivector_operator(u, space);
  json r;
  r["preset"] = space.name();
  r["point"] = to_json(z);
  r["dim_ip"] = space.dim_ip();
  r["omega"] = to_json(op.omega);
  r["rank"] = numerical_rank(op.omega, cfg.tol);
  if (space.kind() == SpaceKind::Grassmannian) {
    const auto b = grassmann_bivector(space.m(), space.n());
    r["local_tensor"] = to_json(b.tensor(pack_complex(z)));
  } else if (space.n() == 2) {
    const CMatrix k = group_iso(from_block(u).first, from_block(u).second);
    const auto c = su2_coefficients(k, Su2Structure::EvensLu, Frame::Right);
    r["su2_evens_lu"] = {{"XY", c.xy}, {"YH", c.yh}, {"HX", c.hx}};
  }
  emit(cfg, r.dump(2) + "\n", out);
  return kExitOk;
}

struct Axis {
  double lo;
  double hi;
  int steps;
  double at(int i) const { return lo + (i + 0.5) * (hi - lo) / steps; }
};

std::vector<Axis> parse_grid(const std::string& text, int naxes) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      v.push_back(std::stod(tok, &pos));
      if (pos != tok.size()) throw UsageError("bad --grid value '" + tok + "'");
    } catch (const std::logic_error&) {
      throw UsageError("bad --grid value '" + tok + "'");
    }
  }
  if (v.empty() || v.size() % 3 != 0) throw UsageError("--grid needs min,max,steps triples");
  std::vector<Axis> axes;
  for (std::size_t i = 0; i < v.size(); i += 3) {
    const Axis a{v[i], v[i + 1], static_cast<int>(v[i + 2])};
    if (!(a.lo < a.hi) || a.steps < 2 || static_cast<double>(a.steps) != v[i + 2])
      throw UsageError("--grid needs min < max and integer steps >= 2");
    axes.push_back(a);
  }
  while (static_cast<int>(axes.size()) < naxes) axes.push_back(axes.back());
  if (static_cast<int>(axes.size()) != naxes) throw UsageError("--grid has too many axes");
  return axes;
}

int thread_count() {
  int n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("BP_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, cap);
  }
  return n;
}

// One grid cell: coordinates, rank (-1 when the layer is ambiguous), then extra columns.
using Row = std::vector<double>;

Row grid_cell(const std::string& preset, double x, double y, double tol) {
  constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
  if (preset == "fothlu") {
    const double c = std::abs(fothlu_w_chart(Complex(x, y)));
    return {x, y, c > tol ? 2.0 : 0.0, c};
  }
  if (preset == "su2" || preset == "group:su2") {
    // k = [[t e^{i y}, sqrt(1 - t^2)], [-sqrt(1 - t^2), t e^{-i y}]] with t = x
    if (x < 0.0 || x > 1.0) return {x, y, -1.0, kNan};
    const Complex a = std::polar(x, y);
    const double b = std::sqrt(1.0 - x * x);
    CMatrix k(2, 2);
    k << a, b, -b, std::conj(a);
    const auto c = su2_coefficients(k, Su2Structure::EvensLu, Frame::Right);
    RMatrix p(3, 3);
    p << 0.0, c.xy, -c.hx, -c.xy, 0.0, c.yh, c.hx, -c.yh, 0.0;
    return {x, y, static_cast<double>(numerical_rank(p, tol)), p.cwiseAbs().maxCoeff()};
  }
  const auto space = SymmetricSpace::parse(preset);
  CMatrix z = CMatrix::Zero(space.n(), space.m());
  if (std::min(space.m(), space.n()) >= 2) {
    z(0, 0) = x;
    z(1, 1) = y;
  } else if (preset == "cp2") {
    z(0, 0) = x;
    z(1, 0) = y;
  } else {
    z(0, 0) = Complex(x, y);
  }
  const CMatrix u = canonical_rep(z, space);
  const CMatrix phi = cartan_embed(u, space);
  Row row{x, y, -1.0, min_abs_minor(phi)};
  if (preset == "cp1") row.push_back(std::abs(cp1_family(z(0, 0)).pi));
  if (preset == "cp2") row.push_back(std::abs(cp2_p(z(0, 0), z(1, 0))));
  try {
    (void)birkhoff_layer(u, space, tol);
  } catch (const DomainError& e) {
    if (e.kind() != ErrorKind::StratumAmbiguous) throw;
    return row;
  }
  row[2] = static_cast<double>(pi_rank(u, space, tol));
  return row;
}

std::vector<std::string> grid_header(const std::string& preset) {
  if (preset == "fothlu") return {"re_w", "im_w", "rank", "abs_coeff"};
  if (preset == "su2" || preset == "group:su2") return {"abs_a", "arg_a", "rank", "max_abs_coeff"};
  if (preset == "cp1") return {"re_z", "im_z", "rank", "min_abs_minor", "abs_coeff"};
  if (preset == "cp2") return {"abs_z1", "abs_z2", "rank", "min_abs_minor", "abs_p"};
  const auto space = SymmetricSpace::parse(preset);
  if (std::min(space.m(), space.n()) >= 2) return {"z11", "z22", "rank", "min_abs_minor"};
  return {"re_z1", "im_z1", "rank", "min_abs_minor"};
}

std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int cmd_rank_grid(const RunConfig& cfg, std::ostream& out) {
  std::string preset = cfg.preset;
  if (preset != "fothlu" && preset != "su2" && preset != "group:su2") {
    const auto space = SymmetricSpace::parse(preset);
    if (space.kind() != SpaceKind::Grassmannian) throw UsageError("rank-grid does not support " + preset);
    preset = space.name();
  }
  if (cfg.format != "json" && cfg.format != "csv") throw UsageError("--format must be json or csv");
  const auto axes = parse_grid(cfg.grid, 2);
  const int nx = axes[0].steps;
  const int ny = axes[1].steps;
  std::vector<Row> rows(static_cast<std::size_t>(nx) * ny);
  std::vector<std::string> failures(rows.size());
  const int nthreads = std::min<int>(thread_count(), static_cast<int>(rows.size()));
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t c = static_cast<std::size_t>(t); c < rows.size(); c += static_cast<std::size_t>(nthreads)) {
        const int i = static_cast<int>(c) / ny;
        const int j = static_cast<int>(c) % ny;
        try {
          rows[c] = grid_cell(preset, axes[0].at(i), axes[1].at(j), cfg.tol);
        } catch (const std::exception& e) {
          failures[c] = e.what();
        }
      }
    });
  for (auto& th : pool) th.join();
  for (const auto& f : failures)
    if (!f.empty()) throw DomainError(ErrorKind::InvalidArgument, f);

  const auto header = grid_header(preset);
  std::ostringstream os;
  if (cfg.format == "csv") {
    for (std::size_t k = 0; k < header.size(); ++k) os << (k ? "," : "") << header[k];
    os << "\n";
    for (const auto& r : rows) {
      for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << fmt17(r[k]);
      os << "\n";
    }
  } else {
    json j;
    j["preset"] = preset;
    j["columns"] = header;
    json data = json::array();
    for (const auto& r : rows) {
      json row = json::array();
      for (const double v : r) row.push_back(std::isnan(v) ? json(nullptr) : json(v));
      data.push_back(row);
    }
    j["rows"] = data;
    os << j.dump(1) << "\n";
  }
  emit(cfg, os.str(), out);
  return kExitOk;
}

int cmd_moment(const RunConfig& cfg, std::ostream& out) {
  const auto space = SymmetricSpace::parse(cfg.preset);
  if (cfg.point.empty()) throw UsageError("moment needs --point");
  const CMatrix z = parse_point(cfg.point, space);
  const CMatrix u = point_to_u(z, space);
  const auto mv = moment_values(u, space, cfg.tol);
  if (mv.basis.empty())
    throw DomainError(ErrorKind::TrivialTorus, "t_w is trivial on layer " + mv.w.to_string() + "; nothing to evaluate");
  if (cfg.index >= static_cast<int>(mv.basis.size()))
    throw UsageError("--index out of range (t_w has dimension " + std::to_string(mv.basis.size()) + ")");
  json r;
  r["preset"] = space.name();
  r["point"] = to_json(z);
  r["layer"] = to_json(mv.w);
  r["tw_dim"] = mv.basis.size();
  json basis = json::array();
  for (const auto& b : mv.basis) basis.push_back(to_json(b));
  r["tw_basis"] = basis;
  r["values"] = mv.values;
  if (cfg.index >= 0) r["value"] = mv.values[static_cast<std::size_t>(cfg.index)];
  emit(cfg, r.dump(2) + "\n", out);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const bool known = cfg.suite == "all" || std::find(suite_names().begin(), suite_names().end(), cfg.suite) !=
                                               suite_names().end();
  if (!known) throw UsageError("unknown suite '" + cfg.suite + "'");
  VerifyConfig vc;
  vc.seed = cfg.seed;
  vc.tol = cfg.tol;
  vc.fd_step = cfg.fd_step;
  vc.jacobi_tol = cfg.jacobi_tol;
  const auto reports = run_suites(cfg.suite, vc);
  emit(cfg, report_json(reports, vc), out);
  for (const auto& r : reports)
    if (!r.pass()) return kExitVerifyFailed;
  return kExitOk;
}

CoordBivector bivector_for(const std::string& preset) {
  if (preset == "cp1") return cp1_bivector();
  if (preset == "fothlu") return fothlu_bivector();
  if (preset == "cp2_omega") return cp2_omega_bivector();
  if (preset == "su2" || preset == "group:su2") return su2_bivector(CMatrix::Identity(2, 2));
  const auto space = SymmetricSpace::parse(preset);
  if (space.kind() != SpaceKind::Grassmannian) throw UsageError("jacobi does not support " + preset);
  if (space.m() == 1) return cpn_bivector(space.n());
  return grassmann_bivector(space.m(), space.n());
}

int cmd_jacobi(const RunConfig& cfg, std::ostream& out) {
  const auto b = bivector_for(cfg.preset);
  if (cfg.point.empty()) throw UsageError("jacobi needs --point (a list of real chart coordinates)");
  const json j = parse_json_text(cfg.point);
  if (!j.is_array() || static_cast<int>(j.size()) != b.dim)
    throw UsageError("--point must list " + std::to_string(b.dim) + " real coordinates");
  RVector x(b.dim);
  for (int i = 0; i < b.dim; ++i) {
    if (!j[static_cast<std::size_t>(i)].is_number()) throw UsageError("coordinates must be real numbers");
    x(i) = j[static_cast<std::size_t>(i)].get<double>();
  }
  json r;
  r["bivector"] = b.name;
  r["point"] = j;
  r["fd_step"] = cfg.fd_step;
  r["residual"] = jacobi_residual(b, x, cfg.fd_step);
  r["tensor"] = to_json(b.tensor(x));
  emit(cfg, r.dump(2) + "\n", out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"bp: Poisson geometry of compact symmetric spaces by triangular factorization", "bp"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--tol", cfg.tol, "rank / stratum threshold")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "output path (default stdout)");
  };
  const auto with_preset = [&](CLI::App* sub) {
    sub->add_option("--preset", cfg.preset, "gr:m,n | cp1 | cpn:n | cp2 | su2 | group:su2 | fothlu");
  };

  auto* factor = app.add_subcommand("factor", "Birkhoff or Iwasawa factorization of a matrix");
  common(factor);
  factor->add_option("--mode", cfg.mode, "birkhoff | iwasawa");
  factor->add_option("--matrix", cfg.matrix, "JSON nested array of [re, im] entries");
  factor->add_option("--input", cfg.input, "file holding the JSON matrix");

  auto* iwasawa = app.add_subcommand("iwasawa", "Iwasawa factorization (factor --mode iwasawa)");
  common(iwasawa);
  iwasawa->add_option("--matrix", cfg.matrix, "JSON nested array of [re, im] entries");
  iwasawa->add_option("--input", cfg.input, "file holding the JSON matrix");

  auto* embed = app.add_subcommand("embed", "canonical representative, Cartan image and layer of a chart point");
  common(embed);
  with_preset(embed);
  embed->add_option("--point", cfg.point, "chart point as JSON");

  auto* pi = app.add_subcommand("pi", "bivector at a chart point");
  common(pi);
  with_preset(pi);
  pi->add_option("--point", cfg.point, "chart point as JSON");

  auto* grid = app.add_subcommand("rank-grid", "rank of the bivector over a grid of chart points");
  common(grid);
  with_preset(grid);
  grid->add_option("--grid", cfg.grid, "min,max,steps[,min,max,steps]");
  grid->add_option("--format", cfg.format, "json | csv");

  auto* moment = app.add_subcommand("moment", "momentum map on the torus of the layer");
  common(moment);
  with_preset(moment);
  moment->add_option("--point", cfg.point, "chart point as JSON");
  moment->add_option("--index", cfg.index, "basis index of t_w to report");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  common(verify);
  verify->add_option("suite", cfg.suite, "suite name or all");
  verify->add_option("--seed", cfg.seed, "random seed");
  verify->add_option("--fd-step", cfg.fd_step, "finite-difference step")->check(CLI::PositiveNumber);
  verify->add_option("--jacobi-tol", cfg.jacobi_tol, "Jacobi residual bound")->check(CLI::PositiveNumber);

  auto* jacobi = app.add_subcommand("jacobi", "Schouten bracket residual of a coordinate bivector");
  common(jacobi);
  jacobi->add_option("--preset", cfg.preset, "cp1 | cpn:n | cp2 | gr:m,n | su2 | fothlu | cp2_omega");
  jacobi->add_option("--point", cfg.point, "JSON list of real coordinates");
  jacobi->add_option("--fd-step", cfg.fd_step, "finite-difference step")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*factor) return cmd_factor(cfg, out);
    if (*iwasawa) {
      cfg.mode = "iwasawa";
      return cmd_factor(cfg, out);
    }
    if (*embed) return cmd_embed(cfg, out);
    if (*pi) return cmd_pi(cfg, out);
    if (*grid) return cmd_rank_grid(cfg, out);
    if (*moment) return cmd_moment(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*jacobi) return cmd_jacobi(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidArgument ? kExitUsage : kExitDomain;
  }
  return kExitUsage;
}

}  // namespace bp
