#include "birkpois/verify.hpp"

#include <boost/rational.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include <json.hpp>

#include "birkpois/errors.hpp"
#include "birkpois/lie.hpp"
#include "birkpois/local.hpp"
#include "birkpois/momentum.hpp"
#include "birkpois/poisson.hpp"
#include "birkpois/sampling.hpp"
#include "birkpois/strata.hpp"

namespace bp {

bool SuiteReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"factorization", "embedding",       "bivector",   "local-vs-equivariant",
                                                 "jacobi",        "lambda-identity", "degeneracy", "momentum"};
  return names;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const Complex kI(0.0, 1.0);

// Worst value of f over the samples; an exception or NaN counts as +inf.
template <class F>
void record(SuiteReport& rep, std::string name, double bound, int samples, F&& f) {
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    double v = kInf;
    try {
      v = f(i);
    } catch (const std::exception&) {
      v = kInf;
    }
    if (std::isnan(v)) v = kInf;
    worst = std::max(worst, v);
  }
  rep.checks.push_back({std::move(name), worst, bound, samples, worst <= bound});
}

CMatrix point1(Complex z) { return CMatrix::Constant(1, 1, z); }

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

double min_abs_minor(const CMatrix& phi) {
  double m = kInf;
  for (const auto& x : principal_minors(phi)) m = std::min(m, std::abs(x));
  return m;
}

// Graph-chart point whose Cartan image stays away from the lower layers.
CMatrix top_layer_point(Sampler& s, const SymmetricSpace& space, double sigma, double margin) {
  for (;;) {
    const CMatrix z = s.chart_point(space, sigma);
    if (min_abs_minor(cartan_embed(canonical_rep(z, space), space)) >= margin) return z;
  }
}

CMatrix random_ip(Sampler& s, const SymmetricSpace& space) {
  RVector c(space.dim_ip());
  for (int i = 0; i < c.size(); ++i) c(i) = s.normal();
  return space.from_ip_coords(c);
}

CMatrix su2_from(Complex a, Complex b) {
  CMatrix k(2, 2);
  k << a, b, -std::conj(b), std::conj(a);
  return k;
}

std::pair<Complex, Complex> unit_sphere_pair(Sampler& s) {
  RVector v(4);
  for (int i = 0; i < 4; ++i) v(i) = s.normal();
  v.normalize();
  return {Complex(v(0), v(1)), Complex(v(2), v(3))};
}

double max_coeff_diff(const Su2Coefficients& x, const Su2Coefficients& y) {
  return std::max({std::abs(x.xy - y.xy), std::abs(x.yh - y.yh), std::abs(x.hx - y.hx)});
}

double max_abs_coeff(const Su2Coefficients& x) { return std::max({std::abs(x.xy), std::abs(x.yh), std::abs(x.hx)}); }

const std::vector<std::string> kPresets = {"cp1", "cp2", "gr:1,2", "gr:2,2", "group:su2"};

SuiteReport suite_factorization(const VerifyConfig& cfg) {
  SuiteReport rep{"factorization", {}, {}};
  Sampler s(cfg.seed);
  for (const int n : {2, 3, 4, 6}) {
    const std::string tag = "_n" + std::to_string(n);
    record(rep, "birkhoff_residual" + tag, 1e-10, 1000, [&](int) {
      const CMatrix g = s.random_sl(n);
      return (birkhoff_factor(g, cfg.tol).reconstruct() - g).norm() / g.norm();
    });
    record(rep, "iwasawa_residual" + tag, 1e-10, 1000, [&](int) {
      const CMatrix g = s.random_sl(n);
      return (iwasawa_factor(g, cfg.tol).reconstruct() - g).norm() / g.norm();
    });
    record(rep, "iwasawa_refactor" + tag, 1e-10, 1000, [&](int) {
      const CMatrix g = s.random_sl(n);
      const auto f = iwasawa_factor(g, cfg.tol);
      const auto f2 = iwasawa_factor(f.reconstruct(), cfg.tol);
      return std::max({(f2.l - f.l).cwiseAbs().maxCoeff(), (f2.a - f.a).cwiseAbs().maxCoeff(),
                       (f2.u - f.u).cwiseAbs().maxCoeff()});
    });
    record(rep, "iwasawa_unitary_fixed" + tag, 1e-10, 200, [&](int) {
      const CMatrix g = s.random_su(n);
      const auto f = iwasawa_factor(g, cfg.tol);
      const CMatrix id = CMatrix::Identity(n, n);
      return std::max({(f.l - id).norm(), (f.a - id).norm(), (f.u - g).norm()});
    });
  }
  return rep;
}

SuiteReport suite_embedding(const VerifyConfig& cfg) {
  SuiteReport rep{"embedding", {}, {}};
  Sampler s(cfg.seed);
  for (const auto& name : kPresets) {
    const auto space = SymmetricSpace::parse(name);
    const auto id = CMatrix::Identity(space.dim(), space.dim());
    record(rep, "phi_symmetry_" + name, 1e-10, 1000, [&](int) {
      const CMatrix phi = cartan_embed(s.random_u(space), space);
      return (phi.adjoint() - space.theta(phi)).norm();
    });
    record(rep, "phi_unitary_" + name, 1e-10, 1000, [&](int) {
      const CMatrix phi = cartan_embed(s.random_u(space), space);
      return (phi * phi.adjoint() - id).norm();
    });
    record(rep, "coset_invariance_" + name, 1e-10, 200, [&](int) {
      const CMatrix u = s.random_u(space);
      return (cartan_embed(u * s.random_k(space), space) - cartan_embed(u, space)).norm();
    });
  }
  return rep;
}

SuiteReport suite_bivector(const VerifyConfig& cfg) {
  SuiteReport rep{"bivector", {}, {}};
  Sampler s(cfg.seed);
  for (const auto& name : kPresets) {
    const auto space = SymmetricSpace::parse(name);
    record(rep, "antisymmetry_" + name, 1e-10, 200, [&](int) {
      const CMatrix u = s.random_u(space);
      const CMatrix x = random_ip(s, space);
      const CMatrix y = random_ip(s, space);
      return std::abs(pi_eval(u, x, y, space) + pi_eval(u, y, x, space));
    });
    record(rep, "k_equivariance_" + name, 1e-10, 200, [&](int) {
      const CMatrix u = s.random_u(space);
      const CMatrix k = s.random_k(space);
      const CMatrix x = random_ip(s, space);
      const CMatrix lhs = omega_apply(u * k, k.adjoint() * x * k, space);
      const CMatrix rhs = k.adjoint() * omega_apply(u, x, space) * k;
      return (lhs - rhs).norm();
    });
    record(rep, "leaf_tangency_" + name, 1e-8, 100, [&](int) {
      const CMatrix u = s.random_u(space);
      return max_principal_angle(bivector_operator(u, space).omega, leaf_generators(u, space), 1e-7);
    });
  }
  for (const auto& name : {"cp1", "cp2", "gr:2,2"}) {
    const auto space = SymmetricSpace::parse(name);
    record(rep, std::string("leaf_rank_top_") + name, 0.0, 100, [&](int) {
      const CMatrix z = top_layer_point(s, space, 0.6, 0.05);
      return pi_rank(canonical_rep(z, space), space, cfg.tol) == space.dim_ip() ? 0.0 : 1.0;
    });
  }
  {
    const auto cp1 = SymmetricSpace::projective(1);
    record(rep, "leaf_tangency_boundary_cp1", 1e-8, 20, [&](int) {
      const CMatrix z = point1(std::polar(1.0, s.uniform(0.0, 2.0 * std::numbers::pi)));
      const CMatrix u = canonical_rep(z, cp1);
      return max_principal_angle(bivector_operator(u, cp1).omega, leaf_generators(u, cp1), 1e-7);
    });
    const auto cp2 = SymmetricSpace::projective(2);
    record(rep, "leaf_tangency_boundary_cp2", 1e-8, 20, [&](int) {
      CMatrix z = s.chart_point(cp2, 1.0);
      z /= z.norm();
      const CMatrix u = canonical_rep(z, cp2);
      return max_principal_angle(bivector_operator(u, cp2).omega, leaf_generators(u, cp2), 1e-7);
    });
  }
  record(rep, "su2_evens_lu_right_frame", 1e-12, 200, [&](int) {
    const auto [a, b] = unit_sphere_pair(s);
    return max_coeff_diff(su2_coefficients(su2_from(a, b), Su2Structure::EvensLu, Frame::Right),
                          su2_closed_form(a, b, Su2Structure::EvensLu));
  });
  record(rep, "su2_lu_weinstein_left_frame", 1e-12, 200, [&](int) {
    const auto [a, b] = unit_sphere_pair(s);
    return max_coeff_diff(su2_coefficients(su2_from(a, b), Su2Structure::LuWeinstein, Frame::Left),
                          su2_closed_form(a, b, Su2Structure::LuWeinstein));
  });
  record(rep, "su2_lu_weinstein_torus_zero", 1e-12, 200, [&](int) {
    const Complex a = std::polar(1.0, s.uniform(0.0, 2.0 * std::numbers::pi));
    const CMatrix k = su2_from(a, 0.0);
    return std::max(max_abs_coeff(su2_coefficients(k, Su2Structure::LuWeinstein, Frame::Right)),
                    max_abs_coeff(su2_coefficients(k, Su2Structure::LuWeinstein, Frame::Left)));
  });
  {
    // pushforward of the equivariant structure on U/Delta through psi(k1, k2) = k1 k2^{-1}
    const auto grp = SymmetricSpace::group_case(2);
    const auto pushed = [&](const CMatrix& k1, const CMatrix& k2, const CMatrix& p, const CMatrix& q) {
      const CMatrix u = to_block({k1, k2});
      const auto lift = [&](const CMatrix& c) {
        const CMatrix a = k1.adjoint() * c * k1;
        return to_block({a, -a});
      };
      return pi_eval(u, lift(p), lift(q), grp);
    };
    const auto basis = su2_basis();
    const CMatrix k1r = su2_from(Complex(0.6, 0.3), Complex(0.5, -std::sqrt(1.0 - 0.36 - 0.09 - 0.25)));
    const CMatrix k2r = CMatrix::Identity(2, 2);
    const double cgrp = pi_EL_group(k1r, basis[0], basis[1]) / pushed(k1r, k2r, basis[0], basis[1]);
    rep.measured.emplace_back("group_pushforward_constant", cgrp);
    record(rep, "group_pushforward_agreement", 1e-9, 100, [&](int) {
      const CMatrix k1 = s.random_su(2);
      const CMatrix k2 = s.random_su(2);
      const CMatrix k = group_iso(k1, k2);
      double worst = 0.0;
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
          const auto& p = basis[static_cast<std::size_t>(a)];
          const auto& q = basis[static_cast<std::size_t>(b)];
          worst = std::max(worst, std::abs(pi_EL_group(k, p, q) - cgrp * pushed(k1, k2, p, q)));
        }
      return worst;
    });
  }
  return rep;
}

SuiteReport suite_local(const VerifyConfig& cfg) {
  SuiteReport rep{"local-vs-equivariant", {}, {}};
  Sampler s(cfg.seed);
  for (const auto& [m, n] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
    const auto space = SymmetricSpace::grassmannian(m, n);
    const std::string tag = "_gr" + std::to_string(m) + std::to_string(n);
    const double c = calibration_constant(space);
    rep.measured.emplace_back("calibration_constant" + tag, c);
    record(rep, "relative_agreement" + tag, 1e-8, 100, [&](int) {
      const CMatrix z = s.chart_point(space, 0.5);
      const CMatrix v = s.gaussian(m, n);
      const CMatrix w = s.gaussian(m, n);
      return rel_diff(grassmann_local_pi(z, v, w), c * grassmann_equivariant_pi(z, v, w, space));
    });
  }
  for (const int n : {1, 2, 3}) {
    const auto cpn = cpn_bivector(n);
    const auto gr = grassmann_bivector(1, n);
    record(rep, "cpn_matches_grassmann_n" + std::to_string(n), 1e-12, 100, [&](int) {
      RVector x(2 * n);
      for (int i = 0; i < x.size(); ++i) x(i) = s.normal(0.5);
      return (cpn.tensor(x) - gr.tensor(x)).cwiseAbs().maxCoeff();
    });
  }
  return rep;
}

SuiteReport suite_jacobi(const VerifyConfig& cfg) {
  SuiteReport rep{"jacobi", {}, {}};
  Sampler s(cfg.seed);
  const auto run = [&](const CoordBivector& b, int samples, double sigma) {
    record(rep, "jacobi_" + b.name, cfg.jacobi_tol, samples, [&](int) {
      RVector x(b.dim);
      for (int i = 0; i < b.dim; ++i) x(i) = s.normal(sigma);
      return jacobi_residual(b, x, cfg.fd_step);
    });
  };
  run(cpn_bivector(2), 50, 0.4);
  run(grassmann_bivector(2, 2), 50, 0.4);
  run(cp1_bivector(), 20, 0.5);
  run(fothlu_bivector(), 20, 0.5);
  run(su2_bivector(CMatrix::Identity(2, 2)), 20, 0.5);
  record(rep, "jacobi_cp2_omega", cfg.jacobi_tol, 20, [&](int) {
    RVector x(4);
    do {
      for (int i = 0; i < 4; ++i) x(i) = s.normal(0.4);
    } while (std::abs(cp2_p(Complex(x(0), x(2)), Complex(x(1), x(3)))) < 0.1);
    return jacobi_residual(cp2_omega_bivector(), x, cfg.fd_step);
  });
  return rep;
}

SuiteReport suite_lambda(const VerifyConfig& cfg) {
  SuiteReport rep{"lambda-identity", {}, {}};
  Sampler s(cfg.seed);
  record(rep, "lambda_minus_one_float", 1e-14, 100, [&](int) {
    const auto c = cp1_family(s.cnormal(0.5));
    return std::abs(c.pi - (c.pi_pl - c.pi_kks));
  });
  record(rep, "lambda_minus_one_exact_rational", 0.0, 200, [&](int) {
    using Q = boost::rational<long long>;
    const auto num = static_cast<long long>(s.uniform(0.0, 200.0));
    const auto den = 1 + static_cast<long long>(s.uniform(0.0, 100.0));
    const auto f = cp1_family_poly(Q(num, den));
    return f.el == f.pl - f.kks ? 0.0 : 1.0;
  });
  return rep;
}

SuiteReport suite_degeneracy(const VerifyConfig& cfg) {
  SuiteReport rep{"degeneracy", {}, {}};
  Sampler s(cfg.seed);
  const auto cp1 = SymmetricSpace::projective(1);
  const auto cp2 = SymmetricSpace::projective(2);
  record(rep, "cp2_minor_product_identity", 1e-10, 200, [&](int) {
    const CMatrix z = s.chart_point(cp2, 0.6);
    Complex prod(1.0);
    for (const auto& x : principal_minors(cartan_embed(canonical_rep(z, cp2), cp2))) prod *= x;
    const double nz = z.squaredNorm();
    const double expect = cp2_p(z(0, 0), z(1, 0)) / std::pow(1.0 + nz, 3);
    const double scale = std::max(std::abs(prod), std::abs(expect));
    return scale == 0.0 ? 0.0 : std::abs(prod - expect) / scale;
  });
  record(rep, "cp1_equator_rank_zero", 0.0, 50, [&](int) {
    const CMatrix z = point1(std::polar(1.0, s.uniform(0.0, 2.0 * std::numbers::pi)));
    return pi_rank(canonical_rep(z, cp1), cp1, cfg.tol) == 0 ? 0.0 : 1.0;
  });
  record(rep, "cp1_equator_coefficient", 1e-14, 50, [&](int) {
    return std::abs(cp1_family(std::polar(1.0, s.uniform(0.0, 2.0 * std::numbers::pi))).pi);
  });
  record(rep, "cp1_rank_off_equator", 0.0, 50, [&](int) {
    Complex z;
    do z = s.cnormal(0.8);
    while (std::abs(std::abs(z) - 1.0) < 0.05);
    return pi_rank(canonical_rep(point1(z), cp1), cp1, cfg.tol) == 2 ? 0.0 : 1.0;
  });
  record(rep, "cp2_rank_drop_unit_sphere", 0.0, 50, [&](int) {
    CMatrix z = s.chart_point(cp2, 1.0);
    z /= z.norm();
    return pi_rank(canonical_rep(z, cp2), cp2, cfg.tol) < 4 ? 0.0 : 1.0;
  });
  record(rep, "cp2_rank_drop_hyperboloid", 0.0, 50, [&](int) {
    // |z2|^2 = 1 + |z1|^2
    const Complex z1 = s.cnormal(0.6);
    const Complex z2 = std::polar(std::sqrt(1.0 + std::norm(z1)), s.uniform(0.0, 2.0 * std::numbers::pi));
    CMatrix z(2, 1);
    z << z1, z2;
    return pi_rank(canonical_rep(z, cp2), cp2, cfg.tol) < 4 ? 0.0 : 1.0;
  });
  record(rep, "cp2_p_vanishes_on_locus", 1e-12, 50, [&](int) {
    const Complex z1 = s.cnormal(0.5);
    const Complex z2 = std::polar(std::sqrt(1.0 + std::norm(z1)), s.uniform(0.0, 2.0 * std::numbers::pi));
    CMatrix z(2, 1);
    z << s.cnormal(), s.cnormal();
    z /= z.norm();
    return std::max(std::abs(cp2_p(z1, z2)), std::abs(cp2_p(z(0, 0), z(1, 0))));
  });
  record(rep, "su2_evens_lu_vanishes_a_zero", 1e-12, 50, [&](int) {
    const CMatrix k = su2_from(0.0, std::polar(1.0, s.uniform(0.0, 2.0 * std::numbers::pi)));
    return max_abs_coeff(su2_coefficients(k, Su2Structure::EvensLu, Frame::Right));
  });
  const auto grp = SymmetricSpace::group_case(2);
  record(rep, "su2_group_rank_zero_a_zero", 0.0, 50, [&](int) {
    const CMatrix k = su2_from(0.0, std::polar(1.0, s.uniform(0.0, 2.0 * std::numbers::pi)));
    return pi_rank(to_block({k, CMatrix::Identity(2, 2)}), grp, cfg.tol) == 0 ? 0.0 : 1.0;
  });
  record(rep, "fothlu_real_axis_zero", 0.0, 50, [&](int) {
    return std::abs(fothlu_w_chart(Complex(s.normal(2.0), 0.0)));
  });
  return rep;
}

SuiteReport suite_momentum(const VerifyConfig& cfg) {
  SuiteReport rep{"momentum", {}, {}};
  Sampler s(cfg.seed);
  const auto cp1 = SymmetricSpace::projective(1);
  const auto worst_over_basis = [&](const CMatrix& u, const SymmetricSpace& space) {
    const auto lf = leaf_factorize(u, space, cfg.tol);
    double worst = 0.0;
    for (const auto& x : torus_tw(lf.w, space))
      worst = std::max(worst, hamiltonian_residual(u, x, space, cfg.fd_step, cfg.tol));
    return worst;
  };
  const auto disk_point = [&](double radius) {
    return std::polar(radius * std::sqrt(s.uniform(0.0, 1.0)), s.uniform(0.0, 2.0 * std::numbers::pi));
  };
  record(rep, "hamiltonian_cp1", 1e-5, 50, [&](int) {
    return worst_over_basis(canonical_rep(point1(disk_point(0.9)), cp1), cp1);
  });
  for (const auto& name : {"cp2", "gr:2,2"}) {
    const auto space = SymmetricSpace::parse(name);
    record(rep, std::string("hamiltonian_") + name, 1e-4, 50, [&](int) {
      return worst_over_basis(canonical_rep(top_layer_point(s, space, 0.6, 0.05), space), space);
    });
  }
  record(rep, "cp1_closed_form", 1e-10, 50, [&](int) {
    const Complex z = disk_point(0.9);
    const double r = std::norm(z);
    const CMatrix u = canonical_rep(point1(z), cp1);
    return std::abs(moment_eval(u, cp1.t_basis()[0], cp1, cfg.tol) - std::log((1.0 + r) / (1.0 - r)));
  });
  for (const auto& name : {"cp1", "cp2", "gr:2,2"}) {
    const auto space = SymmetricSpace::parse(name);
    record(rep, std::string("fixed_point_zero_") + name, 1e-14, 1, [&](int) {
      const auto mv = moment_values(CMatrix::Identity(space.dim(), space.dim()), space, cfg.tol);
      double worst = 0.0;
      for (const double v : mv.values) worst = std::max(worst, std::abs(v));
      return worst;
    });
  }
  return rep;
}

SuiteReport run_one(std::string_view name, const VerifyConfig& cfg) {
  if (name == "factorization") return suite_factorization(cfg);
  if (name == "embedding") return suite_embedding(cfg);
  if (name == "bivector") return suite_bivector(cfg);
  if (name == "local-vs-equivariant") return suite_local(cfg);
  if (name == "jacobi") return suite_jacobi(cfg);
  if (name == "lambda-identity") return suite_lambda(cfg);
  if (name == "degeneracy") return suite_degeneracy(cfg);
  if (name == "momentum") return suite_momentum(cfg);
  throw DomainError(ErrorKind::InvalidArgument, "unknown suite '" + std::string(name) + "'");
}

}  // namespace

std::vector<SuiteReport> run_suites(std::string_view name, const VerifyConfig& cfg) {
  std::vector<SuiteReport> out;
  if (name == "all") {
    for (const auto& n : suite_names()) out.push_back(run_one(n, cfg));
  } else {
    out.push_back(run_one(name, cfg));
  }
  return out;
}

std::string report_json(const std::vector<SuiteReport>& reports, const VerifyConfig& cfg) {
  using nlohmann::ordered_json;
  ordered_json root;
  root["config"] = {{"seed", cfg.seed}, {"tol", cfg.tol}, {"fd_step", cfg.fd_step}, {"jacobi_tol", cfg.jacobi_tol}};
  bool all = true;
  ordered_json suites = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name},
                        {"value", std::isfinite(c.value) ? ordered_json(c.value) : ordered_json("inf")},
                        {"bound", c.bound},
                        {"samples", c.samples},
                        {"pass", c.pass}});
    ordered_json measured = ordered_json::object();
    for (const auto& [k, v] : r.measured) measured[k] = v;
    suites.push_back({{"suite", r.suite}, {"pass", r.pass()}, {"checks", checks}, {"measured", measured}});
    all = all && r.pass();
  }
  root["suites"] = suites;
  root["pass"] = all;
  return root.dump(2) + "\n";
}

}  // namespace bp
