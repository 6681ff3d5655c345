#include "birkpois/poisson.hpp"

#include <cmath>
#include <numbers>

#include "birkpois/errors.hpp"
#include "birkpois/lie.hpp"

namespace bp {

namespace {

const Complex kI(0.0, 1.0);

void require_unitary(const CMatrix& u, const char* op) {
  if (!is_unitary(u, 1e-8)) throw DomainError(ErrorKind::InvalidArgument, std::string(op) + ": u is not unitary");
}

}  // namespace

CMatrix omega_apply(const CMatrix& u, const CMatrix& x, const SymmetricSpace& space) {
  require_unitary(u, "omega_apply");
  if (!space.in_ip(x, 1e-10 * std::max(1.0, x.norm())))
    throw DomainError(ErrorKind::InvalidTangent, "omega_apply: X is not in ip");
  return space.project_ip(u.adjoint() * hilbert_transform(u * x * u.adjoint()) * u);
}

double pi_eval(const CMatrix& u, const CMatrix& x, const CMatrix& y, const SymmetricSpace& space) {
  if (!space.in_ip(y, 1e-10 * std::max(1.0, y.norm())))
    throw DomainError(ErrorKind::InvalidTangent, "pi_eval: Y is not in ip");
  return trace_form(omega_apply(u, x, space), y).real();
}

BivectorOperator bivector_operator(const CMatrix& u, const SymmetricSpace& space) {
  const auto& basis = space.ip_basis();
  RMatrix m(space.dim_ip(), space.dim_ip());
  for (int j = 0; j < space.dim_ip(); ++j)
    m.col(j) = space.ip_coords(omega_apply(u, basis[static_cast<std::size_t>(j)], space));
  return {u, m};
}

int numerical_rank(const RMatrix& a, double tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<RMatrix> svd(a);
  int r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++r;
  return r;
}

int pi_rank(const CMatrix& u, const SymmetricSpace& space, double tol) {
  return numerical_rank(bivector_operator(u, space).omega, tol);
}

RMatrix leaf_generators(const CMatrix& u, const SymmetricSpace& space) {
  require_unitary(u, "leaf_generators");
  const auto& basis = space.ip_basis();
  RMatrix g(space.dim_ip(), space.dim_ip());
  for (int j = 0; j < space.dim_ip(); ++j) {
    const CMatrix xu = u * basis[static_cast<std::size_t>(j)] * u.adjoint();
    const CMatrix back = u.adjoint() * proj_u(kI * xu) * u;
    g.col(j) = space.ip_coords(space.project_ip(back));
  }
  return g;
}

namespace {

RMatrix range_basis(const RMatrix& a, double tol) {
  Eigen::JacobiSVD<RMatrix> svd(a, Eigen::ComputeThinU);
  int r = 0;
  while (r < svd.singularValues().size() && svd.singularValues()(r) > tol) ++r;
  return svd.matrixU().leftCols(r);
}

}  // namespace

double max_principal_angle(const RMatrix& a, const RMatrix& b, double tol) {
  const RMatrix qa = range_basis(a, tol);
  const RMatrix qb = range_basis(b, tol);
  if (qa.cols() != qb.cols()) return std::numbers::pi / 2.0;
  if (qa.cols() == 0) return 0.0;
  // sine of the largest angle: distance of span(b) from span(a)
  const RMatrix resid = qb - qa * (qa.transpose() * qb);
  Eigen::JacobiSVD<RMatrix> svd(resid);
  return std::asin(std::min(1.0, svd.singularValues()(0)));
}

double pi_LW_group(const CMatrix& k, const CMatrix& p, const CMatrix& q) {
  const CMatrix kinv = k.adjoint();
  const CMatrix op = k * hilbert_transform(kinv * p * k) * kinv - hilbert_transform(p);
  return trace_form(op, q).real();
}

double pi_EL_group(const CMatrix& k, const CMatrix& p, const CMatrix& q) {
  const CMatrix kinv = k.adjoint();
  const CMatrix op = k * hilbert_transform(kinv * p * k) * kinv + hilbert_transform(p);
  return trace_form(op, q).real();
}

std::vector<CMatrix> su2_basis() {
  CMatrix ep = CMatrix::Zero(2, 2);
  ep(0, 1) = 1.0;
  const CMatrix em = ep.transpose();
  CMatrix h = CMatrix::Zero(2, 2);
  h(0, 0) = kI;
  h(1, 1) = -kI;
  return {ep - em, kI * (ep + em), h};
}

Su2Coefficients su2_coefficients(const CMatrix& k, Su2Structure structure, Frame frame) {
  if (k.rows() != 2 || k.cols() != 2) throw DomainError(ErrorKind::InvalidArgument, "su2_coefficients: k must be 2x2");
  auto b = su2_basis();
  if (frame == Frame::Left)
    for (auto& e : b) e = k * e * k.adjoint();
  const auto pair = [&](const CMatrix& p, const CMatrix& q) {
    return structure == Su2Structure::LuWeinstein ? pi_LW_group(k, p, q) : pi_EL_group(k, p, q);
  };
  return {-0.5 * pair(b[0], b[1]), -0.5 * pair(b[1], b[2]), -0.5 * pair(b[2], b[0])};
}

Su2Coefficients su2_closed_form(Complex a, Complex b, Su2Structure structure) {
  const double a4 = std::pow(std::norm(a), 2);
  const double b4 = std::pow(std::norm(b), 2);
  if (structure == Su2Structure::LuWeinstein)
    return {1.0 - a4 + b4, 2.0 * (std::conj(a) * b).imag(), -2.0 * (a * std::conj(b)).real()};
  return {1.0 + a4 - b4, 2.0 * (a * b).imag(), -2.0 * (a * b).real()};
}

CMatrix grassmann_L(const CMatrix& z, const CMatrix& v) {
  if (v.rows() != z.cols() || v.cols() != z.rows())
    throw DomainError(ErrorKind::InvalidArgument, "grassmann_L: V must be m x n for Z n x m");
  const auto upper_sym = [](const CMatrix& a) {
    const CMatrix up = a.triangularView<Eigen::StrictlyUpper>();
    return CMatrix(up + up.adjoint());
  };
  const CMatrix zs = z.adjoint();
  const CMatrix vs = v.adjoint();
  const CMatrix t1 = v - zs * z * v * z * zs;
  const CMatrix t2 = zs * upper_sym(z * v - vs * zs);
  // the trailing Z^* makes the last term m x n
  const CMatrix t3 = upper_sym(zs * vs - v * z) * zs;
  return t1 + t2 - t3;
}

double grassmann_local_pi(const CMatrix& z, const CMatrix& v, const CMatrix& w) {
  const CMatrix lv = grassmann_L(z, v);
  const Complex val = kI * ((lv.adjoint() * w).trace() - (lv * w.adjoint()).trace());
  return val.real();
}

double grassmann_equivariant_pi(const CMatrix& z, const CMatrix& v, const CMatrix& w, const SymmetricSpace& space) {
  const CMatrix u = canonical_rep(z, space);
  return pi_eval(u, chart_cotangent(z, v, space), chart_cotangent(z, w, space), space);
}

double calibration_constant(const SymmetricSpace& space) {
  const int m = space.m();
  const int n = space.n();
  CMatrix z(n, m);
  CMatrix v(m, n);
  CMatrix w(m, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < m; ++k) z(j, k) = Complex(0.2 + 0.1 * j - 0.05 * k, 0.15 - 0.07 * (j + k));
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < n; ++k) {
      v(j, k) = Complex(1.0 - 0.3 * k, 0.4 + 0.2 * j);
      w(j, k) = Complex(-0.5 + 0.25 * j, 0.9 - 0.35 * k);
    }
  return grassmann_local_pi(z, v, w) / grassmann_equivariant_pi(z, v, w, space);
}

}  // namespace bp
