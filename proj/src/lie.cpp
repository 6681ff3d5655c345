#include "birkpois/lie.hpp"

#include <sstream>

#include "birkpois/errors.hpp"

namespace bp {

TriangularContext::TriangularContext(int n) : n_(n) {
  if (n < 1) throw DomainError(ErrorKind::InvalidArgument, "TriangularContext: n must be positive");
}

bool TriangularContext::in_n_minus(const CMatrix& z, double tol) const {
  return (z - CMatrix(z.triangularView<Eigen::StrictlyLower>())).norm() <= tol;
}

bool TriangularContext::in_n_plus(const CMatrix& z, double tol) const {
  return (z - CMatrix(z.triangularView<Eigen::StrictlyUpper>())).norm() <= tol;
}

bool TriangularContext::in_h(const CMatrix& z, double tol) const {
  const CMatrix d = z.diagonal().asDiagonal();
  return (z - d).norm() <= tol && std::abs(z.trace()) <= tol;
}

bool TriangularContext::in_t(const CMatrix& z, double tol) const {
  return in_h(z, tol) && z.diagonal().real().norm() <= tol;
}

bool TriangularContext::in_h_real(const CMatrix& z, double tol) const {
  return in_h(z, tol) && z.diagonal().imag().norm() <= tol;
}

CMatrix recenter_traceless(const CMatrix& z) {
  const Complex tr = z.trace();
  if (std::abs(tr) > kTraceTol * std::max(1.0, z.norm())) {
    std::ostringstream os;
    os << "|tr Z| = " << std::abs(tr);
    throw DomainError(ErrorKind::NotTraceless, os.str());
  }
  if (tr == Complex(0.0)) return z;
  return z - (tr / static_cast<double>(z.rows())) * CMatrix::Identity(z.rows(), z.cols());
}

TriangularParts tri_project(const CMatrix& z) {
  const CMatrix zc = recenter_traceless(z);
  return {zc.triangularView<Eigen::StrictlyLower>(), zc.diagonal().asDiagonal(),
          zc.triangularView<Eigen::StrictlyUpper>()};
}

CMatrix hilbert_transform(const CMatrix& z) {
  const Complex i(0.0, 1.0);
  const auto parts = tri_project(z);
  return -i * parts.lower + i * parts.upper;
}

CMatrix proj_u(const CMatrix& z) {
  const auto parts = tri_project(z);
  const CMatrix diag_t = 0.5 * (parts.diag - parts.diag.adjoint());
  return -parts.upper.adjoint() + diag_t + parts.upper;
}

Complex trace_form(const CMatrix& x, const CMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw DomainError(ErrorKind::InvalidArgument, "trace_form: dimension mismatch");
  // tr(XY) without forming the product
  return (x.transpose().cwiseProduct(y)).sum();
}

CMatrix dressing_act(const CMatrix& u, const CMatrix& g0, double tol) {
  return iwasawa_factor(u * g0, tol).u;
}

}  // namespace bp
