#include "birkpois/strata.hpp"

#include <cmath>
#include <sstream>

#include "birkpois/errors.hpp"

namespace bp {

CMatrix LeafFactorization::reconstruct(const SymmetricSpace& space) const {
  return l * w.matrix() * h * space.theta(l.adjoint());
}

SignedPermutation birkhoff_layer(const CMatrix& u, const SymmetricSpace& space, double tol) {
  return birkhoff_factor(cartan_embed(u, space), tol).w;
}

namespace {

[[noreturn]] void violation(const char* what, double err, double bound) {
  std::ostringstream os;
  os << what << ": " << err << " > " << bound;
  throw DomainError(ErrorKind::SymmetryViolation, os.str());
}

}  // namespace

LeafFactorization leaf_factorize(const CMatrix& u, const SymmetricSpace& space, double tol) {
  const CMatrix phi = cartan_embed(u, space);
  const BirkhoffFactors bf = birkhoff_factor(phi, tol);
  const Eigen::Index n = phi.rows();
  const CMatrix w_hat = bf.w.matrix();
  const CMatrix theta_lstar = space.theta(bf.l.adjoint());
  // round-off in the factors grows with their size near layer boundaries
  const double bound = std::sqrt(tol) * std::max(1.0, bf.l.norm() * bf.u_plus.norm());

  if (bf.w.is_identity()) {
    const double err = (bf.u_plus - theta_lstar).norm();
    if (err > bound) violation("u_plus != theta(l^*)", err, bound);
  }
  // u_plus = theta(l^*) V with V upper unipotent; split V symmetrically
  const CMatrix v = bf.u_plus * theta_lstar.inverse();
  const CMatrix v_low = CMatrix(v.triangularView<Eigen::Lower>()) - CMatrix::Identity(n, n);
  if (v_low.norm() > bound) violation("u_plus theta(l^*)^{-1} is not upper unipotent", v_low.norm(), bound);
  const CMatrix s = unipotent_sqrt(CMatrix(v.triangularView<Eigen::UnitUpper>()));

  LeafFactorization out;
  out.l = bf.l * space.theta(s).adjoint();
  out.w = bf.w;
  out.h = bf.h;
  out.abs_h = CMatrix::Zero(n, n);
  out.log_abs_h = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double mag = std::abs(bf.h(i, i));
    out.abs_h(i, i) = mag;
    out.log_abs_h(i, i) = std::log(mag);
  }

  const double rec = (out.reconstruct(space) - phi).norm();
  if (rec > bound) violation("reconstruction of phi", rec, bound);
  const double mem = (w_hat * space.theta(out.log_abs_h) * w_hat.transpose() - out.log_abs_h).norm();
  if (mem > bound) violation("log|h| is not fixed by Ad(w) theta", mem, bound);
  return out;
}

namespace {

// Reduced row echelon form of the rows of a, entries below 1e-12 cleared.
RMatrix rref(RMatrix a) {
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index piv = row;
    for (Eigen::Index r = row + 1; r < a.rows(); ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (std::abs(a(piv, col)) <= 1e-10) continue;
    a.row(piv).swap(a.row(row));
    a.row(row) /= a(row, col);
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      if (r != row) a.row(r) -= a(r, col) * a.row(row);
    ++row;
  }
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (std::abs(a.data()[i]) < 1e-12) a.data()[i] = 0.0;
  return a.topRows(row);
}

}  // namespace

std::vector<CMatrix> torus_tw(const SignedPermutation& w, const SymmetricSpace& space) {
  if (w.size() != space.dim()) throw DomainError(ErrorKind::InvalidArgument, "torus_tw: size mismatch");
  const auto& tb = space.t_basis();
  const CMatrix w_hat = w.matrix();
  const auto r = static_cast<Eigen::Index>(tb.size());
  if (r == 0) return {};
  RMatrix a(space.dim(), r);
  for (Eigen::Index b = 0; b < r; ++b) {
    const CMatrix& t = tb[static_cast<std::size_t>(b)];
    const CMatrix img = w_hat * space.theta(t) * w_hat.transpose() - t;
    if ((img - CMatrix(img.diagonal().asDiagonal())).norm() > 1e-10)
      throw DomainError(ErrorKind::InvalidArgument, "torus_tw: Ad(w) theta does not preserve t");
    a.col(b) = img.diagonal().imag();
  }
  Eigen::JacobiSVD<RMatrix> svd(a, Eigen::ComputeFullV);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > 1e-10) ++rank;
  const RMatrix null = svd.matrixV().rightCols(r - rank);
  const RMatrix reduced = rref(null.transpose());
  std::vector<CMatrix> out;
  for (Eigen::Index k = 0; k < reduced.rows(); ++k) {
    CMatrix x = CMatrix::Zero(space.dim(), space.dim());
    for (Eigen::Index b = 0; b < r; ++b) x += reduced(k, b) * tb[static_cast<std::size_t>(b)];
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<CMatrix> order_two_torus_elements(const SymmetricSpace& space) {
  if (!space.is_inner())
    throw DomainError(ErrorKind::InvalidArgument, "order_two_torus_elements: requires an inner (Grassmannian) preset");
  const int n = space.dim();
  if (n > kMaxTorusDim) {
    std::ostringstream os;
    os << "order_two_torus_elements: dimension " << n << " exceeds " << kMaxTorusDim;
    throw DomainError(ErrorKind::DimensionGuard, os.str());
  }
  const auto& j = space.involution();
  std::vector<CMatrix> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    CMatrix t = CMatrix::Identity(n, n);
    int plus = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) t(i, i) = -1.0;
      if ((t(i, i) * j(i, i)).real() > 0.0) ++plus;
    }
    if (plus == space.m()) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace bp
