#include "birkpois/momentum.hpp"

#include "birkpois/errors.hpp"
#include "birkpois/lie.hpp"
#include "birkpois/poisson.hpp"

namespace bp {

namespace {

const Complex kI(0.0, 1.0);

double pairing(const CMatrix& log_abs_h, const CMatrix& x, const SymmetricSpace& space) {
  return trace_form(0.5 * kI * space.theta(log_abs_h), x).real();
}

void require_in_tw(const CMatrix& x, const SignedPermutation& w, const SymmetricSpace& space) {
  const CMatrix w_hat = w.matrix();
  const TriangularContext ctx(space.dim());
  const double scale = std::max(1.0, x.norm());
  if (!ctx.in_t(x, 1e-10 * scale) || (w_hat * space.theta(x) * w_hat.transpose() - x).norm() > 1e-10 * scale)
    throw DomainError(ErrorKind::InvalidArgument, "moment_eval: X is not in t_w of the layer");
}

}  // namespace

double moment_eval(const CMatrix& u, const CMatrix& x, const SymmetricSpace& space, double tol) {
  const auto lf = leaf_factorize(u, space, tol);
  require_in_tw(x, lf.w, space);
  return pairing(lf.log_abs_h, x, space);
}

MomentumValue moment_values(const CMatrix& u, const SymmetricSpace& space, double tol) {
  const auto lf = leaf_factorize(u, space, tol);
  MomentumValue out;
  out.w = lf.w;
  out.basis = torus_tw(lf.w, space);
  for (const auto& b : out.basis) out.values.push_back(pairing(lf.log_abs_h, b, space));
  return out;
}

TangentClass torus_vector_field(const CMatrix& u, const CMatrix& x, const SymmetricSpace& space) {
  return {u, space.project_ip(-u.adjoint() * x * u)};
}

double hamiltonian_residual(const CMatrix& u, const CMatrix& x, const SymmetricSpace& space, double fd_step,
                            double tol) {
  if (!(fd_step > 0.0)) throw DomainError(ErrorKind::InvalidArgument, "hamiltonian_residual: fd_step must be > 0");
  const auto& basis = space.ip_basis();
  CMatrix a = CMatrix::Zero(space.dim(), space.dim());
  for (const auto& e : basis) {
    const double plus = moment_eval(u * exp_anti_hermitian(fd_step * e), x, space, tol);
    const double minus = moment_eval(u * exp_anti_hermitian(-fd_step * e), x, space, tol);
    // basis Gram matrix of tr(XY) is -I
    a -= ((plus - minus) / (2.0 * fd_step)) * e;
  }
  return (omega_apply(u, a, space) - torus_vector_field(u, x, space).x).norm();
}

}  // namespace bp
