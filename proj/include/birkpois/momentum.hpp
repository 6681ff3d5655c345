#pragma once

#include <vector>

#include "birkpois/strata.hpp"

namespace bp {

/// mu_X(uK) = Re tr(1/2 i theta(log|h|) X). Throws InvalidArgument when X is not in t_w.
double moment_eval(const CMatrix& u, const CMatrix& x, const SymmetricSpace& space, double tol = kDefaultTol);

struct MomentumValue {
  SignedPermutation w;
  std::vector<CMatrix> basis;
  std::vector<double> values;
};

/// mu on the torus_tw basis of the layer containing uK.
MomentumValue moment_values(const CMatrix& u, const SymmetricSpace& space, double tol = kDefaultTol);

/// [u, {-Ad(u^{-1}) X}_{ip}].
TangentClass torus_vector_field(const CMatrix& u, const CMatrix& x, const SymmetricSpace& space);

/// Frobenius norm of Omega_u(A) - X~, where A represents d mu_X through
/// tr(A Y) = d mu_X(Y) and d mu_X comes from central differences along u e^{tY}.
double hamiltonian_residual(const CMatrix& u, const CMatrix& x, const SymmetricSpace& space, double fd_step,
                            double tol = kDefaultTol);

}  // namespace bp
