#pragma once

#include <vector>

#include "birkpois/symspace.hpp"

namespace bp {

/// phi(uK) = l * What * h * theta(l^*), l lower unipotent, What the signed permutation.
struct LeafFactorization {
  CMatrix l;
  SignedPermutation w;
  CMatrix h;
  CMatrix abs_h;
  CMatrix log_abs_h;

  CMatrix reconstruct(const SymmetricSpace& space) const;
};

/// Weyl element of the Birkhoff factorization of the Cartan image.
SignedPermutation birkhoff_layer(const CMatrix& u, const SymmetricSpace& space, double tol = kDefaultTol);

/// Throws SymmetryViolation if the factors fail the theta-symmetry, the
/// reconstruction, or the torus-membership of log|h|.
LeafFactorization leaf_factorize(const CMatrix& u, const SymmetricSpace& space, double tol = kDefaultTol);

/// Real basis of t_w = {X in t : What theta(X) What^{-1} = X}, reduced echelon in
/// simple-coroot coordinates.
std::vector<CMatrix> torus_tw(const SignedPermutation& w, const SymmetricSpace& space);

/// Diagonal +-1 matrices t with t J of signature (m, n), ordered by sign bitmask.
/// These are the order-two torus elements lying in the Cartan image.
std::vector<CMatrix> order_two_torus_elements(const SymmetricSpace& space);

inline constexpr int kMaxTorusDim = 12;

}  // namespace bp
