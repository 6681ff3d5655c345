#pragma once

#include "birkpois/symspace.hpp"

namespace bp {

/// Omega_u(X) = {Ad(u^{-1}) H Ad(u) X}_{ip}. Throws InvalidTangent when X is not in ip.
CMatrix omega_apply(const CMatrix& u, const CMatrix& x, const SymmetricSpace& space);

/// pi([u, X], [u, Y]) = tr(Omega_u(X) Y).
double pi_eval(const CMatrix& u, const CMatrix& x, const CMatrix& y, const SymmetricSpace& space);

/// Matrix of Omega_u on the orthonormal ip basis: column j = ip_coords(Omega_u(e_j)).
/// Skew-symmetric since the basis Gram matrix of tr(XY) is -I.
struct BivectorOperator {
  CMatrix u;
  RMatrix omega;
};

BivectorOperator bivector_operator(const CMatrix& u, const SymmetricSpace& space);

/// Number of singular values above tol.
int numerical_rank(const RMatrix& a, double tol);
int pi_rank(const CMatrix& u, const SymmetricSpace& space, double tol = kDefaultTol);

/// Columns ip_coords({Ad(u^{-1}) pr_u(i Ad(u) X)}_{ip}) over the ip basis; their span is
/// the tangent space of the leaf through uK.
RMatrix leaf_generators(const CMatrix& u, const SymmetricSpace& space);

/// Largest principal angle between the column spans of a and b (each truncated
/// to its numerical rank at tol). Returns pi/2 when the ranks differ.
double max_principal_angle(const RMatrix& a, const RMatrix& b, double tol);

// Group case on K = SU(n), right-trivialized, covectors identified through tr(XY).
double pi_LW_group(const CMatrix& k, const CMatrix& p, const CMatrix& q);
double pi_EL_group(const CMatrix& k, const CMatrix& p, const CMatrix& q);

enum class Su2Structure { LuWeinstein, EvensLu };
enum class Frame { Right, Left };

/// Coefficients of X^Y, Y^H, H^X for SU(2), X = E+ - E-, Y = i(E+ + E-), H = diag(i, -i):
/// -1/2 times the pairing on basis covectors (transported by Ad(k) in the left frame).
struct Su2Coefficients {
  double xy = 0.0;
  double yh = 0.0;
  double hx = 0.0;
};

Su2Coefficients su2_coefficients(const CMatrix& k, Su2Structure structure, Frame frame);

/// Closed forms in terms of k = [[a, b], [-conj(b), conj(a)]].
Su2Coefficients su2_closed_form(Complex a, Complex b, Su2Structure structure);

/// X, Y, H of su(2) in the order above.
std::vector<CMatrix> su2_basis();

/// L_Z V for the graph chart of Gr(m, n); Z is n x m, V is m x n.
CMatrix grassmann_L(const CMatrix& z, const CMatrix& v);

/// Re(i [tr((L_Z V)^* W) - tr((L_Z V) W^*)]).
double grassmann_local_pi(const CMatrix& z, const CMatrix& v, const CMatrix& w);

/// Equivariant pi at canonical_rep(Z) on the classes of the covectors V, W.
double grassmann_equivariant_pi(const CMatrix& z, const CMatrix& v, const CMatrix& w, const SymmetricSpace& space);

/// Ratio local / equivariant at a reference point: the calibration constant.
double calibration_constant(const SymmetricSpace& space);

}  // namespace bp
