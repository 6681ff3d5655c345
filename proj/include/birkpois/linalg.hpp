#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace bp {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kDefaultTol = 1e-9;

/// Signed permutation matrix of determinant +1. Row i carries sign[i] in
/// column perm[i]. The canonical representative of a Weyl element has every
/// sign +1 except the last row, which compensates the parity of perm.
struct SignedPermutation {
  std::vector<int> perm;
  std::vector<int> sign;

  static SignedPermutation identity(int n);
  static SignedPermutation canonical(std::vector<int> perm);

  int size() const { return static_cast<int>(perm.size()); }
  bool is_identity() const;
  CMatrix matrix() const;
  std::string to_string() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

int permutation_parity(const std::vector<int>& perm);

/// g = l * W * h * u_plus with W = w.matrix().
struct BirkhoffFactors {
  CMatrix l;
  SignedPermutation w;
  CMatrix h;
  CMatrix u_plus;

  CMatrix reconstruct() const;
};

/// g = l * a * u.
struct IwasawaFactors {
  CMatrix l;
  CMatrix a;
  CMatrix u;

  CMatrix reconstruct() const { return l * a * u; }
};

struct PolarFactors {
  CMatrix pos;
  CMatrix unit;
};

// Structural (rank-pattern) pivoting: the pivot of column j is the topmost
// unused row whose Schur-complement entry is nonzero at threshold tol. Entries
// with tol < |x| < sqrt(tol) raise StratumAmbiguous.
BirkhoffFactors birkhoff_factor(const CMatrix& g, double tol = kDefaultTol);

// Lower Cholesky factor L of g g^* split as L = l a; u = (l a)^{-1} g.
IwasawaFactors iwasawa_factor(const CMatrix& g, double tol = kDefaultTol);

CMatrix inv_sqrt_hpd(const CMatrix& p);
CMatrix sqrt_hpd(const CMatrix& p);
PolarFactors polar_factor(const CMatrix& a);

/// Leading principal minors det(g[0:k,0:k]), k = 1..dim.
std::vector<Complex> principal_minors(const CMatrix& g);

/// exp(x) for anti-Hermitian x, through the Hermitian eigendecomposition of i*x.
CMatrix exp_anti_hermitian(const CMatrix& x);

/// The unique unipotent square root of an upper (or lower) unipotent matrix.
CMatrix unipotent_sqrt(const CMatrix& v);

bool is_unitary(const CMatrix& u, double tol);
double hermitian_defect(const CMatrix& p);

}  // namespace bp
