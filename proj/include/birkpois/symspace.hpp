#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "birkpois/linalg.hpp"

namespace bp {

enum class SpaceKind { Grassmannian, GroupCase };

/// Compact symmetric space U/K with a theta-stable triangular decomposition.
///
/// Grassmannian(m, n): U = SU(m+n), K = S(U(m) x U(n)), theta = Ad(J) with
/// J = diag(I_m, -I_n). ProjectiveSpace(n) is Grassmannian(1, n).
///
/// GroupCase(n): U = SU(n) x SU(n), K the diagonal. Elements are stored as
/// block-diagonal 2n x 2n matrices diag(k1, k2) and theta conjugates by the
/// block swap, which exchanges the factors. The triangular decomposition of
/// sl(n) x sl(n) is the restriction of the one on sl(2n).
class SymmetricSpace {
 public:
  static SymmetricSpace grassmannian(int m, int n);
  static SymmetricSpace projective(int n) { return grassmannian(1, n); }
  static SymmetricSpace group_case(int n);

  /// "gr:m,n", "cp1", "cp2", "cpn:n", "su2", "group:su2", "group:n".
  static SymmetricSpace parse(std::string_view preset);

  SpaceKind kind() const { return kind_; }
  int m() const { return m_; }
  int n() const { return n_; }
  int dim() const { return dim_; }
  int dim_u() const { return static_cast<int>(u_basis_.size()); }
  int dim_k() const { return static_cast<int>(k_basis_.size()); }
  int dim_ip() const { return static_cast<int>(ip_basis_.size()); }
  bool is_inner() const { return kind_ == SpaceKind::Grassmannian; }
  const std::string& name() const { return name_; }

  /// theta(g) = T g T^{-1}; T^2 = I.
  const CMatrix& involution() const { return involution_; }
  CMatrix theta(const CMatrix& g) const { return involution_ * g * involution_; }

  /// Projections along g = iu + k + ip.
  CMatrix project_ip(const CMatrix& z) const;
  CMatrix project_k(const CMatrix& z) const;
  CMatrix project_iu(const CMatrix& z) const;

  bool in_ip(const CMatrix& x, double tol = 1e-10) const;
  bool in_k(const CMatrix& x, double tol = 1e-10) const;
  /// Checks the block structure of the group (block-diagonal for GroupCase).
  bool respects_structure(const CMatrix& g, double tol = 1e-10) const;

  /// Bases orthonormal for <X, Y> = -Re tr(XY).
  const std::vector<CMatrix>& u_basis() const { return u_basis_; }
  const std::vector<CMatrix>& k_basis() const { return k_basis_; }
  const std::vector<CMatrix>& ip_basis() const { return ip_basis_; }
  /// Simple-coroot basis i(E_jj - E_{j+1,j+1}) of t (per block in the group case).
  const std::vector<CMatrix>& t_basis() const { return t_basis_; }

  RVector ip_coords(const CMatrix& x) const;
  CMatrix from_ip_coords(const RVector& c) const;

 private:
  SymmetricSpace() = default;
  void build_bases();

  SpaceKind kind_ = SpaceKind::Grassmannian;
  int m_ = 0;
  int n_ = 0;
  int dim_ = 0;
  std::string name_;
  CMatrix involution_;
  std::vector<CMatrix> u_basis_;
  std::vector<CMatrix> k_basis_;
  std::vector<CMatrix> ip_basis_;
  std::vector<CMatrix> t_basis_;
};

/// A class [u, X] in U x_K ip.
struct TangentClass {
  CMatrix u;
  CMatrix x;

  /// X anti-Hermitian, traceless, theta(X) = -X.
  bool valid(const SymmetricSpace& space, double tol = 1e-10) const;
};

struct GroupPair {
  CMatrix first;
  CMatrix second;
};

CMatrix to_block(const GroupPair& p);
GroupPair from_block(const CMatrix& g);
GroupPair theta_pair(const GroupPair& p);

/// psi(k1, k2) = k1 k2^{-1}.
CMatrix group_iso(const CMatrix& k1, const CMatrix& k2);

/// phi(uK) = u theta(u)^{-1}.
CMatrix cartan_embed(const CMatrix& u, const SymmetricSpace& space);

/// Canonical representative of the graph chart point Z (n x m): the unique
/// element of the coset with positive definite diagonal blocks.
CMatrix canonical_rep(const CMatrix& z, const SymmetricSpace& space);
CMatrix canonical_rep(const CVector& z, const SymmetricSpace& space);

/// Inverse of the graph chart: Z = C A^{-1} for u = [[A, B], [C, D]].
CMatrix chart_of(const CMatrix& u, const SymmetricSpace& space);

/// The ip-class X of the tangent vector d/dt Z + t dZ at canonical_rep(Z),
/// from the exact derivative of the Cartan image phi(Z) = (2P - I)J.
CMatrix chart_tangent(const CMatrix& z, const CMatrix& dz, const SymmetricSpace& space);

/// Real matrix of the chart differential: columns are ip_coords of chart_tangent
/// along the real basis (Re entries row-major, then Im entries row-major).
RMatrix chart_differential(const CMatrix& z, const SymmetricSpace& space);

/// The ip-class X_V representing the real covector alpha_V(dZ) = 2 Re tr(V dZ)
/// (V is m x n) through tr(X_V Y) = alpha_V(dZ) when Y is the class of dZ.
CMatrix chart_cotangent(const CMatrix& z, const CMatrix& v, const SymmetricSpace& space);

/// Real basis of the chart tangent space in the ordering used above.
std::vector<CMatrix> chart_real_basis(int rows, int cols);

}  // namespace bp
