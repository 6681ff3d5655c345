#pragma once

#include <functional>
#include <string>

#include "birkpois/poisson.hpp"

namespace bp {

/// Coordinate bivector on CP^n in the affine chart z:
///   pi = sum_{j,k} mixed(j,k) dz_j ^ dzbar_k + sum_{j<k} holo(j,k) dz_j ^ dz_k + conj.
/// mixed is anti-Hermitian with diagonal -i S_j.
struct CpnCoefficients {
  RVector s;
  CMatrix mixed;
  CMatrix holo;
};

CpnCoefficients cpn_coeffs(const CVector& z);

/// pi(alpha, beta) for real covectors given by alpha(d/dz_j) = a_j.
double cpn_pair(const CpnCoefficients& c, const CVector& a, const CVector& b);

/// Symplectic form on the open leaves of CP^2:
///   omega = sum mixed(j,k) dz_j ^ dzbar_k + holo dz_1 ^ dz_2 + conj(holo) dzbar_1 ^ dzbar_2.
struct Cp2Symplectic {
  CMatrix mixed;
  Complex holo;
  double p = 0.0;
};

/// p(Z, Z^*) = (1 + |z1|^2 - |z2|^2)(1 - |Z|^2)(1 + |Z|^2).
double cp2_p(Complex z1, Complex z2);

/// Throws OnDegeneracyLocus when |p| <= tol.
Cp2Symplectic cp2_symplectic(Complex z1, Complex z2, double tol = kDefaultTol);

/// omega(s, t) on real tangent vectors with dz_j(s) = s_j.
double cp2_omega_pair(const Cp2Symplectic& w, const CVector& s, const CVector& t);

/// Imaginary parts of the d/dz ^ d/dzbar coefficients on CP^1 as polynomials in r = |z|^2.
template <class T>
struct Cp1Family {
  T el;
  T pl;
  T kks;
};

template <class T>
Cp1Family<T> cp1_family_poly(const T& r) {
  const T one(1);
  const T two(2);
  return {-(one - r * r), two * r * (one + r), (one + r) * (one + r)};
}

struct Cp1Coefficients {
  Complex pi;
  Complex pi_pl;
  Complex pi_kks;
};

Cp1Coefficients cp1_family(Complex z);

/// Coefficient of d/dw ^ d/dwbar for the SO(2)-basepoint chart of CP^1.
Complex fothlu_w_chart(Complex w);

/// Real coordinate bivector: x -> antisymmetric P(x) with P^{ab} = pi(dx_a, dx_b).
/// Complex coordinates are ordered (Re parts, then Im parts), each row-major.
struct CoordBivector {
  std::string name;
  int dim = 0;
  std::function<RMatrix(const RVector&)> tensor;
};

/// c d/dz ^ d/dzbar with c purely imaginary has P^{xy} = Re(i c / 2).
CoordBivector cp1_bivector();
CoordBivector fothlu_bivector();
CoordBivector cpn_bivector(int n);
CoordBivector grassmann_bivector(int m, int n);
/// Inverse of the real matrix of the CP^2 symplectic form.
CoordBivector cp2_omega_bivector();
/// Evens-Lu structure on SU(2) in the chart x -> e^{x1 X} e^{x2 Y} e^{x3 H} k0.
CoordBivector su2_bivector(const CMatrix& k0);

RVector pack_complex(const CMatrix& z);
CMatrix unpack_complex(const RVector& x, int rows, int cols);

/// Max |[P, P]^{abc}| with derivatives by central differences of step fd_step.
double jacobi_residual(const CoordBivector& b, const RVector& x, double fd_step);

}  // namespace bp
