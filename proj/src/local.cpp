#include "birkpois/local.hpp"

#include <cmath>

#include "birkpois/errors.hpp"

namespace bp {

namespace {

const Complex kI(0.0, 1.0);

RMatrix two_dim_tensor(double q) {
  RMatrix p(2, 2);
  p << 0.0, q, -q, 0.0;
  return p;
}

}  // namespace

CpnCoefficients cpn_coeffs(const CVector& z) {
  const auto n = z.size();
  const double nz = z.squaredNorm();
  CpnCoefficients c;
  c.s.resize(n);
  c.mixed = CMatrix::Zero(n, n);
  c.holo = CMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double s = 1.0 - std::norm(z(j)) * nz;
    for (Eigen::Index k = 0; k < j; ++k) s += std::norm(z(k));
    for (Eigen::Index k = j + 1; k < n; ++k) s -= std::norm(z(k));
    c.s(j) = s;
    c.mixed(j, j) = -kI * s;
    for (Eigen::Index k = j + 1; k < n; ++k) {
      c.holo(j, k) = -kI * z(j) * z(k);
      c.mixed(j, k) = kI * z(j) * std::conj(z(k)) * nz;
      c.mixed(k, j) = kI * std::conj(z(j)) * z(k) * nz;
    }
  }
  return c;
}

double cpn_pair(const CpnCoefficients& c, const CVector& a, const CVector& b) {
  const auto n = a.size();
  Complex mixed(0.0);
  Complex holo(0.0);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) {
      mixed += c.mixed(j, k) * (a(j) * std::conj(b(k)) - std::conj(a(k)) * b(j));
      if (j < k) holo += c.holo(j, k) * (a(j) * b(k) - a(k) * b(j));
    }
  return mixed.real() + 2.0 * holo.real();
}

double cp2_p(Complex z1, Complex z2) {
  const double nz = std::norm(z1) + std::norm(z2);
  return (1.0 + std::norm(z1) - std::norm(z2)) * (1.0 - nz) * (1.0 + nz);
}

Cp2Symplectic cp2_symplectic(Complex z1, Complex z2, double tol) {
  const double nz = std::norm(z1) + std::norm(z2);
  const double p = cp2_p(z1, z2);
  if (std::abs(p) <= tol) throw DomainError(ErrorKind::OnDegeneracyLocus, "cp2_symplectic: p(Z, Z*) ~ 0");
  const double s1 = (1.0 + std::norm(z1)) * (1.0 - nz);
  const double s2 = (1.0 - std::norm(z2)) * (1.0 + nz);
  Cp2Symplectic w;
  w.p = p;
  w.mixed = CMatrix::Zero(2, 2);
  w.mixed(0, 0) = -kI * s2 / p;
  w.mixed(1, 1) = -kI * s1 / p;
  w.mixed(1, 0) = -kI * z1 * std::conj(z2) * nz / p;
  w.mixed(0, 1) = -kI * std::conj(z1) * z2 * nz / p;
  w.holo = -kI * std::conj(z1) * std::conj(z2) / p;
  return w;
}

double cp2_omega_pair(const Cp2Symplectic& w, const CVector& s, const CVector& t) {
  Complex mixed(0.0);
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) mixed += w.mixed(j, k) * (s(j) * std::conj(t(k)) - t(j) * std::conj(s(k)));
  const Complex holo = w.holo * (s(0) * t(1) - s(1) * t(0));
  return mixed.real() + 2.0 * holo.real();
}

Cp1Coefficients cp1_family(Complex z) {
  const double r = std::norm(z);
  const auto poly = cp1_family_poly(r);
  return {kI * poly.el, kI * poly.pl, kI * poly.kks};
}

Complex fothlu_w_chart(Complex w) { return -2.0 * kI * w.imag() * (1.0 + std::norm(w)); }

RVector pack_complex(const CMatrix& z) {
  const auto size = z.size();
  RVector x(2 * size);
  Eigen::Index c = 0;
  for (Eigen::Index j = 0; j < z.rows(); ++j)
    for (Eigen::Index k = 0; k < z.cols(); ++k, ++c) {
      x(c) = z(j, k).real();
      x(c + size) = z(j, k).imag();
    }
  return x;
}

CMatrix unpack_complex(const RVector& x, int rows, int cols) {
  const Eigen::Index size = static_cast<Eigen::Index>(rows) * cols;
  if (x.size() != 2 * size) throw DomainError(ErrorKind::InvalidArgument, "unpack_complex: size mismatch");
  CMatrix z(rows, cols);
  Eigen::Index c = 0;
  for (int j = 0; j < rows; ++j)
    for (int k = 0; k < cols; ++k, ++c) z(j, k) = Complex(x(c), x(c + size));
  return z;
}

CoordBivector cp1_bivector() {
  return {"cp1", 2, [](const RVector& x) {
            const Complex c = cp1_family(Complex(x(0), x(1))).pi;
            return two_dim_tensor((kI * c / 2.0).real());
          }};
}

CoordBivector fothlu_bivector() {
  return {"fothlu", 2, [](const RVector& x) {
            const Complex c = fothlu_w_chart(Complex(x(0), x(1)));
            return two_dim_tensor((kI * c / 2.0).real());
          }};
}

namespace {

// dx_j <-> a = e_j / 2, dy_j <-> a = -i e_j / 2
std::vector<CVector> cp_covectors(int n) {
  std::vector<CVector> out;
  for (const Complex part : {Complex(0.5, 0.0), Complex(0.0, -0.5)})
    for (int j = 0; j < n; ++j) {
      CVector a = CVector::Zero(n);
      a(j) = part;
      out.push_back(a);
    }
  return out;
}

}  // namespace

CoordBivector cpn_bivector(int n) {
  return {"cpn:" + std::to_string(n), 2 * n, [n](const RVector& x) {
            const CVector z = unpack_complex(x, n, 1).col(0);
            const auto c = cpn_coeffs(z);
            const auto cov = cp_covectors(n);
            RMatrix p = RMatrix::Zero(2 * n, 2 * n);
            for (int a = 0; a < 2 * n; ++a)
              for (int b = a + 1; b < 2 * n; ++b) {
                p(a, b) = cpn_pair(c, cov[static_cast<std::size_t>(a)], cov[static_cast<std::size_t>(b)]);
                p(b, a) = -p(a, b);
              }
            return p;
          }};
}

CoordBivector grassmann_bivector(int m, int n) {
  // coordinate (j, k) of Z <-> V = E_kj / 2 (real part) or -i E_kj / 2 (imaginary part)
  std::vector<CMatrix> cov;
  for (const Complex part : {Complex(0.5, 0.0), Complex(0.0, -0.5)})
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k) {
        CMatrix v = CMatrix::Zero(m, n);
        v(k, j) = part;
        cov.push_back(v);
      }
  const int dim = 2 * m * n;
  return {"gr:" + std::to_string(m) + "," + std::to_string(n), dim, [m, n, dim, cov](const RVector& x) {
            const CMatrix z = unpack_complex(x, n, m);
            RMatrix p = RMatrix::Zero(dim, dim);
            for (int a = 0; a < dim; ++a)
              for (int b = a + 1; b < dim; ++b) {
                p(a, b) = grassmann_local_pi(z, cov[static_cast<std::size_t>(a)], cov[static_cast<std::size_t>(b)]);
                p(b, a) = -p(a, b);
              }
            return p;
          }};
}

CoordBivector cp2_omega_bivector() {
  return {"cp2_omega", 4, [](const RVector& x) {
            const auto w = cp2_symplectic(Complex(x(0), x(2)), Complex(x(1), x(3)));
            std::vector<CVector> tangents;
            for (const Complex part : {Complex(1.0, 0.0), kI})
              for (int j = 0; j < 2; ++j) {
                CVector s = CVector::Zero(2);
                s(j) = part;
                tangents.push_back(s);
              }
            RMatrix om(4, 4);
            for (int a = 0; a < 4; ++a)
              for (int b = 0; b < 4; ++b)
                om(a, b) = cp2_omega_pair(w, tangents[static_cast<std::size_t>(a)], tangents[static_cast<std::size_t>(b)]);
            return RMatrix(om.inverse());
          }};
}

CoordBivector su2_bivector(const CMatrix& k0) {
  return {"su2", 3, [k0](const RVector& x) {
            const auto e = su2_basis();
            const CMatrix g1 = exp_anti_hermitian(x(0) * e[0]);
            const CMatrix g2 = exp_anti_hermitian(x(1) * e[1]);
            const CMatrix g3 = exp_anti_hermitian(x(2) * e[2]);
            const CMatrix k = g1 * g2 * g3 * k0;
            // right-logarithmic derivatives of the chart
            const std::vector<CMatrix> xi = {e[0], g1 * e[1] * g1.adjoint(),
                                             (g1 * g2) * e[2] * (g1 * g2).adjoint()};
            RMatrix r(3, 3);
            for (int a = 0; a < 3; ++a)
              for (int b = 0; b < 3; ++b)
                r(a, b) = -0.5 * (xi[static_cast<std::size_t>(a)] * e[static_cast<std::size_t>(b)]).trace().real();
            const auto c = su2_coefficients(k, Su2Structure::EvensLu, Frame::Right);
            RMatrix pe(3, 3);
            pe << 0.0, c.xy, -c.hx, -c.xy, 0.0, c.yh, c.hx, -c.yh, 0.0;
            const RMatrix rinv = r.inverse();
            return RMatrix(rinv.transpose() * pe * rinv);
          }};
}

double jacobi_residual(const CoordBivector& b, const RVector& x, double fd_step) {
  const int dim = b.dim;
  if (x.size() != dim) throw DomainError(ErrorKind::InvalidArgument, "jacobi_residual: point dimension");
  if (!(fd_step > 0.0)) throw DomainError(ErrorKind::InvalidArgument, "jacobi_residual: fd_step must be > 0");
  const RMatrix p = b.tensor(x);
  std::vector<RMatrix> dp;
  for (int d = 0; d < dim; ++d) {
    RVector xp = x;
    RVector xm = x;
    xp(d) += fd_step;
    xm(d) -= fd_step;
    dp.push_back((b.tensor(xp) - b.tensor(xm)) / (2.0 * fd_step));
  }
  double worst = 0.0;
  for (int a = 0; a < dim; ++a)
    for (int bb = a + 1; bb < dim; ++bb)
      for (int c = bb + 1; c < dim; ++c) {
        double s = 0.0;
        for (int d = 0; d < dim; ++d) {
          const auto& g = dp[static_cast<std::size_t>(d)];
          s += p(d, a) * g(bb, c) + p(d, bb) * g(c, a) + p(d, c) * g(a, bb);
        }
        worst = std::max(worst, std::abs(s));
      }
  return worst;
}

}  // namespace bp
