#include "support.hpp"

#include <boost/rational.hpp>

#include "birkpois/local.hpp"
#include "birkpois/sampling.hpp"

using namespace bp;
using namespace bptest;

namespace {

const Complex kI(0.0, 1.0);

CVector cvec(std::initializer_list<Complex> v) {
  CVector z(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (const auto& x : v) z(i++) = x;
  return z;
}

// Real matrix of omega on the tangent basis d/dx1, d/dx2, d/dy1, d/dy2.
RMatrix omega_matrix(const Cp2Symplectic& w) {
  std::vector<CVector> t;
  for (const Complex part : {Complex(1.0, 0.0), kI})
    for (int j = 0; j < 2; ++j) {
      CVector s = CVector::Zero(2);
      s(j) = part;
      t.push_back(s);
    }
  RMatrix om(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) om(a, b) = cp2_omega_pair(w, t[static_cast<std::size_t>(a)], t[static_cast<std::size_t>(b)]);
  return om;
}

}  // namespace

TEST_CASE("CP^n coefficients at the origin") {
  for (int n : {1, 2, 4}) {
    const auto c = cpn_coeffs(CVector::Zero(n));
    for (int j = 0; j < n; ++j) {
      CHECK(c.s(j) == 1.0);
      CHECK(c.mixed(j, j) == -kI);
    }
    CHECK((c.mixed - CMatrix(c.mixed.diagonal().asDiagonal())).norm() == 0.0);
    CHECK(c.holo.norm() == 0.0);
  }
}

TEST_CASE("CP^1 coefficient reduces to the one-dimensional formula") {
  Sampler smp(71);
  for (int k = 0; k < 20; ++k) {
    const Complex z = smp.cnormal(0.8);
    const auto c = cpn_coeffs(cvec({z}));
    CHECK(std::abs(c.mixed(0, 0) - (-kI * (1.0 - std::pow(std::abs(z), 4)))) < 1e-14);
    CHECK(std::abs(c.mixed(0, 0) - cp1_family(z).pi) < 1e-14);
  }
}

TEST_CASE("CP^2 factored forms of S") {
  Sampler smp(72);
  for (int k = 0; k < 50; ++k) {
    const Complex z1 = smp.cnormal(0.7);
    const Complex z2 = smp.cnormal(0.7);
    const double nz = std::norm(z1) + std::norm(z2);
    const auto c = cpn_coeffs(cvec({z1, z2}));
    CHECK(std::abs(c.s(0) - (1.0 + std::norm(z1)) * (1.0 - nz)) < 1e-12);
    CHECK(std::abs(c.s(1) - (1.0 - std::norm(z2)) * (1.0 + nz)) < 1e-12);
    // mixed block is anti-Hermitian
    CHECK((c.mixed + c.mixed.adjoint()).norm() < 1e-14);
  }
}

TEST_CASE("CP^2 symplectic form") {
  const auto w0 = cp2_symplectic(0.0, 0.0);
  CHECK(w0.p == 1.0);
  CHECK(w0.mixed(0, 0) == -kI);
  CHECK(w0.mixed(1, 1) == -kI);
  CHECK(std::abs(w0.mixed(0, 1)) + std::abs(w0.mixed(1, 0)) + std::abs(w0.holo) == 0.0);

  Sampler smp(73);
  int tested = 0;
  while (tested < 30) {
    const Complex z1 = smp.cnormal(0.5);
    const Complex z2 = smp.cnormal(0.5);
    if (std::abs(cp2_p(z1, z2)) < 0.05) continue;
    ++tested;
    RVector x(4);
    x << z1.real(), z2.real(), z1.imag(), z2.imag();
    const RMatrix p = cpn_bivector(2).tensor(x);
    const RMatrix om = omega_matrix(cp2_symplectic(z1, z2));
    CHECK((om + om.transpose()).norm() < 1e-12);
    CHECK((p * om - RMatrix::Identity(4, 4)).norm() < 1e-9);
  }

  // p vanishes on the unit sphere and on the hyperboloid |z2|^2 = 1 + |z1|^2
  CHECK(std::abs(cp2_p(std::polar(0.6, 0.1), std::polar(0.8, 2.0))) < 1e-15);
  CHECK(std::abs(cp2_p(0.5, std::sqrt(1.25))) < 1e-15);
  CHECK(kind_of([] { cp2_symplectic(std::polar(0.6, 0.1), std::polar(0.8, 2.0)); }) == ErrorKind::OnDegeneracyLocus);
}

TEST_CASE("CP^1 family of structures") {
  const auto c0 = cp1_family(0.0);
  CHECK(c0.pi == -kI);
  CHECK(c0.pi_pl == 0.0);
  CHECK(c0.pi_kks == kI);

  Sampler smp(74);
  for (int k = 0; k < 100; ++k) {
    const auto c = cp1_family(smp.cnormal(0.7));
    CHECK(std::abs(c.pi - (c.pi_pl - c.pi_kks)) <= 1e-14);
  }
  CHECK(std::abs(cp1_family(std::polar(1.0, 0.3)).pi) < 1e-15);
}

TEST_CASE("CP^1 family identity holds exactly over the rationals") {
  using Q = boost::rational<long long>;
  for (long long num = 0; num < 40; ++num)
    for (long long den = 1; den < 15; ++den) {
      const auto f = cp1_family_poly(Q(num, den));
      CHECK(f.el == f.pl - f.kks);
    }
}

TEST_CASE("alternate chart of CP^1") {
  CHECK(fothlu_w_chart(2.5) == 0.0);
  CHECK(std::abs(fothlu_w_chart(kI) - Complex(0.0, -4.0)) < 1e-15);
  Sampler smp(75);
  for (int k = 0; k < 20; ++k) {
    const Complex w = smp.cnormal();
    CHECK(std::abs(fothlu_w_chart(std::conj(w)) + fothlu_w_chart(w)) < 1e-14);
  }
}

TEST_CASE("complex packing") {
  Sampler smp(76);
  const CMatrix z = smp.gaussian(2, 3);
  const RVector x = pack_complex(z);
  CHECK(x.size() == 12);
  CHECK(x(1) == z(0, 1).real());
  CHECK(x(6 + 3) == z(1, 0).imag());
  CHECK((unpack_complex(x, 2, 3) - z).norm() == 0.0);
  CHECK(kind_of([&] { unpack_complex(x, 3, 3); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("coordinate bivectors are antisymmetric") {
  Sampler smp(77);
  for (const auto& b : {cp1_bivector(), fothlu_bivector(), cpn_bivector(2), grassmann_bivector(2, 2),
                        su2_bivector(CMatrix::Identity(2, 2))}) {
    RVector x(b.dim);
    for (int i = 0; i < b.dim; ++i) x(i) = smp.normal(0.4);
    const RMatrix p = b.tensor(x);
    CHECK(p.rows() == b.dim);
    CHECK((p + p.transpose()).norm() < 1e-13);
  }
  // projective space read through the Grassmannian formula
  RVector x(4);
  x << 0.2, -0.3, 0.1, 0.5;
  CHECK((cpn_bivector(2).tensor(x) - grassmann_bivector(1, 2).tensor(x)).cwiseAbs().maxCoeff() < 1e-13);
  // cp1 tensor entry from the coefficient
  RVector y(2);
  y << 0.3, 0.4;
  CHECK(cp1_bivector().tensor(y)(0, 1) == doctest::Approx((kI * cp1_family(Complex(0.3, 0.4)).pi / 2.0).real()));
}

TEST_CASE("SU(2) chart bivector at the base point") {
  const RMatrix p = su2_bivector(CMatrix::Identity(2, 2)).tensor(RVector::Zero(3));
  RMatrix expect = RMatrix::Zero(3, 3);
  expect(0, 1) = 2.0;
  expect(1, 0) = -2.0;
  CHECK((p - expect).norm() < 1e-14);
}

TEST_CASE("Jacobi residual") {
  // constant bivector
  const CoordBivector constant{"const", 3, [](const RVector&) {
                                 RMatrix p(3, 3);
                                 p << 0, 1, 2, -1, 0, 3, -2, -3, 0;
                                 return p;
                               }};
  CHECK(jacobi_residual(constant, RVector::Ones(3), 1e-5) < 1e-12);
  // linear bivector of so(3)^*: Poisson
  const CoordBivector lie{"so3", 3, [](const RVector& x) {
                            RMatrix p(3, 3);
                            p << 0, x(2), -x(1), -x(2), 0, x(0), x(1), -x(0), 0;
                            return p;
                          }};
  CHECK(jacobi_residual(lie, RVector::Constant(3, 0.7), 1e-5) < 1e-10);
  // P^{12} = 1, P^{23} = x_2 is not Poisson: the bracket is -1
  const CoordBivector bad{"bad", 3, [](const RVector& x) {
                            RMatrix p = RMatrix::Zero(3, 3);
                            p(0, 1) = 1.0;
                            p(1, 2) = x(1);
                            return RMatrix(p - p.transpose());
                          }};
  CHECK(jacobi_residual(bad, RVector::Constant(3, 0.3), 1e-5) == doctest::Approx(1.0).epsilon(1e-8));

  Sampler smp(78);
  for (int k = 0; k < 5; ++k) {
    RVector x2(2);
    x2 << smp.normal(0.5), smp.normal(0.5);
    CHECK(jacobi_residual(cp1_bivector(), x2, 1e-5) <= 1e-6);
    RVector x4(4);
    for (int i = 0; i < 4; ++i) x4(i) = smp.normal(0.4);
    CHECK(jacobi_residual(cpn_bivector(2), x4, 1e-5) <= 1e-5);
    RVector x8(8);
    for (int i = 0; i < 8; ++i) x8(i) = smp.normal(0.4);
    CHECK(jacobi_residual(grassmann_bivector(2, 2), x8, 1e-5) <= 1e-5);
    RVector x3(3);
    for (int i = 0; i < 3; ++i) x3(i) = smp.normal(0.5);
    CHECK(jacobi_residual(su2_bivector(CMatrix::Identity(2, 2)), x3, 1e-5) <= 1e-5);
  }
  CHECK(kind_of([] { jacobi_residual(cp1_bivector(), RVector::Zero(3), 1e-5); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { jacobi_residual(cp1_bivector(), RVector::Zero(2), 0.0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("Jacobi residual of the SU(2) chart shrinks with the step") {
  // truncation error of central differences is O(h^2)
  RVector x(3);
  x << 0.3, -0.4, 0.7;
  const auto b = su2_bivector(CMatrix::Identity(2, 2));
  const double coarse = jacobi_residual(b, x, 1e-2);
  const double fine = jacobi_residual(b, x, 1e-3);
  CHECK(fine < coarse / 50.0);
}
