#include "support.hpp"

#include "birkpois/sampling.hpp"

using namespace bp;
using namespace bptest;

namespace {

bool lower_unipotent(const CMatrix& l, double tol = 1e-12) {
  for (Eigen::Index r = 0; r < l.rows(); ++r) {
    if (std::abs(l(r, r) - 1.0) > tol) return false;
    for (Eigen::Index c = r + 1; c < l.cols(); ++c)
      if (std::abs(l(r, c)) > tol) return false;
  }
  return true;
}

bool upper_unipotent(const CMatrix& u, double tol = 1e-12) { return lower_unipotent(u.transpose(), tol); }

bool diagonal(const CMatrix& d, double tol = 1e-12) {
  return (d - CMatrix(d.diagonal().asDiagonal())).norm() <= tol;
}

}  // namespace

TEST_CASE("birkhoff: identity gives trivial factors") {
  const auto f = birkhoff_factor(CMatrix::Identity(3, 3));
  CHECK(f.w.is_identity());
  CHECK(f.l.isApprox(CMatrix::Identity(3, 3)));
  CHECK(f.h.isApprox(CMatrix::Identity(3, 3)));
  CHECK(f.u_plus.isApprox(CMatrix::Identity(3, 3)));
}

TEST_CASE("birkhoff: rotation by a quarter turn is its own Weyl representative") {
  const CMatrix g = mat(2, 2, {0.0, 1.0, -1.0, 0.0});
  const auto f = birkhoff_factor(g);
  CHECK(f.w.perm == std::vector<int>{1, 0});
  CHECK(f.w.sign == std::vector<int>{1, -1});
  CHECK(f.w.matrix().isApprox(g));
  CHECK((f.l - CMatrix::Identity(2, 2)).norm() < 1e-15);
  CHECK((f.h - CMatrix::Identity(2, 2)).norm() < 1e-15);
  CHECK((f.u_plus - CMatrix::Identity(2, 2)).norm() < 1e-15);
}

TEST_CASE("birkhoff: even cyclic permutation keeps all signs positive") {
  const CMatrix g = mat(3, 3, {0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0});
  const auto f = birkhoff_factor(g);
  CHECK(f.w.perm == std::vector<int>{1, 2, 0});
  CHECK(f.w.sign == std::vector<int>{1, 1, 1});
  CHECK(rel(f.reconstruct(), g) < 1e-15);
}

TEST_CASE("birkhoff: exact LDU of an integer matrix") {
  // Rational factors obtained by exact elimination offline.
  const CMatrix g = mat(3, 3, {2.0, 1.0, 1.0, 3.0, 2.0, 1.0, 1.0, 1.0, 1.0});
  const auto f = birkhoff_factor(g);
  CHECK(f.w.is_identity());
  CHECK(rel(f.l, mat(3, 3, {1.0, 0.0, 0.0, 1.5, 1.0, 0.0, 0.5, 1.0, 1.0})) < 1e-15);
  CHECK(rel(f.h, mat(3, 3, {2.0, 0.0, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0, 1.0})) < 1e-15);
  CHECK(rel(f.u_plus, mat(3, 3, {1.0, 0.5, 0.5, 0.0, 1.0, -1.0, 0.0, 0.0, 1.0})) < 1e-15);
}

TEST_CASE("birkhoff: random SL(n) roundtrip and factor shapes") {
  Sampler s(11);
  for (int n : {2, 3, 4, 6}) {
    for (int k = 0; k < 50; ++k) {
      const CMatrix g = s.random_sl(n);
      const auto f = birkhoff_factor(g);
      CHECK(f.w.is_identity());
      CHECK(lower_unipotent(f.l, 1e-12));
      CHECK(upper_unipotent(f.u_plus, 1e-12));
      CHECK(diagonal(f.h));
      CHECK((f.reconstruct() - g).norm() <= 1e-10 * g.norm());
    }
  }
}

TEST_CASE("birkhoff: pivoting on a structurally permuted matrix") {
  Sampler s(12);
  for (int k = 0; k < 20; ++k) {
    // zero the (0,0) entry: column 0 must pivot on a lower row
    CMatrix g = s.gaussian(3, 3);
    g(0, 0) = 0.0;
    g /= std::pow(g.determinant(), 1.0 / 3.0);
    const auto f = birkhoff_factor(g);
    CHECK_FALSE(f.w.is_identity());
    CHECK(lower_unipotent(f.l, 1e-12));
    CHECK(upper_unipotent(f.u_plus, 1e-12));
    CHECK((f.reconstruct() - g).norm() <= 1e-10 * g.norm());
    CHECK(std::abs(f.w.matrix().determinant() - 1.0) < 1e-14);
  }
}

TEST_CASE("birkhoff: error kinds") {
  CHECK(kind_of([] { birkhoff_factor(CMatrix::Zero(2, 2)); }) == ErrorKind::SingularInput);
  CHECK(kind_of([] { birkhoff_factor(2.0 * CMatrix::Identity(2, 2)); }) == ErrorKind::NotUnimodular);
  CHECK(kind_of([] { birkhoff_factor(mat(2, 2, {1e-7, 1.0, -1.0, 0.0})); }) == ErrorKind::StratumAmbiguous);
  CHECK(kind_of([] { birkhoff_factor(CMatrix::Identity(2, 3)); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("iwasawa: unitary and positive diagonal inputs") {
  Sampler s(13);
  const CMatrix k = s.random_su(3);
  const auto f = iwasawa_factor(k);
  CHECK((f.l - CMatrix::Identity(3, 3)).norm() < 1e-12);
  CHECK((f.a - CMatrix::Identity(3, 3)).norm() < 1e-12);
  CHECK((f.u - k).norm() < 1e-12);

  const CMatrix d = mat(2, 2, {2.0, 0.0, 0.0, 0.5});
  const auto g = iwasawa_factor(d);
  CHECK((g.l - CMatrix::Identity(2, 2)).norm() < 1e-15);
  CHECK((g.a - d).norm() < 1e-15);
  CHECK((g.u - CMatrix::Identity(2, 2)).norm() < 1e-15);
}

TEST_CASE("iwasawa: matches a high precision oracle") {
  // g = [[1+i, 0.5], [-i, 2+0.5i]] / sqrt(det); factors from 50-digit Cholesky, frozen.
  CMatrix g = mat(2, 2, {Complex(1, 1), 0.5, Complex(0, -1), Complex(2, 0.5)});
  g /= std::sqrt(g.determinant());
  const auto f = iwasawa_factor(g);
  CHECK(f.a(0, 0).real() == doctest::Approx(0.81903625881272).epsilon(1e-13));
  CHECK(f.a(1, 1).real() == doctest::Approx(1.2209471671615688).epsilon(1e-13));
  CHECK(std::abs(f.l(1, 0) - Complex(0.0, -1.0 / 3.0)) < 1e-13);
  const CMatrix u = mat(2, 2,
                        {Complex(0.9175879469807824, 0.21661313082193756), Complex(0.28355026945067996, -0.1752437040397112),
                         Complex(-0.28355026945067996, -0.1752437040397112), Complex(0.9175879469807824, -0.21661313082193756)});
  CHECK((f.u - u).norm() < 1e-13);
}

TEST_CASE("iwasawa: roundtrip, shapes and uniqueness on random SL(n)") {
  Sampler s(14);
  for (int n : {2, 3, 4}) {
    for (int k = 0; k < 50; ++k) {
      const CMatrix g = s.random_sl(n);
      const auto f = iwasawa_factor(g);
      CHECK(lower_unipotent(f.l, 1e-12));
      CHECK(diagonal(f.a));
      CHECK(f.a.diagonal().real().minCoeff() > 0.0);
      CHECK(is_unitary(f.u, 1e-11));
      CHECK((f.reconstruct() - g).norm() <= 1e-11 * g.norm());
      const auto r = iwasawa_factor(f.reconstruct());
      CHECK((r.l - f.l).norm() <= 1e-10 * std::max(1.0, f.l.norm()));
      CHECK((r.a - f.a).norm() <= 1e-10 * std::max(1.0, f.a.norm()));
      CHECK((r.u - f.u).norm() <= 1e-10);
    }
  }
}

TEST_CASE("hpd square roots") {
  CHECK((inv_sqrt_hpd(CMatrix::Identity(3, 3)) - CMatrix::Identity(3, 3)).norm() < 1e-15);
  CHECK((inv_sqrt_hpd(mat(2, 2, {4.0, 0.0, 0.0, 1.0})) - mat(2, 2, {0.5, 0.0, 0.0, 1.0})).norm() < 1e-15);
  Sampler s(15);
  for (int k = 0; k < 20; ++k) {
    const CMatrix q = s.gaussian(4, 4);
    const CMatrix p = q * q.adjoint();
    const CMatrix is = inv_sqrt_hpd(p);
    CHECK(hermitian_defect(is) < 1e-11);
    CHECK((is * p * is - CMatrix::Identity(4, 4)).norm() <= 1e-11 * std::max(1.0, p.norm()));
    const CMatrix sq = sqrt_hpd(p);
    CHECK((sq * sq - p).norm() <= 1e-11 * p.norm());
  }
  CHECK(kind_of([] { inv_sqrt_hpd(mat(2, 2, {1.0, 0.0, 0.0, -1.0})); }) == ErrorKind::NotPositiveDefinite);
  CHECK(kind_of([] { inv_sqrt_hpd(mat(2, 2, {1.0, 1.0, 0.0, 1.0})); }) == ErrorKind::NotPositiveDefinite);
}

TEST_CASE("polar factorization") {
  Sampler s(16);
  const CMatrix k = s.random_unitary(3);
  const auto pk = polar_factor(k);
  CHECK((pk.pos - CMatrix::Identity(3, 3)).norm() < 1e-12);
  CHECK((pk.unit - k).norm() < 1e-12);

  const CMatrix d = mat(2, 2, {3.0, 0.0, 0.0, 1.0 / 3.0});
  const auto pd = polar_factor(d);
  CHECK((pd.pos - d).norm() < 1e-14);
  CHECK((pd.unit - CMatrix::Identity(2, 2)).norm() < 1e-14);

  for (int j = 0; j < 20; ++j) {
    const CMatrix a = s.gaussian(4, 4);
    const auto p = polar_factor(a);
    CHECK((p.pos * p.unit - a).norm() <= 1e-11 * a.norm());
    CHECK(is_unitary(p.unit, 1e-11));
    CHECK(hermitian_defect(p.pos) < 1e-11);
  }
  CHECK(kind_of([] { polar_factor(CMatrix::Zero(2, 2)); }) == ErrorKind::SingularInput);
}

TEST_CASE("principal minors") {
  for (const auto& m : principal_minors(CMatrix::Identity(4, 4))) CHECK(std::abs(m - 1.0) < 1e-15);
  const auto q = principal_minors(mat(2, 2, {0.0, 1.0, -1.0, 0.0}));
  CHECK(std::abs(q[0]) < 1e-15);
  CHECK(std::abs(q[1] - 1.0) < 1e-15);

  Sampler s(17);
  for (int k = 0; k < 20; ++k) {
    const CMatrix g = s.gaussian(5, 5);
    const auto minors = principal_minors(g);
    REQUIRE(minors.size() == 5);
    for (int j = 1; j <= 5; ++j) {
      const Complex oracle = cofactor_det(g.topLeftCorner(j, j));
      CHECK(std::abs(minors[j - 1] - oracle) <= 1e-12 * std::max(1.0, std::abs(oracle)));
    }
  }
}

TEST_CASE("principal minors are the pivot products of the LDU") {
  Sampler s(18);
  for (int k = 0; k < 20; ++k) {
    const CMatrix g = s.random_sl(4);
    const auto f = birkhoff_factor(g);
    const auto minors = principal_minors(g);
    Complex prod = 1.0;
    for (int j = 0; j < 4; ++j) {
      prod *= f.h(j, j);
      CHECK(std::abs(minors[j] - prod) <= 1e-10 * std::max(1.0, std::abs(prod)));
    }
  }
}

TEST_CASE("exponential of anti-Hermitian matrices") {
  Sampler s(19);
  for (int k = 0; k < 10; ++k) {
    const CMatrix a = s.gaussian(3, 3, 0.3);
    const CMatrix x = 0.5 * (a - a.adjoint());
    // truncated Taylor series oracle
    CMatrix series = CMatrix::Identity(3, 3);
    CMatrix term = CMatrix::Identity(3, 3);
    for (int j = 1; j < 40; ++j) {
      term = term * x / static_cast<double>(j);
      series += term;
    }
    const CMatrix e = exp_anti_hermitian(x);
    CHECK((e - series).norm() < 1e-13);
    CHECK(is_unitary(e, 1e-13));
  }
}

TEST_CASE("unipotent square root") {
  Sampler s(20);
  for (int n : {2, 3, 5}) {
    CMatrix v = s.gaussian(n, n).triangularView<Eigen::StrictlyUpper>();
    v += CMatrix::Identity(n, n);
    const CMatrix r = unipotent_sqrt(v);
    CHECK(upper_unipotent(r, 1e-13));
    CHECK((r * r - v).norm() <= 1e-12 * v.norm());
  }
}

TEST_CASE("signed permutation canonical representative has determinant one") {
  for (const std::vector<int>& p : {std::vector<int>{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}}) {
    const auto w = SignedPermutation::canonical(p);
    CHECK(std::abs(w.matrix().determinant() - 1.0) < 1e-15);
    CHECK(w.sign[0] == 1);
    CHECK(w.sign[1] == 1);
  }
  CHECK(permutation_parity({1, 0, 2}) == -1);
  CHECK(permutation_parity({1, 2, 0}) == 1);
}
