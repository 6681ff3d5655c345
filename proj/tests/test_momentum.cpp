#include "support.hpp"

#include "birkpois/momentum.hpp"
#include "birkpois/poisson.hpp"
#include "birkpois/sampling.hpp"

using namespace bp;
using namespace bptest;

namespace {

const Complex kI(0.0, 1.0);

CMatrix cp1_u(Complex z) {
  CMatrix p(1, 1);
  p(0, 0) = z;
  return canonical_rep(p, SymmetricSpace::parse("cp1"));
}

// Random point of the top layer, kept away from the layer boundary.
CMatrix top_point(Sampler& smp, const SymmetricSpace& s) {
  for (;;) {
    const CMatrix u = canonical_rep(smp.chart_point(s, 0.5), s);
    double worst = 1.0;
    for (const auto& m : principal_minors(cartan_embed(u, s))) worst = std::min(worst, std::abs(m));
    if (worst > 0.1) return u;
  }
}

}  // namespace

TEST_CASE("momentum vanishes at the fixed point") {
  for (const char* name : {"cp1", "cp2", "gr:2,2"}) {
    const auto s = SymmetricSpace::parse(name);
    const auto mv = moment_values(CMatrix::Identity(s.dim(), s.dim()), s);
    CHECK(mv.w.is_identity());
    CHECK(mv.basis.size() == static_cast<std::size_t>(s.dim() - 1));
    for (const double v : mv.values) CHECK(std::abs(v) < 1e-15);
  }
}

TEST_CASE("momentum on CP1 has a closed form") {
  const auto cp1 = SymmetricSpace::parse("cp1");
  const CMatrix x = cp1.t_basis()[0];
  CHECK(std::abs(moment_eval(cp1_u(0.0), x, cp1)) < 1e-15);
  CHECK(moment_eval(cp1_u(0.6), x, cp1) == doctest::Approx(std::log(1.36 / 0.64)).epsilon(1e-12));
  // frozen: log(1.36 / 0.64)
  CHECK(moment_eval(cp1_u(0.6), x, cp1) == doctest::Approx(0.7537718023763802).epsilon(1e-12));
  Sampler smp(91);
  for (int k = 0; k < 50; ++k) {
    const Complex z = std::polar(0.9 * std::sqrt(smp.uniform(0.0, 1.0)), smp.uniform(0.0, 6.283185307179586));
    const double r = std::norm(z);
    CHECK(std::abs(moment_eval(cp1_u(z), x, cp1) - std::log((1.0 + r) / (1.0 - r))) < 1e-10);
  }
  // increases with the radius
  double prev = -1.0;
  for (double rad = 0.0; rad < 0.99; rad += 0.07) {
    const double v = moment_eval(cp1_u(std::polar(rad, 0.8)), x, cp1);
    CHECK(v > prev);
    prev = v;
  }
  CHECK(prev > 3.0);
}

TEST_CASE("momentum is linear in the torus argument and defined on the quotient") {
  Sampler smp(92);
  for (const char* name : {"cp2", "gr:2,2"}) {
    const auto s = SymmetricSpace::parse(name);
    for (int k = 0; k < 10; ++k) {
      const CMatrix u = top_point(smp, s);
      const auto mv = moment_values(u, s);
      REQUIRE(mv.basis.size() >= 2);
      const double a = smp.normal();
      const double b = smp.normal();
      const double comb = moment_eval(u, a * mv.basis[0] + b * mv.basis[1], s);
      CHECK(comb == doctest::Approx(a * mv.values[0] + b * mv.values[1]).epsilon(1e-10).scale(1.0));
      const CMatrix kk = smp.random_k(s);
      const auto moved = moment_values(u * kk, s);
      for (std::size_t i = 0; i < mv.values.size(); ++i)
        CHECK(moved.values[i] == doctest::Approx(mv.values[i]).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("momentum is invariant along its own torus orbits") {
  Sampler smp(93);
  const auto s = SymmetricSpace::parse("cp2");
  for (int k = 0; k < 10; ++k) {
    const CMatrix u = top_point(smp, s);
    const auto mv = moment_values(u, s);
    const CMatrix t = exp_anti_hermitian(smp.normal() * mv.basis[0] + smp.normal() * mv.basis[1]);
    const auto moved = moment_values(t * u, s);
    for (std::size_t i = 0; i < mv.values.size(); ++i)
      CHECK(moved.values[i] == doctest::Approx(mv.values[i]).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("moment_eval rejects elements outside the layer torus") {
  const auto cp1 = SymmetricSpace::parse("cp1");
  const CMatrix off = mat(2, 2, {0.0, 1.0, -1.0, 0.0});
  CHECK(kind_of([&] { moment_eval(cp1_u(0.3), off, cp1); }) == ErrorKind::InvalidArgument);
  // on the equator the layer torus is trivial
  CHECK(kind_of([&] { moment_eval(cp1_u(std::polar(1.0, 0.2)), cp1.t_basis()[0], cp1); }) ==
        ErrorKind::InvalidArgument);
  CHECK(moment_values(cp1_u(std::polar(1.0, 0.2)), cp1).basis.empty());
}

TEST_CASE("torus vector field") {
  const auto cp1 = SymmetricSpace::parse("cp1");
  const CMatrix x = cp1.t_basis()[0];
  CHECK(torus_vector_field(cp1_u(0.4), CMatrix::Zero(2, 2), cp1).x.norm() == 0.0);
  CHECK(torus_vector_field(CMatrix::Identity(2, 2), x, cp1).x.norm() < 1e-15);

  Sampler smp(94);
  for (int k = 0; k < 10; ++k) {
    const Complex z = smp.cnormal(0.6);
    const CMatrix u = cp1_u(z);
    const auto field = torus_vector_field(u, x, cp1);
    CHECK(field.valid(cp1));
    // chart velocity of exp(-tX) u by central differences
    const double h = 1e-5;
    const Complex zp = chart_of(exp_anti_hermitian(-h * x) * u, cp1)(0, 0);
    const Complex zm = chart_of(exp_anti_hermitian(h * x) * u, cp1)(0, 0);
    const Complex dz = (zp - zm) / (2.0 * h);
    // tangent to the circle through z
    CHECK(std::abs((std::conj(z) * dz).real()) < 1e-8);
    CHECK(std::abs(dz - 2.0 * kI * z) < 1e-8);
    CMatrix dzm(1, 1);
    dzm(0, 0) = dz;
    CHECK((chart_tangent(CMatrix::Constant(1, 1, z), dzm, cp1) - field.x).norm() < 1e-8);
  }
}

TEST_CASE("hamiltonian residual") {
  const auto cp1 = SymmetricSpace::parse("cp1");
  CHECK(hamiltonian_residual(CMatrix::Identity(2, 2), cp1.t_basis()[0], cp1, 1e-5) < 1e-8);
  Sampler smp(95);
  for (int k = 0; k < 10; ++k) {
    const Complex z = std::polar(0.9 * std::sqrt(smp.uniform(0.0, 1.0)), smp.uniform(0.0, 6.283185307179586));
    CHECK(hamiltonian_residual(cp1_u(z), cp1.t_basis()[0], cp1, 1e-5) <= 1e-5);
  }
  for (const char* name : {"cp2", "gr:2,2"}) {
    const auto s = SymmetricSpace::parse(name);
    for (int k = 0; k < 5; ++k) {
      const CMatrix u = top_point(smp, s);
      for (const auto& x : moment_values(u, s).basis) CHECK(hamiltonian_residual(u, x, s, 1e-5) <= 1e-4);
    }
  }
  CHECK(kind_of([&] { hamiltonian_residual(cp1_u(0.1), cp1.t_basis()[0], cp1, 0.0); }) == ErrorKind::InvalidArgument);
}
