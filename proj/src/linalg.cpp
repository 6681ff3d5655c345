#include "birkpois/linalg.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "birkpois/errors.hpp"

namespace bp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularInput: return "SingularInput";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::StratumAmbiguous: return "StratumAmbiguous";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::NotTraceless: return "NotTraceless";
    case ErrorKind::InvalidTangent: return "InvalidTangent";
    case ErrorKind::SymmetryViolation: return "SymmetryViolation";
    case ErrorKind::OnDegeneracyLocus: return "OnDegeneracyLocus";
    case ErrorKind::DimensionGuard: return "DimensionGuard";
    case ErrorKind::TrivialTorus: return "TrivialTorus";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

int permutation_parity(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int parity = 1;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(perm[i])) {
      seen[i] = true;
      ++len;
    }
    if (len % 2 == 0) parity = -parity;
  }
  return parity;
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  return canonical(std::move(perm));
}

SignedPermutation SignedPermutation::canonical(std::vector<int> perm) {
  SignedPermutation w;
  w.sign.assign(perm.size(), 1);
  if (!perm.empty()) w.sign.back() = permutation_parity(perm);
  w.perm = std::move(perm);
  return w;
}

bool SignedPermutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (perm[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

CMatrix SignedPermutation::matrix() const {
  CMatrix m = CMatrix::Zero(size(), size());
  for (int i = 0; i < size(); ++i)
    m(i, perm[static_cast<std::size_t>(i)]) = static_cast<double>(sign[static_cast<std::size_t>(i)]);
  return m;
}

std::string SignedPermutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < size(); ++i) {
    if (i) os << ',';
    os << (sign[static_cast<std::size_t>(i)] < 0 ? "-" : "") << perm[static_cast<std::size_t>(i)];
  }
  os << ']';
  return os.str();
}

CMatrix BirkhoffFactors::reconstruct() const { return l * w.matrix() * h * u_plus; }

namespace {

void require_square(const CMatrix& g, const char* op) {
  if (g.rows() != g.cols() || g.rows() < 1)
    throw DomainError(ErrorKind::InvalidArgument, std::string(op) + ": matrix must be square and non-empty");
  if (!g.allFinite()) throw DomainError(ErrorKind::InvalidArgument, std::string(op) + ": non-finite entry");
}

void require_unimodular(const CMatrix& g, double tol, const char* op) {
  const Complex det = g.determinant();
  if (std::abs(det) <= tol) throw DomainError(ErrorKind::SingularInput, std::string(op) + ": det(g) ~ 0");
  if (std::abs(det - 1.0) > tol) {
    std::ostringstream os;
    os << op << ": |det(g) - 1| = " << std::abs(det - 1.0) << " exceeds tol";
    throw DomainError(ErrorKind::NotUnimodular, os.str());
  }
}

}  // namespace

BirkhoffFactors birkhoff_factor(const CMatrix& g, double tol) {
  require_square(g, "birkhoff_factor");
  require_unimodular(g, tol, "birkhoff_factor");
  const Eigen::Index n = g.rows();
  const double ambiguous_below = std::sqrt(tol);

  CMatrix a = g;
  CMatrix l = CMatrix::Identity(n, n);
  CMatrix u = CMatrix::Identity(n, n);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<int> perm(static_cast<std::size_t>(n), -1);

  for (Eigen::Index j = 0; j < n; ++j) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      const double mag = std::abs(a(i, j));
      if (mag <= tol) {
        a(i, j) = 0.0;
        continue;
      }
      if (mag < ambiguous_below) {
        std::ostringstream os;
        os << "pivot magnitude " << mag << " at (" << i << "," << j << ") is inside the band (tol, sqrt(tol))";
        throw DomainError(ErrorKind::StratumAmbiguous, os.str());
      }
      pivot = i;
      break;
    }
    if (pivot < 0) throw DomainError(ErrorKind::SingularInput, "birkhoff_factor: no pivot in column");
    used[static_cast<std::size_t>(pivot)] = true;
    perm[static_cast<std::size_t>(pivot)] = static_cast<int>(j);

    const Complex p = a(pivot, j);
    for (Eigen::Index k = pivot + 1; k < n; ++k) {
      if (used[static_cast<std::size_t>(k)]) continue;
      const Complex f = a(k, j) / p;
      if (f == Complex(0.0)) continue;
      a.row(k) -= f * a.row(pivot);
      a(k, j) = 0.0;
      l(k, pivot) = f;
    }
    for (Eigen::Index c = j + 1; c < n; ++c) {
      const Complex f = a(pivot, c) / p;
      if (f == Complex(0.0)) continue;
      a.col(c) -= f * a.col(j);
      a(pivot, c) = 0.0;
      u(j, c) = f;
    }
  }

  BirkhoffFactors out;
  out.w = SignedPermutation::canonical(std::move(perm));
  out.l = std::move(l);
  out.u_plus = std::move(u);
  out.h = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const int col = out.w.perm[static_cast<std::size_t>(i)];
    out.h(col, col) = static_cast<double>(out.w.sign[static_cast<std::size_t>(i)]) * a(i, col);
  }
  return out;
}

IwasawaFactors iwasawa_factor(const CMatrix& g, double tol) {
  require_square(g, "iwasawa_factor");
  require_unimodular(g, tol, "iwasawa_factor");
  const CMatrix gram = g * g.adjoint();
  Eigen::LLT<CMatrix> llt(gram);
  if (llt.info() != Eigen::Success)
    throw DomainError(ErrorKind::SingularInput, "iwasawa_factor: g g^* is not positive definite");
  const CMatrix chol = llt.matrixL();
  const Eigen::Index n = g.rows();

  IwasawaFactors out;
  out.a = CMatrix::Zero(n, n);
  out.l = chol;
  for (Eigen::Index j = 0; j < n; ++j) {
    const double d = chol(j, j).real();
    if (!(d > 0.0)) throw DomainError(ErrorKind::SingularInput, "iwasawa_factor: zero Cholesky pivot");
    out.a(j, j) = d;
    out.l.col(j) /= d;
  }
  out.u = chol.triangularView<Eigen::Lower>().solve(g);
  return out;
}

double hermitian_defect(const CMatrix& p) { return (p - p.adjoint()).norm(); }

namespace {

Eigen::SelfAdjointEigenSolver<CMatrix> hpd_eigen(const CMatrix& p, const char* op) {
  require_square(p, op);
  const double scale = std::max(1.0, p.norm());
  if (hermitian_defect(p) > 1e-10 * scale)
    throw DomainError(ErrorKind::NotPositiveDefinite, std::string(op) + ": input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(p);
  if (es.info() != Eigen::Success || !(es.eigenvalues().minCoeff() > 0.0))
    throw DomainError(ErrorKind::NotPositiveDefinite, std::string(op) + ": non-positive eigenvalue");
  return es;
}

}  // namespace

CMatrix inv_sqrt_hpd(const CMatrix& p) {
  const auto es = hpd_eigen(p, "inv_sqrt_hpd");
  const RVector d = es.eigenvalues().cwiseSqrt().cwiseInverse();
  return es.eigenvectors() * d.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

CMatrix sqrt_hpd(const CMatrix& p) {
  const auto es = hpd_eigen(p, "sqrt_hpd");
  const RVector d = es.eigenvalues().cwiseSqrt();
  return es.eigenvectors() * d.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

PolarFactors polar_factor(const CMatrix& a) {
  require_square(a, "polar_factor");
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RVector& s = svd.singularValues();
  if (!(s.minCoeff() > 1e-14 * std::max(1.0, s.maxCoeff())))
    throw DomainError(ErrorKind::SingularInput, "polar_factor: singular input");
  const CMatrix& uu = svd.matrixU();
  return {uu * s.cast<Complex>().asDiagonal() * uu.adjoint(), uu * svd.matrixV().adjoint()};
}

std::vector<Complex> principal_minors(const CMatrix& g) {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(g.rows()));
  for (Eigen::Index k = 1; k <= g.rows(); ++k) out.push_back(g.topLeftCorner(k, k).determinant());
  return out;
}

CMatrix exp_anti_hermitian(const CMatrix& x) {
  const Complex i(0.0, 1.0);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(i * x);
  // x = -i * (V diag(e) V^*)
  CVector phases(es.eigenvalues().size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) phases(k) = std::exp(-i * es.eigenvalues()(k));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

CMatrix unipotent_sqrt(const CMatrix& v) {
  const Eigen::Index n = v.rows();
  const CMatrix nil = v - CMatrix::Identity(n, n);
  CMatrix out = CMatrix::Identity(n, n);
  CMatrix term = CMatrix::Identity(n, n);
  double coeff = 1.0;
  // binom(1/2, k) terms; nil^n = 0.
  for (Eigen::Index k = 1; k < n; ++k) {
    coeff *= (0.5 - static_cast<double>(k - 1)) / static_cast<double>(k);
    term = term * nil;
    out += coeff * term;
  }
  return out;
}

bool is_unitary(const CMatrix& u, double tol) {
  return (u * u.adjoint() - CMatrix::Identity(u.rows(), u.cols())).norm() <= tol;
}

}  // namespace bp
