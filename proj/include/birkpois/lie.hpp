#pragma once

#include "birkpois/linalg.hpp"

namespace bp {

/// Triangular decomposition of sl(n, C): n_- strictly lower, h traceless
/// diagonal, n_+ strictly upper. t = i * (real traceless diagonal), h_R = real
/// traceless diagonal.
class TriangularContext {
 public:
  explicit TriangularContext(int n);

  int n() const { return n_; }

  bool in_n_minus(const CMatrix& z, double tol = 1e-12) const;
  bool in_n_plus(const CMatrix& z, double tol = 1e-12) const;
  bool in_h(const CMatrix& z, double tol = 1e-12) const;
  bool in_t(const CMatrix& z, double tol = 1e-12) const;
  bool in_h_real(const CMatrix& z, double tol = 1e-12) const;

 private:
  int n_;
};

struct TriangularParts {
  CMatrix lower;
  CMatrix diag;
  CMatrix upper;
};

inline constexpr double kTraceTol = 1e-10;

/// Returns z - tr(z)/n * I when |tr z| <= kTraceTol * max(1, |z|); throws NotTraceless otherwise.
CMatrix recenter_traceless(const CMatrix& z);

TriangularParts tri_project(const CMatrix& z);

/// H(Z_- + Z_h + Z_+) = -i Z_- + i Z_+.
CMatrix hilbert_transform(const CMatrix& z);

/// Component in u along g = n_- + h_R + u: -(Z_+)^* + Z_t + Z_+.
CMatrix proj_u(const CMatrix& z);

/// Invariant form tr(XY).
Complex trace_form(const CMatrix& x, const CMatrix& y);

/// Right dressing action u . g0 = u(u g0), the unitary Iwasawa factor.
CMatrix dressing_act(const CMatrix& u, const CMatrix& g0, double tol = kDefaultTol);

inline CMatrix ad(const CMatrix& g, const CMatrix& x) { return g * x * g.inverse(); }

}  // namespace bp
