#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "birkpois/errors.hpp"
#include "birkpois/linalg.hpp"

namespace bptest {

using bp::CMatrix;
using bp::Complex;

inline double rel(const CMatrix& a, const CMatrix& b) { return (a - b).norm() / std::max(1.0, b.norm()); }

// Laplace expansion along the first row; independent of any LU code.
inline Complex cofactor_det(const CMatrix& a) {
  const auto n = a.rows();
  if (n == 1) return a(0, 0);
  Complex sum = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    CMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = a(r, c);
    sum += ((j % 2) ? -1.0 : 1.0) * a(0, j) * cofactor_det(minor);
  }
  return sum;
}

inline CMatrix mat(int rows, int cols, std::initializer_list<Complex> v) {
  CMatrix m(rows, cols);
  auto it = v.begin();
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = *it++;
  return m;
}

inline CMatrix unit(int n, int r, int c) {
  CMatrix e = CMatrix::Zero(n, n);
  e(r, c) = 1.0;
  return e;
}

template <class F>
bp::ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const bp::DomainError& e) {
    return e.kind();
  }
  FAIL("expected a DomainError");
  return bp::ErrorKind::InvalidArgument;
}

}  // namespace bptest
