#include "birkpois/symspace.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "birkpois/errors.hpp"

namespace bp {

namespace {

const Complex kI(0.0, 1.0);

double form_re(const CMatrix& x, const CMatrix& y) { return -(x.transpose().cwiseProduct(y)).sum().real(); }

// Gram-Schmidt against -Re tr(XY); drops vectors that collapse below 1e-10.
std::vector<CMatrix> orthonormalize(const std::vector<CMatrix>& in) {
  std::vector<CMatrix> out;
  for (const auto& v : in) {
    CMatrix w = v;
    for (const auto& b : out) w -= form_re(b, w) * b;
    const double nrm2 = form_re(w, w);
    if (nrm2 <= 1e-20) continue;
    w /= std::sqrt(nrm2);
    out.push_back(std::move(w));
  }
  return out;
}

CMatrix elem(int dim, int r, int c, Complex v) {
  CMatrix e = CMatrix::Zero(dim, dim);
  e(r, c) = v;
  return e;
}

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last || v < 1)
    throw DomainError(ErrorKind::InvalidArgument, "bad preset '" + std::string(whole) + "'");
  return v;
}

}  // namespace

SymmetricSpace SymmetricSpace::grassmannian(int m, int n) {
  if (m < 1 || n < 1) throw DomainError(ErrorKind::InvalidArgument, "grassmannian: m, n must be >= 1");
  SymmetricSpace s;
  s.kind_ = SpaceKind::Grassmannian;
  s.m_ = m;
  s.n_ = n;
  s.dim_ = m + n;
  s.name_ = m == 1 ? "cp" + std::to_string(n) : "gr:" + std::to_string(m) + "," + std::to_string(n);
  s.involution_ = CMatrix::Identity(s.dim_, s.dim_);
  for (int i = m; i < s.dim_; ++i) s.involution_(i, i) = -1.0;
  s.build_bases();
  return s;
}

SymmetricSpace SymmetricSpace::group_case(int n) {
  if (n < 2) throw DomainError(ErrorKind::InvalidArgument, "group_case: n must be >= 2");
  SymmetricSpace s;
  s.kind_ = SpaceKind::GroupCase;
  s.m_ = n;
  s.n_ = n;
  s.dim_ = 2 * n;
  s.name_ = n == 2 ? "group:su2" : "group:" + std::to_string(n);
  s.involution_ = CMatrix::Zero(s.dim_, s.dim_);
  s.involution_.topRightCorner(n, n).setIdentity();
  s.involution_.bottomLeftCorner(n, n).setIdentity();
  s.build_bases();
  return s;
}

SymmetricSpace SymmetricSpace::parse(std::string_view preset) {
  if (preset == "cp1") return projective(1);
  if (preset == "cp2") return projective(2);
  if (preset == "su2" || preset == "group:su2") return group_case(2);
  if (preset.starts_with("cpn:")) return projective(parse_int(preset.substr(4), preset));
  if (preset.starts_with("cp")) return projective(parse_int(preset.substr(2), preset));
  if (preset.starts_with("group:")) return group_case(parse_int(preset.substr(6), preset));
  if (preset.starts_with("gr:")) {
    const auto rest = preset.substr(3);
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos)
      throw DomainError(ErrorKind::InvalidArgument, "bad preset '" + std::string(preset) + "'");
    return grassmannian(parse_int(rest.substr(0, comma), preset), parse_int(rest.substr(comma + 1), preset));
  }
  throw DomainError(ErrorKind::InvalidArgument, "unknown preset '" + std::string(preset) + "'");
}

void SymmetricSpace::build_bases() {
  // blocks of positions where u lives: whole matrix, or the two diagonal blocks
  std::vector<std::pair<int, int>> blocks;
  if (kind_ == SpaceKind::Grassmannian)
    blocks.emplace_back(0, dim_);
  else
    blocks = {{0, n_}, {n_, n_}};

  std::vector<CMatrix> raw;
  const double r2 = std::sqrt(0.5);
  for (const auto& [start, size] : blocks) {
    for (int j = start; j < start + size; ++j)
      for (int k = j + 1; k < start + size; ++k) {
        raw.push_back(r2 * (elem(dim_, j, k, 1.0) - elem(dim_, k, j, 1.0)));
        raw.push_back(r2 * (elem(dim_, j, k, kI) + elem(dim_, k, j, kI)));
      }
    for (int j = start; j + 1 < start + size; ++j) {
      CMatrix t = elem(dim_, j, j, kI) - elem(dim_, j + 1, j + 1, kI);
      t_basis_.push_back(t);
      raw.push_back(t);
    }
  }
  u_basis_ = orthonormalize(raw);

  std::vector<CMatrix> kraw;
  std::vector<CMatrix> praw;
  for (const auto& b : u_basis_) {
    kraw.push_back(project_k(b));
    praw.push_back(project_ip(b));
  }
  k_basis_ = orthonormalize(kraw);
  ip_basis_ = orthonormalize(praw);
}

CMatrix SymmetricSpace::project_ip(const CMatrix& z) const {
  const CMatrix s = z + theta(z.adjoint());
  return 0.25 * (s - s.adjoint());
}

CMatrix SymmetricSpace::project_k(const CMatrix& z) const {
  const CMatrix a = 0.5 * (z - z.adjoint());
  return 0.5 * (a + theta(a));
}

CMatrix SymmetricSpace::project_iu(const CMatrix& z) const { return 0.5 * (z + z.adjoint()); }

bool SymmetricSpace::respects_structure(const CMatrix& g, double tol) const {
  if (g.rows() != dim_ || g.cols() != dim_) return false;
  if (kind_ == SpaceKind::Grassmannian) return true;
  return g.topRightCorner(n_, n_).norm() <= tol && g.bottomLeftCorner(n_, n_).norm() <= tol;
}

namespace {

bool traceless_blocks(const SymmetricSpace& s, const CMatrix& x, double tol) {
  if (s.kind() == SpaceKind::Grassmannian) return std::abs(x.trace()) <= tol;
  const int n = s.n();
  return std::abs(x.topLeftCorner(n, n).trace()) <= tol && std::abs(x.bottomRightCorner(n, n).trace()) <= tol;
}

}  // namespace

bool SymmetricSpace::in_ip(const CMatrix& x, double tol) const {
  if (!respects_structure(x, tol)) return false;
  return (x + x.adjoint()).norm() <= tol && traceless_blocks(*this, x, tol) && (theta(x) + x).norm() <= tol;
}

bool SymmetricSpace::in_k(const CMatrix& x, double tol) const {
  if (!respects_structure(x, tol)) return false;
  return (x + x.adjoint()).norm() <= tol && traceless_blocks(*this, x, tol) && (theta(x) - x).norm() <= tol;
}

RVector SymmetricSpace::ip_coords(const CMatrix& x) const {
  RVector c(dim_ip());
  for (int i = 0; i < dim_ip(); ++i) c(i) = form_re(ip_basis_[static_cast<std::size_t>(i)], x);
  return c;
}

CMatrix SymmetricSpace::from_ip_coords(const RVector& c) const {
  if (c.size() != dim_ip()) throw DomainError(ErrorKind::InvalidArgument, "from_ip_coords: size mismatch");
  CMatrix x = CMatrix::Zero(dim_, dim_);
  for (int i = 0; i < dim_ip(); ++i) x += c(i) * ip_basis_[static_cast<std::size_t>(i)];
  return x;
}

bool TangentClass::valid(const SymmetricSpace& space, double tol) const {
  return is_unitary(u, tol) && space.in_ip(x, tol);
}

CMatrix to_block(const GroupPair& p) {
  const auto n = p.first.rows();
  if (p.second.rows() != n) throw DomainError(ErrorKind::InvalidArgument, "to_block: size mismatch");
  CMatrix g = CMatrix::Zero(2 * n, 2 * n);
  g.topLeftCorner(n, n) = p.first;
  g.bottomRightCorner(n, n) = p.second;
  return g;
}

GroupPair from_block(const CMatrix& g) {
  if (g.rows() % 2 != 0) throw DomainError(ErrorKind::InvalidArgument, "from_block: odd dimension");
  const auto n = g.rows() / 2;
  return {g.topLeftCorner(n, n), g.bottomRightCorner(n, n)};
}

GroupPair theta_pair(const GroupPair& p) { return {p.second, p.first}; }

CMatrix group_iso(const CMatrix& k1, const CMatrix& k2) { return k1 * k2.adjoint(); }

CMatrix cartan_embed(const CMatrix& u, const SymmetricSpace& space) { return u * space.theta(u).adjoint(); }

CMatrix canonical_rep(const CMatrix& z, const SymmetricSpace& space) {
  if (space.kind() == SpaceKind::GroupCase) {
    // chart point is k itself: (k, I) represents psi^{-1}(k)
    if (z.rows() != space.n() || z.cols() != space.n())
      throw DomainError(ErrorKind::InvalidArgument, "canonical_rep: group point must be n x n");
    return to_block({z, CMatrix::Identity(space.n(), space.n())});
  }
  const int m = space.m();
  const int n = space.n();
  if (z.rows() != n || z.cols() != m)
    throw DomainError(ErrorKind::InvalidArgument, "canonical_rep: chart point must be n x m");
  if (!z.allFinite()) throw DomainError(ErrorKind::InvalidArgument, "canonical_rep: non-finite entry");
  const CMatrix a = inv_sqrt_hpd(CMatrix::Identity(m, m) + z.adjoint() * z);
  const CMatrix d = inv_sqrt_hpd(CMatrix::Identity(n, n) + z * z.adjoint());
  CMatrix u(m + n, m + n);
  u.topLeftCorner(m, m) = a;
  u.topRightCorner(m, n) = -a * z.adjoint();
  u.bottomLeftCorner(n, m) = z * a;
  u.bottomRightCorner(n, n) = d;
  return u;
}

CMatrix canonical_rep(const CVector& z, const SymmetricSpace& space) {
  return canonical_rep(CMatrix(z), space);
}

CMatrix chart_of(const CMatrix& u, const SymmetricSpace& space) {
  if (space.kind() == SpaceKind::GroupCase) {
    const auto p = from_block(u);
    return group_iso(p.first, p.second);
  }
  const int m = space.m();
  const CMatrix a = u.topLeftCorner(m, m);
  return u.bottomLeftCorner(space.n(), m) * a.inverse();
}

namespace {

void require_grassmann(const SymmetricSpace& space, const char* op) {
  if (space.kind() != SpaceKind::Grassmannian)
    throw DomainError(ErrorKind::InvalidArgument, std::string(op) + ": graph chart exists only for Grassmannians");
}

}  // namespace

CMatrix chart_tangent(const CMatrix& z, const CMatrix& dz, const SymmetricSpace& space) {
  require_grassmann(space, "chart_tangent");
  const int m = space.m();
  const int n = space.n();
  if (dz.rows() != n || dz.cols() != m) throw DomainError(ErrorKind::InvalidArgument, "chart_tangent: shape");
  CMatrix g(m + n, m);
  g.topRows(m).setIdentity();
  g.bottomRows(n) = z;
  CMatrix dg = CMatrix::Zero(m + n, m);
  dg.bottomRows(n) = dz;
  const CMatrix mm = (CMatrix::Identity(m, m) + z.adjoint() * z).inverse();
  const CMatrix dm = -mm * (dz.adjoint() * z + z.adjoint() * dz) * mm;
  const CMatrix dp = dg * mm * g.adjoint() + g * dm * g.adjoint() + g * mm * dg.adjoint();
  const CMatrix dphi = 2.0 * dp * space.involution();
  const CMatrix u = canonical_rep(z, space);
  return space.project_ip(0.5 * u.adjoint() * dphi * space.theta(u));
}

std::vector<CMatrix> chart_real_basis(int rows, int cols) {
  std::vector<CMatrix> out;
  for (const Complex part : {Complex(1.0, 0.0), kI})
    for (int j = 0; j < rows; ++j)
      for (int k = 0; k < cols; ++k) {
        CMatrix e = CMatrix::Zero(rows, cols);
        e(j, k) = part;
        out.push_back(std::move(e));
      }
  return out;
}

RMatrix chart_differential(const CMatrix& z, const SymmetricSpace& space) {
  require_grassmann(space, "chart_differential");
  const auto basis = chart_real_basis(space.n(), space.m());
  RMatrix d(space.dim_ip(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c)
    d.col(static_cast<Eigen::Index>(c)) = space.ip_coords(chart_tangent(z, basis[c], space));
  return d;
}

CMatrix chart_cotangent(const CMatrix& z, const CMatrix& v, const SymmetricSpace& space) {
  require_grassmann(space, "chart_cotangent");
  if (v.rows() != space.m() || v.cols() != space.n())
    throw DomainError(ErrorKind::InvalidArgument, "chart_cotangent: covector must be m x n");
  const auto basis = chart_real_basis(space.n(), space.m());
  RVector a(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c)
    a(static_cast<Eigen::Index>(c)) = 2.0 * (v * basis[c]).trace().real();
  const RMatrix d = chart_differential(z, space);
  // tr(X Y) = -x.y in ip coordinates, so x = -(D^T)^{-1} a
  const RVector x = -d.transpose().partialPivLu().solve(a);
  return space.from_ip_coords(x);
}

}  // namespace bp
