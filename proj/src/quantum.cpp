#include "spectrachrome/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

#include "spectrachrome/errors.hpp"

namespace spectrachrome {

// ComplexMatrix -------------------------------------------------------------------

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_real(const Matrix& m) {
  if (m.rows() != m.cols()) throw StructuralError("complex matrices are square");
  ComplexMatrix out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw StructuralError("complex matrix dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()));
  }
}

}  // namespace

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (Complex& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      const Complex x = a(i, l);
      if (x == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += x * b(l, j);
    }
  return out;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.dim(), m = b.dim();
  ComplexMatrix out(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Complex x = a(i, j);
      if (x == Complex{}) continue;
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < m; ++s) out(i * m + r, j * m + s) = x * b(r, s);
    }
  return out;
}

// Colorings ------------------------------------------------------------------------

QuantumColoring::QuantumColoring(std::size_t n, std::size_t c, std::size_t d)
    : n(n), c(c), d(d), projectors(n * c, ComplexMatrix(d)) {}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NotHermitian:
      return "hermitian";
    case ViolationKind::NotIdempotent:
      return "idempotent";
    case ViolationKind::Completeness:
      return "completeness";
    case ViolationKind::Orthogonality:
      return "orthogonality";
  }
  return "?";
}

namespace {

void check_shape(const QuantumColoring& qc) {
  if (qc.c == 0 || qc.d == 0) throw StructuralError("quantum coloring needs c >= 1 and d >= 1");
  if (qc.projectors.size() != qc.n * qc.c) {
    throw StructuralError("expected " + std::to_string(qc.n * qc.c) + " projectors, got " +
                          std::to_string(qc.projectors.size()));
  }
  for (std::size_t i = 0; i < qc.projectors.size(); ++i) {
    if (qc.projectors[i].dim() != qc.d) {
      throw StructuralError("projector (v=" + std::to_string(i / qc.c) + ", h=" + std::to_string(i % qc.c) +
                            ") has dimension " + std::to_string(qc.projectors[i].dim()) + ", expected " +
                            std::to_string(qc.d));
    }
  }
}

// Projector and completeness checks shared by verification and pinching.
void local_checks(const QuantumColoring& qc, double tol, Verdict& out) {
  auto record = [&](ViolationKind kind, Vertex v, Vertex w, int h, double residual) {
    out.max_residual = std::max(out.max_residual, residual);
    if (residual > tol) out.violations.push_back({kind, v, w, h, residual});
  };
  const ComplexMatrix id = ComplexMatrix::identity(qc.d);
  for (Vertex v = 0; v < qc.n; ++v) {
    ComplexMatrix sum(qc.d);
    for (std::size_t h = 0; h < qc.c; ++h) {
      const ComplexMatrix& p = qc.at(v, h);
      record(ViolationKind::NotHermitian, v, v, static_cast<int>(h), (p - p.adjoint()).max_abs());
      record(ViolationKind::NotIdempotent, v, v, static_cast<int>(h), (p * p - p).max_abs());
      sum += p;
    }
    record(ViolationKind::Completeness, v, v, -1, (sum - id).max_abs());
  }
}

void finish(Verdict& v) {
  std::sort(v.violations.begin(), v.violations.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.v, a.w, a.h, a.kind) < std::tie(b.v, b.w, b.h, b.kind);
  });
  v.pass = v.violations.empty();
}

}  // namespace

Verdict verify_quantum_coloring(const QuantumColoring& qc, const Graph& g, int k, double tol) {
  check_shape(qc);
  if (qc.n != g.order()) {
    throw StructuralError("coloring has " + std::to_string(qc.n) + " vertices, graph has " +
                          std::to_string(g.order()));
  }
  if (k < 1) throw DomainError("distance parameter k must be >= 1");
  Verdict out;
  local_checks(qc, tol, out);
  const DistanceMatrix dist = distances(g);
  for (Vertex v = 0; v < qc.n; ++v)
    for (Vertex w = v + 1; w < qc.n; ++w) {
      if (!dist.reachable(v, w) || dist.at(v, w) > k) continue;
      for (std::size_t h = 0; h < qc.c; ++h) {
        const double r = (qc.at(v, h) * qc.at(w, h)).max_abs();
        out.max_residual = std::max(out.max_residual, r);
        if (r > tol) out.violations.push_back({ViolationKind::Orthogonality, v, w, static_cast<int>(h), r});
      }
    }
  finish(out);
  return out;
}

QuantumColoring lift_classical(std::span<const int> coloring, std::size_t c) {
  if (coloring.empty()) throw DomainError("empty coloring");
  QuantumColoring qc(coloring.size(), c, 1);
  for (Vertex v = 0; v < coloring.size(); ++v) {
    if (coloring[v] < 0 || static_cast<std::size_t>(coloring[v]) >= c) {
      throw DomainError("vertex " + std::to_string(v) + " has colour " + std::to_string(coloring[v]) +
                        " outside [0, " + std::to_string(c) + ")");
    }
    qc.at(v, static_cast<std::size_t>(coloring[v]))(0, 0) = 1.0;
  }
  return qc;
}

// Pinching -------------------------------------------------------------------------

PinchingFamily build_pinching(const QuantumColoring& qc, double tol) {
  check_shape(qc);
  Verdict local;
  local_checks(qc, tol, local);
  if (!local.violations.empty()) {
    finish(local);
    const Violation& first = local.violations.front();
    throw DomainError(std::string("projector family fails the ") + to_string(first.kind) + " check at vertex " +
                      std::to_string(first.v) + " (residual " + std::to_string(first.residual) + ")");
  }
  PinchingFamily f{qc.n, qc.d, {}};
  const std::size_t d = qc.d;
  for (std::size_t s = 0; s < qc.c; ++s) {
    ComplexMatrix p(qc.n * d);
    for (Vertex v = 0; v < qc.n; ++v)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) p(v * d + i, v * d + j) = qc.at(v, s)(i, j);
    f.projectors.push_back(std::move(p));
  }
  ComplexMatrix sum(f.dim());
  for (const ComplexMatrix& p : f.projectors) sum += p;
  const double r = (sum - ComplexMatrix::identity(f.dim())).max_abs();
  if (r > tol) throw TheoremViolation("pinching projectors do not resolve the identity", r);
  return f;
}

ComplexMatrix pinch(const PinchingFamily& family, const ComplexMatrix& x) {
  if (x.dim() != family.dim()) {
    throw StructuralError("pinch: matrix dimension " + std::to_string(x.dim()) + ", family dimension " +
                          std::to_string(family.dim()));
  }
  ComplexMatrix out(x.dim());
  for (const ComplexMatrix& p : family.projectors) out += p * x * p;
  return out;
}

ComplexMatrix lift(const Matrix& m, std::size_t d) {
  return kron(ComplexMatrix::from_real(m), ComplexMatrix::identity(d));
}

namespace {

Matrix adjacency_power(const Graph& g, int l) {
  const Matrix a = adjacency_matrix(g);
  Matrix out = Matrix::identity(g.order());
  for (int i = 0; i < l; ++i) out = out * a;
  return out;
}

}  // namespace

double annihilation_residual(const PinchingFamily& family, const Graph& g, int l) {
  return pinch(family, lift(adjacency_power(g, l), family.d)).max_abs();
}

double offdiagonal_annihilation_residual(const PinchingFamily& family, const Graph& g, int l) {
  Matrix m = adjacency_power(g, l);
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = 0.0;
  return pinch(family, lift(m, family.d)).max_abs();
}

double diagonal_fix_residual(const PinchingFamily& family, std::span<const double> entries) {
  if (entries.size() != family.n) throw StructuralError("diagonal has the wrong length");
  Matrix e(family.n, family.n);
  for (std::size_t i = 0; i < family.n; ++i) e(i, i) = entries[i];
  const ComplexMatrix x = lift(e, family.d);
  return (pinch(family, x) - x).max_abs();
}

QuantumColoring pinching_to_coloring(const PinchingFamily& family, const Graph& g, int k, double tol) {
  if (family.n != g.order()) throw StructuralError("pinching family and graph disagree on n");
  if (family.colors() == 0) throw StructuralError("empty pinching family");
  const std::size_t d = family.d;
  for (std::size_t s = 0; s < family.colors(); ++s) {
    const ComplexMatrix& p = family.projectors[s];
    if (p.dim() != family.dim()) throw StructuralError("pinching projector has the wrong dimension");
    for (std::size_t i = 0; i < p.dim(); ++i)
      for (std::size_t j = 0; j < p.dim(); ++j)
        if (i / d != j / d && std::abs(p(i, j)) > tol) {
          throw StructuralError("pinching projector " + std::to_string(s) + " is not block diagonal at (" +
                                std::to_string(i) + ", " + std::to_string(j) + ")");
        }
  }
  const double scale = std::max(1.0, static_cast<double>(g.order()));
  for (int l = 1; l <= k; ++l) {
    const double r = offdiagonal_annihilation_residual(family, g, l);
    if (r > tol * std::pow(scale, l)) {
      throw TheoremViolation("pinching does not annihilate the off-diagonal part of A^" + std::to_string(l), r);
    }
  }
  for (Vertex v = 0; v < family.n; ++v) {
    std::vector<double> e(family.n, 0.0);
    e[v] = 1.0;
    const double r = diagonal_fix_residual(family, e);
    if (r > tol) throw TheoremViolation("pinching does not fix e_v e_v^T (x) I", r);
  }

  QuantumColoring qc(family.n, family.colors(), d);
  for (std::size_t s = 0; s < family.colors(); ++s)
    for (Vertex v = 0; v < family.n; ++v)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) qc.at(v, s)(i, j) = family.projectors[s](v * d + i, v * d + j);

  const Verdict verdict = verify_quantum_coloring(qc, g, k, tol);
  if (!verdict.pass) {
    throw TheoremViolation("extracted projectors are not a quantum " + std::to_string(k) + "-distance coloring",
                           verdict.max_residual);
  }
  return qc;
}

// Unitary average ------------------------------------------------------------------

ComplexMatrix pinching_unitary(const PinchingFamily& family) {
  const std::size_t c = family.colors();
  ComplexMatrix u(family.dim());
  for (std::size_t s = 1; s <= c; ++s) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(c);
    u += std::polar(1.0, angle) * family.projectors[s - 1];
  }
  return u;
}

UnitaryIdentityCheck pinching_unitary_identity(const PinchingFamily& family, const ComplexMatrix& x) {
  const ComplexMatrix u = pinching_unitary(family);
  const ComplexMatrix ud = u.adjoint();
  UnitaryIdentityCheck out;
  out.unitarity_residual = (u * ud - ComplexMatrix::identity(family.dim())).max_abs();

  ComplexMatrix average(x.dim());
  ComplexMatrix ul = ComplexMatrix::identity(family.dim());
  ComplexMatrix udl = ul;
  for (std::size_t l = 0; l < family.colors(); ++l) {
    average += ul * x * udl;
    ul = ul * u;
    udl = udl * ud;
  }
  average *= 1.0 / static_cast<double>(family.colors());
  out.identity_residual = (pinch(family, x) - average).max_abs();
  return out;
}

ComplexMatrix shift_sum(const PinchingFamily& family, const ComplexMatrix& x) {
  const ComplexMatrix u = pinching_unitary(family);
  const ComplexMatrix ud = u.adjoint();
  ComplexMatrix sum(x.dim());
  ComplexMatrix ul = u;
  ComplexMatrix udl = ud;
  for (std::size_t l = 1; l < family.colors(); ++l) {
    sum += ul * x * udl;
    ul = ul * u;
    udl = udl * ud;
  }
  return sum;
}

// Positive semidefiniteness ----------------------------------------------------------

PsdReport psd_rank(const ComplexMatrix& m, double tol) {
  const std::size_t n = m.dim();
  ComplexMatrix s = m;
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(m(i, i)));
  const double threshold = tol * std::max(scale, 1.0);

  PsdReport out;
  out.psd = true;
  std::vector<bool> used(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!used[i] && (piv == n || s(i, i).real() > s(piv, piv).real())) piv = i;
    if (piv == n) break;
    if (s(piv, piv).real() <= threshold) break;
    used[piv] = true;
    ++out.rank;
    const Complex d = s(piv, piv);
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      const Complex f = s(i, piv) / d;
      for (std::size_t j = 0; j < n; ++j)
        if (!used[j]) s(i, j) -= f * s(piv, j);
    }
  }
  // Whatever is left must be (numerically) zero for a PSD matrix of this rank.
  double rest = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!used[i] && !used[j]) rest = std::max(rest, std::abs(s(i, j)));
  out.residual = rest;
  out.psd = rest <= threshold * static_cast<double>(std::max<std::size_t>(n, 1));
  return out;
}

SignSplit sign_split(const Poly& p, const Graph& g, std::size_t d, const SpectralOptions& options) {
  if (d == 0) throw DomainError("dimension d must be >= 1");
  const Spectrum s = eigendecompose(g, options);
  const std::size_t n = g.order();
  std::vector<double> values;
  double scale = 1.0;
  for (double lambda : s.eigenvalues) {
    values.push_back(p(lambda));
    scale = std::max(scale, std::abs(values.back()));
  }
  const double tol = 1e-9 * scale;

  Matrix pos(n, n), neg(n, n), ppos(n, n), pneg(n, n);
  SignSplit out;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = values[i];
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const double outer = s.eigenvectors(a, i) * s.eigenvectors(b, i);
        if (v > tol) {
          pos(a, b) += v * outer;
          ppos(a, b) += outer;
        } else if (v < -tol) {
          neg(a, b) -= v * outer;
          pneg(a, b) += outer;
        }
      }
    if (v > tol) ++out.positive_count;
    if (v < -tol) ++out.negative_count;
  }
  out.positive_part = lift(pos, d);
  out.negative_part = lift(neg, d);
  out.positive_projector = lift(ppos, d);
  out.negative_projector = lift(pneg, d);

  // p(A) evaluated directly, not from the eigenvectors, so the split is checked independently.
  const Matrix a = adjacency_matrix(g);
  Matrix direct(n, n);
  Matrix power = Matrix::identity(n);
  for (int i = 0; i <= p.degree_bound(); ++i) {
    direct = direct + p[static_cast<std::size_t>(i)] * power;
    power = power * a;
  }
  const ComplexMatrix pa = lift(direct, d);
  out.reconstruction_residual = (out.positive_part - out.negative_part - pa).max_abs();
  out.compression_residual =
      (out.positive_projector * pa * out.positive_projector - out.positive_part).max_abs() +
      (out.negative_projector * pa * out.negative_projector + out.negative_part).max_abs();
  return out;
}

}  // namespace spectrachrome
