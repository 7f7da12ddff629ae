#include "spectrachrome/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spectrachrome/errors.hpp"

namespace spectrachrome {

// Matrix ---------------------------------------------------------------------------

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<double> Matrix::diagonal() const {
  std::vector<double> d(std::min(rows_, cols_));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = (*this)(i, i);
  return d;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw StructuralError("matrix product shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      const double* brow = b.data_.data() + k * b.cols_;
      double* crow = c.data_.data() + i * c.cols_;
      for (std::size_t j = 0; j < b.cols_; ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw StructuralError("matrix sum shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-1.0) * b; }

Matrix operator*(double s, const Matrix& a) {
  Matrix c = a;
  for (double& x : c.data_) x *= s;
  return c;
}

// Eigensolver ----------------------------------------------------------------------

SymmetricEigen symmetric_eigen(const Matrix& input, int max_sweeps) {
  const std::size_t n = input.rows();
  if (n != input.cols()) throw StructuralError("symmetric_eigen needs a square matrix");
  Matrix a = input;
  Matrix v = Matrix::identity(n);

  auto off_norm2 = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
    return s;
  };
  double frob2 = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) frob2 += input(p, q) * input(p, q);
  const double stop2 = 1e-28 * frob2;

  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    if (off_norm2() <= stop2) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        // Skip rotations that cannot change the diagonal at working precision.
        if (sweep > 3 && std::abs(apq) * 1e18 < std::abs(app) &&
            std::abs(apq) * 1e18 < std::abs(aqq)) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = c * arp - s * arq;
          a(r, q) = a(q, r) = s * arp + c * arq;
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;

        for (std::size_t r = 0; r < n; ++r) {
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }
  if (off_norm2() > stop2) {
    const double residual = std::sqrt(off_norm2());
    throw NumericalError("Jacobi eigensolver did not converge after " + std::to_string(max_sweeps) +
                             " sweeps (off-diagonal norm " + std::to_string(residual) + ")",
                         residual);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });
  SymmetricEigen out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] = a(order[i], order[i]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, i) = v(r, order[i]);
  }
  return out;
}

Matrix adjacency_matrix(const Graph& g) {
  const std::size_t n = g.order();
  Matrix a(n, n);
  for (const auto& [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
  return a;
}

double Spectrum::spectral_radius() const {
  double r = 0.0;
  for (double x : eigenvalues) r = std::max(r, std::abs(x));
  return r;
}

std::size_t Spectrum::group_of(std::size_t i) const {
  std::size_t acc = 0;
  for (std::size_t j = 0; j < multiplicities.size(); ++j) {
    acc += multiplicities[j];
    if (i < acc) return j;
  }
  return multiplicities.size() - 1;
}

Spectrum eigendecompose(const Graph& g, const SpectralOptions& options) {
  SymmetricEigen eig = symmetric_eigen(adjacency_matrix(g), options.max_sweeps);
  Spectrum s;
  s.eigenvalues = std::move(eig.values);
  s.eigenvectors = std::move(eig.vectors);
  s.tolerance = options.grouping_factor * std::max(1.0, s.spectral_radius());

  // Runs of consecutive eigenvalues within tolerance form one group, represented by its mean.
  std::size_t start = 0;
  const std::size_t n = s.eigenvalues.size();
  for (std::size_t i = 1; i <= n; ++i) {
    if (i == n || s.eigenvalues[i - 1] - s.eigenvalues[i] > s.tolerance) {
      double sum = 0.0;
      for (std::size_t j = start; j < i; ++j) sum += s.eigenvalues[j];
      double mean = sum / static_cast<double>(i - start);
      if (std::abs(mean) <= s.tolerance) mean = 0.0;
      s.distinct.push_back(mean);
      s.multiplicities.push_back(i - start);
      start = i;
    }
  }
  return s;
}

Inertia inertia(const Spectrum& spectrum) {
  Inertia out;
  for (double x : spectrum.eigenvalues) {
    if (x > spectrum.tolerance) {
      ++out.positive;
    } else if (x < -spectrum.tolerance) {
      ++out.negative;
    } else {
      ++out.zero;
    }
  }
  return out;
}

Inertia inertia(const Graph& g, const SpectralOptions& options) {
  return inertia(eigendecompose(g, options));
}

// Polynomials ----------------------------------------------------------------------

Poly::Poly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

double Poly::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::scaled(double factor, double shift) const {
  std::vector<double> c = coeffs_;
  for (double& x : c) x *= factor;
  c[0] += shift;
  return Poly(std::move(c));
}

double eval_poly_scalar(const Poly& p, double x) { return p(x); }

Matrix walk_diagonals(const Graph& g, int k) {
  if (k < 0) throw DomainError("walk_diagonals needs k >= 0");
  const std::size_t n = g.order();
  Matrix out(n, static_cast<std::size_t>(k) + 1);
  const Matrix a = adjacency_matrix(g);
  Matrix power = Matrix::identity(n);
  for (int l = 0; l <= k; ++l) {
    if (l > 0) power = power * a;
    for (std::size_t u = 0; u < n; ++u) out(u, l) = power(u, u);
  }
  return out;
}

namespace {

PolyStats spectral_part(const Poly& p, const Spectrum& spectrum) {
  PolyStats st;
  st.at_lambda1 = p(spectrum.eigenvalues.front());
  for (std::size_t i = 1; i < spectrum.eigenvalues.size(); ++i) {
    const double v = p(spectrum.eigenvalues[i]);
    st.min_nonprincipal = st.min_nonprincipal ? std::min(*st.min_nonprincipal, v) : v;
  }
  return st;
}

}  // namespace

PolyStats poly_stats(const Poly& p, const Matrix& walk_diag, const Spectrum& spectrum) {
  PolyStats st = spectral_part(p, spectrum);
  const std::size_t terms = std::min<std::size_t>(p.coeffs().size(), walk_diag.cols());
  for (std::size_t i = terms; i < p.coeffs().size(); ++i) {
    if (p[i] != 0.0) throw DomainError("polynomial degree exceeds the precomputed walk diagonals");
  }
  for (std::size_t u = 0; u < walk_diag.rows(); ++u) {
    double v = 0.0;
    for (std::size_t i = 0; i < terms; ++i) v += p[i] * walk_diag(u, i);
    if (u == 0) {
      st.max_diagonal = st.min_diagonal = v;
    } else {
      st.max_diagonal = std::max(st.max_diagonal, v);
      st.min_diagonal = std::min(st.min_diagonal, v);
    }
  }
  return st;
}

PolyEvaluation eval_poly_matrix(const Poly& p, const Graph& g, const Spectrum& spectrum) {
  const std::size_t n = g.order();
  const Matrix a = adjacency_matrix(g);
  Matrix value(n, n);
  Matrix power = Matrix::identity(n);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i > 0) power = power * a;
    if (p[i] != 0.0) value = value + p[i] * power;
  }
  PolyStats st = spectral_part(p, spectrum);
  const std::vector<double> diag = value.diagonal();
  st.max_diagonal = *std::max_element(diag.begin(), diag.end());
  st.min_diagonal = *std::min_element(diag.begin(), diag.end());
  return {std::move(value), st};
}

}  // namespace spectrachrome
