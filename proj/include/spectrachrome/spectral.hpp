#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "spectrachrome/graph.hpp"
#include "spectrachrome/matrix.hpp"

namespace spectrachrome {

struct SpectralOptions {
  /// Eigenvalues closer than factor * max(1, spectral radius) are grouped.
  double grouping_factor = 1e-8;
  int max_sweeps = 100;
};

/// Adjacency spectrum: full sorted list plus distinct values with multiplicities.
struct Spectrum {
  std::vector<double> eigenvalues;  // lambda_1 >= ... >= lambda_n
  std::vector<double> distinct;     // theta_0 > ... > theta_d
  std::vector<std::size_t> multiplicities;
  /// Column i is the unit eigenvector of eigenvalues[i].
  Matrix eigenvectors;
  double tolerance = 0.0;

  std::size_t order() const noexcept { return eigenvalues.size(); }
  std::size_t distinct_count() const noexcept { return distinct.size(); }
  double spectral_radius() const;
  /// Index into `distinct` of the group containing eigenvalues[i].
  std::size_t group_of(std::size_t i) const;
};

struct SymmetricEigen {
  std::vector<double> values;  // descending
  Matrix vectors;              // columns
};

/// Cyclic Jacobi on a dense symmetric matrix. Throws NumericalError if the
/// off-diagonal mass has not vanished after `max_sweeps` sweeps.
SymmetricEigen symmetric_eigen(const Matrix& a, int max_sweeps = 100);

Matrix adjacency_matrix(const Graph& g);

Spectrum eigendecompose(const Graph& g, const SpectralOptions& options = {});

struct Inertia {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;
};

Inertia inertia(const Spectrum& spectrum);
Inertia inertia(const Graph& g, const SpectralOptions& options = {});

/// Real polynomial a_0 + a_1 x + ... + a_k x^k with a fixed degree bound k.
class Poly {
 public:
  Poly() : coeffs_{0.0} {}
  explicit Poly(std::vector<double> coeffs);

  static Poly zero(int degree_bound) { return Poly(std::vector<double>(degree_bound + 1, 0.0)); }

  int degree_bound() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double operator[](std::size_t i) const { return coeffs_[i]; }
  double operator()(double x) const;

  Poly scaled(double factor, double shift = 0.0) const;

 private:
  std::vector<double> coeffs_;
};

double eval_poly_scalar(const Poly& p, double x);

/// Diagonal and spectral statistics of p(A) entering every bound.
struct PolyStats {
  double max_diagonal = 0.0;  // W(p)
  double min_diagonal = 0.0;  // w(p)
  /// min over positions 2..n of p(lambda_i); empty when n == 1.
  std::optional<double> min_nonprincipal;
  double at_lambda1 = 0.0;  // p(lambda_1)
};

struct PolyEvaluation {
  Matrix value;  // p(A)
  PolyStats stats;
};

PolyEvaluation eval_poly_matrix(const Poly& p, const Graph& g, const Spectrum& spectrum);

/// Row u holds (A^0)_uu, ..., (A^k)_uu.
Matrix walk_diagonals(const Graph& g, int k);

/// Stats from precomputed walk diagonals, skipping the p(A) product.
PolyStats poly_stats(const Poly& p, const Matrix& walk_diag, const Spectrum& spectrum);

}  // namespace spectrachrome
