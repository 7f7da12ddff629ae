#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "spectrachrome/graph.hpp"
#include "spectrachrome/matrix.hpp"
#include "spectrachrome/spectral.hpp"

namespace spectrachrome {

using Complex = std::complex<double>;

inline constexpr double kQuantumTol = 1e-10;

/// Dense square complex matrix, row-major (interleaved re/im).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix from_real(const Matrix& m);

  std::size_t dim() const noexcept { return dim_; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  /// Largest entry modulus.
  double max_abs() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Projectors P_{v,h} for v in [n], h in [c] (0-based), each d x d.
struct QuantumColoring {
  std::size_t n = 0;
  std::size_t c = 0;
  std::size_t d = 0;
  std::vector<ComplexMatrix> projectors;  // index v * c + h

  QuantumColoring() = default;
  QuantumColoring(std::size_t n, std::size_t c, std::size_t d);

  ComplexMatrix& at(Vertex v, std::size_t h) { return projectors[v * c + h]; }
  const ComplexMatrix& at(Vertex v, std::size_t h) const { return projectors[v * c + h]; }
};

enum class ViolationKind { NotHermitian, NotIdempotent, Completeness, Orthogonality };
const char* to_string(ViolationKind kind);

/// One failed condition. `w` equals `v` for per-vertex checks; `h` is -1 for completeness.
struct Violation {
  ViolationKind kind = ViolationKind::NotHermitian;
  Vertex v = 0;
  Vertex w = 0;
  int h = -1;
  double residual = 0.0;
};

struct Verdict {
  bool pass = true;
  double max_residual = 0.0;
  std::vector<Violation> violations;  // sorted by (v, w, h, kind)
};

/// Projector, completeness and distance-k orthogonality (v != w) checks.
/// Throws StructuralError when sizes are inconsistent with g.
Verdict verify_quantum_coloring(const QuantumColoring& qc, const Graph& g, int k, double tol = kQuantumTol);

/// d = 1 coloring with P_{v,h} = [colour(v) == h].
QuantumColoring lift_classical(std::span<const int> coloring, std::size_t c);

/// P_s = sum_v e_v e_v^T (x) P_{v,s}, each of dimension n d.
struct PinchingFamily {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<ComplexMatrix> projectors;

  std::size_t colors() const noexcept { return projectors.size(); }
  std::size_t dim() const noexcept { return n * d; }
};

/// Requires every P_{v,h} to be a projector and each vertex family complete;
/// throws DomainError otherwise, TheoremViolation if the sum is not I.
PinchingFamily build_pinching(const QuantumColoring& qc, double tol = kQuantumTol);

/// sum_s P_s X P_s.
ComplexMatrix pinch(const PinchingFamily& family, const ComplexMatrix& x);

/// M (x) I_d for a real n x n matrix.
ComplexMatrix lift(const Matrix& m, std::size_t d);

/// || C_P(A^l (x) I_d) ||: the literal annihilation residual. Pinching keeps the
/// block diagonal, so this equals max_v (A^l)_vv whenever that is nonzero.
double annihilation_residual(const PinchingFamily& family, const Graph& g, int l);

/// || C_P((A^l - Diag(A^l)) (x) I_d) ||: vanishes for every quantum k-distance
/// coloring and l <= k.
double offdiagonal_annihilation_residual(const PinchingFamily& family, const Graph& g, int l);

/// || C_P(E (x) I_d) - E (x) I_d || for E = diag(entries).
double diagonal_fix_residual(const PinchingFamily& family, std::span<const double> entries);

/// Recovers P_{v,s} from the diagonal blocks after checking block structure
/// (StructuralError) and the pinching preconditions for l <= k (TheoremViolation).
/// The extracted coloring must then verify, else TheoremViolation.
QuantumColoring pinching_to_coloring(const PinchingFamily& family, const Graph& g, int k,
                                     double tol = kQuantumTol);

/// U = sum_s w^s P_s with w = exp(2 pi i / c).
ComplexMatrix pinching_unitary(const PinchingFamily& family);

struct UnitaryIdentityCheck {
  double unitarity_residual = 0.0;  // || U U^dag - I ||
  double identity_residual = 0.0;   // || C_P(X) - (1/c) sum_{l=0}^{c-1} U^l X U^-l ||
};

UnitaryIdentityCheck pinching_unitary_identity(const PinchingFamily& family, const ComplexMatrix& x);

/// sum_{l=1}^{c-1} U^l X (U^dag)^l, which equals c C_P(X) - X.
ComplexMatrix shift_sum(const PinchingFamily& family, const ComplexMatrix& x);

struct PsdReport {
  bool psd = false;
  std::size_t rank = 0;
  double residual = 0.0;  // largest Schur-complement entry left after the last pivot
};

/// Pivoted Cholesky of a Hermitian matrix with relative threshold tol.
PsdReport psd_rank(const ComplexMatrix& m, double tol = 1e-9);

/// p(A) (x) I_d = p(B) - p(C), split by the sign of p on the spectrum.
struct SignSplit {
  ComplexMatrix positive_part;  // p(B)
  ComplexMatrix negative_part;  // p(C)
  ComplexMatrix positive_projector;
  ComplexMatrix negative_projector;
  std::size_t positive_count = 0;  // |{j : p(lambda_j) > 0}|
  std::size_t negative_count = 0;
  double reconstruction_residual = 0.0;  // || p(B) - p(C) - p(A) (x) I_d ||
  double compression_residual = 0.0;     // || P+ (p(A)(x)I) P+ - p(B) || + || P- (p(A)(x)I) P- + p(C) ||
};

SignSplit sign_split(const Poly& p, const Graph& g, std::size_t d, const SpectralOptions& options = {});

}  // namespace spectrachrome
