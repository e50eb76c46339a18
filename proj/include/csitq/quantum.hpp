#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "csitq/rng.hpp"

namespace csitq {

using cdouble = std::complex<double>;

/// Dense complex matrix, row-major. Sized for the small composite spaces the
/// protocols need; dimension is guarded at 64.
struct ComplexMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<cdouble> a;

  ComplexMatrix() = default;
  ComplexMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  cdouble& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const cdouble& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static ComplexMatrix identity(int n);
  static ComplexMatrix outer(const std::vector<cdouble>& u, const std::vector<cdouble>& v);

  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  ComplexMatrix scaled(cdouble factor) const;
  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  std::vector<cdouble> apply(const std::vector<cdouble>& v) const;
  cdouble trace() const;
  double max_abs_diff(const ComplexMatrix& rhs) const;

  bool is_hermitian(double tol) const;
  bool is_unitary(double tol) const;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

cdouble inner(const std::vector<cdouble>& u, const std::vector<cdouble>& v);
double norm(const std::vector<cdouble>& v);

/// Eigenvalues (ascending) of a Hermitian matrix via cyclic complex Jacobi
/// rotations; optionally the matching orthonormal eigenvectors as columns.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, ComplexMatrix* vectors = nullptr);

/// Hermitian PSD square root via eigendecomposition (negative eigenvalues
/// within the -1e-10 floor are clamped to zero).
ComplexMatrix hermitian_sqrt(const ComplexMatrix& h);

/// Normalized state vector over a composite space. dims lists the subsystem
/// dimensions in tensor order; their product is the vector length.
struct PureState {
  std::vector<cdouble> amp;
  std::vector<int> dims;

  PureState() = default;
  PureState(std::vector<cdouble> amplitudes, std::vector<int> dims);

  int dim() const { return static_cast<int>(amp.size()); }
};

/// Density operator with Hermiticity, unit-trace, and PSD invariants checked
/// at construction.
struct DensityOperator {
  ComplexMatrix mat;
  std::vector<int> dims;

  DensityOperator() = default;
  DensityOperator(ComplexMatrix m, std::vector<int> dims);

  int dim() const { return mat.rows; }
};

/// Positive operators summing to identity.
struct Povm {
  std::vector<ComplexMatrix> elements;

  explicit Povm(std::vector<ComplexMatrix> elements);
};

PureState bell_pair();
PureState max_entangled(int d);
ComplexMatrix phase_gate(double theta);  // diag(1, e^{i theta})
/// Columns |+> and |->; outcome 0 is |+>, outcome 1 is |->.
ComplexMatrix plus_minus_basis();

DensityOperator to_density(const PureState& state);
PureState apply_local(const PureState& state, const ComplexMatrix& op, int subsystem);
DensityOperator apply_local(const DensityOperator& rho, const ComplexMatrix& op, int subsystem);

struct PureBranch {
  double probability = 0.0;
  std::optional<PureState> post;  // present when probability is not ~0
};

/// Projective measurement of one subsystem in an orthonormal basis (columns
/// of a unitary). Branch k corresponds to basis column k.
std::vector<PureBranch> measure_in_basis(const PureState& state, const ComplexMatrix& basis,
                                         int subsystem);

/// Measurement defined by explicit projectors on one subsystem.
std::vector<PureBranch> measure_projectors(const PureState& state,
                                           const std::vector<ComplexMatrix>& projectors,
                                           int subsystem);

struct MixedBranch {
  double probability = 0.0;
  std::optional<DensityOperator> post;
};

/// POVM measurement on one subsystem of a density operator; post states via
/// the sqrt(E) rho sqrt(E) update.
std::vector<MixedBranch> measure_povm(const DensityOperator& rho, const Povm& povm,
                                      int subsystem);

/// Partial trace keeping the listed subsystems (ascending order preserved).
DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep);

/// Haar-ish random unitary from QR of a Gaussian matrix; used by the
/// property suites.
ComplexMatrix random_unitary(int d, Rng& rng);

}  // namespace csitq
