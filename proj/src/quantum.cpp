#include "csitq/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace csitq {

namespace {

constexpr int kMaxDim = 64;
constexpr double kNormTol = 1e-12;
constexpr double kPsdFloor = -1e-10;

void check_dim(int d) {
  if (d <= 0 || d > kMaxDim) throw std::invalid_argument("dimension outside [1,64]");
}

int product(const std::vector<int>& dims) {
  int p = 1;
  for (int d : dims) {
    if (d <= 0) throw std::invalid_argument("subsystem dimension must be positive");
    p *= d;
  }
  return p;
}

/// Full-space operator acting as `op` on one subsystem and identity elsewhere.
ComplexMatrix embed_local(const ComplexMatrix& op, const std::vector<int>& dims, int subsystem) {
  if (subsystem < 0 || subsystem >= static_cast<int>(dims.size())) {
    throw std::invalid_argument("subsystem index out of range");
  }
  if (op.rows != dims[subsystem] || op.cols != dims[subsystem]) {
    throw std::invalid_argument("operator dimension does not match subsystem");
  }
  ComplexMatrix full = ComplexMatrix::identity(1);
  for (size_t k = 0; k < dims.size(); ++k) {
    full = kron(full, static_cast<int>(k) == subsystem ? op : ComplexMatrix::identity(dims[k]));
  }
  return full;
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::outer(const std::vector<cdouble>& u, const std::vector<cdouble>& v) {
  ComplexMatrix m(static_cast<int>(u.size()), static_cast<int>(v.size()));
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = u[r] * std::conj(v[c]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (cols != rhs.rows) throw std::invalid_argument("matrix product shape mismatch");
  ComplexMatrix out(rows, rhs.cols);
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < cols; ++k) {
      cdouble aik = at(i, k);
      if (aik == cdouble{}) continue;
      for (int j = 0; j < rhs.cols; ++j) out.at(i, j) += aik * rhs.at(k, j);
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  if (rows != rhs.rows || cols != rhs.cols) throw std::invalid_argument("matrix add shape mismatch");
  ComplexMatrix out(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) out.a[i] = a[i] + rhs.a[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  if (rows != rhs.rows || cols != rhs.cols) throw std::invalid_argument("matrix sub shape mismatch");
  ComplexMatrix out(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) out.a[i] = a[i] - rhs.a[i];
  return out;
}

ComplexMatrix ComplexMatrix::scaled(cdouble factor) const {
  ComplexMatrix out(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) out.a[i] = a[i] * factor;
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols, rows);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) out.at(c, r) = std::conj(at(r, c));
  }
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols, rows);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) out.at(c, r) = at(r, c);
  }
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) out.a[i] = std::conj(a[i]);
  return out;
}

std::vector<cdouble> ComplexMatrix::apply(const std::vector<cdouble>& v) const {
  if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("matrix apply shape mismatch");
  std::vector<cdouble> out(rows);
  for (int r = 0; r < rows; ++r) {
    cdouble acc{};
    for (int c = 0; c < cols; ++c) acc += at(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

cdouble ComplexMatrix::trace() const {
  cdouble t{};
  for (int i = 0; i < std::min(rows, cols); ++i) t += at(i, i);
  return t;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& rhs) const {
  if (rows != rhs.rows || cols != rhs.cols) throw std::invalid_argument("shape mismatch");
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - rhs.a[i]));
  return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (rows != cols) return false;
  for (int r = 0; r < rows; ++r) {
    for (int c = r; c < cols; ++c) {
      if (std::abs(at(r, c) - std::conj(at(c, r))) > tol) return false;
    }
  }
  return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
  if (rows != cols) return false;
  return (adjoint() * *this).max_abs_diff(identity(rows)) <= tol;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows * b.rows, a.cols * b.cols);
  for (int ar = 0; ar < a.rows; ++ar) {
    for (int ac = 0; ac < a.cols; ++ac) {
      cdouble f = a.at(ar, ac);
      if (f == cdouble{}) continue;
      for (int br = 0; br < b.rows; ++br) {
        for (int bc = 0; bc < b.cols; ++bc) {
          out.at(ar * b.rows + br, ac * b.cols + bc) = f * b.at(br, bc);
        }
      }
    }
  }
  return out;
}

cdouble inner(const std::vector<cdouble>& u, const std::vector<cdouble>& v) {
  if (u.size() != v.size()) throw std::invalid_argument("inner: length mismatch");
  cdouble acc{};
  for (size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

double norm(const std::vector<cdouble>& v) {
  double s = 0.0;
  for (const cdouble& c : v) s += std::norm(c);
  return std::sqrt(s);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, ComplexMatrix* vectors) {
  if (h.rows != h.cols) throw std::invalid_argument("hermitian_eigenvalues: not square");
  if (!h.is_hermitian(1e-10)) throw std::invalid_argument("hermitian_eigenvalues: not Hermitian");
  const int n = h.rows;
  ComplexMatrix a = h;
  ComplexMatrix v = ComplexMatrix::identity(n);

  // Cyclic complex Jacobi: each sweep annihilates every off-diagonal pair
  // with a unitary 2x2 rotation a <- G^dagger a G.
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0, fro = 0.0;
    for (const cdouble& c : a.a) fro += std::norm(c);
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += std::norm(a.at(p, q));
    }
    if (off <= fro * 1e-28) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        cdouble apq = a.at(p, q);
        double mag = std::abs(apq);
        if (mag < 1e-300) continue;
        cdouble phase = apq / mag;  // e^{i phi}
        double app = a.at(p, p).real();
        double aqq = a.at(q, q).real();
        double tau = (app - aqq) / (2.0 * mag);
        double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        // Columns: col_p <- c*col_p + s*conj(phase)*col_q ;
        //          col_q <- -s*phase*col_p + c*col_q.
        for (int k = 0; k < n; ++k) {
          cdouble akp = a.at(k, p), akq = a.at(k, q);
          a.at(k, p) = c * akp + s * std::conj(phase) * akq;
          a.at(k, q) = -s * phase * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          cdouble apk = a.at(p, k), aqk = a.at(q, k);
          a.at(p, k) = c * apk + s * phase * aqk;
          a.at(q, k) = -s * std::conj(phase) * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          cdouble vkp = v.at(k, p), vkq = v.at(k, q);
          v.at(k, p) = c * vkp + s * std::conj(phase) * vkq;
          v.at(k, q) = -s * phase * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a.at(i, i).real() < a.at(j, j).real(); });
  std::vector<double> values(n);
  for (int i = 0; i < n; ++i) values[i] = a.at(order[i], order[i]).real();
  if (vectors) {
    *vectors = ComplexMatrix(n, n);
    for (int c = 0; c < n; ++c) {
      for (int r = 0; r < n; ++r) vectors->at(r, c) = v.at(r, order[c]);
    }
  }
  return values;
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& h) {
  ComplexMatrix vectors;
  std::vector<double> values = hermitian_eigenvalues(h, &vectors);
  const int n = h.rows;
  ComplexMatrix out(n, n);
  for (int k = 0; k < n; ++k) {
    if (values[k] < kPsdFloor) throw std::invalid_argument("hermitian_sqrt: matrix not PSD");
    double root = values[k] > 0.0 ? std::sqrt(values[k]) : 0.0;
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        out.at(r, c) += root * vectors.at(r, k) * std::conj(vectors.at(c, k));
      }
    }
  }
  return out;
}

PureState::PureState(std::vector<cdouble> amplitudes, std::vector<int> dims_)
    : amp(std::move(amplitudes)), dims(std::move(dims_)) {
  int d = product(dims);
  check_dim(d);
  if (d != static_cast<int>(amp.size())) {
    throw std::invalid_argument("PureState: dims do not match amplitude length");
  }
  for (const cdouble& c : amp) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("PureState: non-finite amplitude");
    }
  }
  if (std::abs(norm(amp) - 1.0) > kNormTol) {
    throw std::invalid_argument("PureState: not normalized");
  }
}

DensityOperator::DensityOperator(ComplexMatrix m, std::vector<int> dims_)
    : mat(std::move(m)), dims(std::move(dims_)) {
  int d = product(dims);
  check_dim(d);
  if (mat.rows != d || mat.cols != d) {
    throw std::invalid_argument("DensityOperator: dims do not match matrix");
  }
  if (!mat.is_hermitian(1e-12)) throw std::invalid_argument("DensityOperator: not Hermitian");
  if (std::abs(mat.trace() - cdouble{1.0}) > 1e-12) {
    throw std::invalid_argument("DensityOperator: trace is not 1");
  }
  auto values = hermitian_eigenvalues(mat);
  if (values.front() < kPsdFloor) {
    throw std::invalid_argument("DensityOperator: not positive semidefinite");
  }
}

Povm::Povm(std::vector<ComplexMatrix> elements_) : elements(std::move(elements_)) {
  if (elements.empty()) throw std::invalid_argument("Povm: no elements");
  int d = elements.front().rows;
  ComplexMatrix sum(d, d);
  for (const auto& e : elements) {
    if (e.rows != d || e.cols != d) throw std::invalid_argument("Povm: shape mismatch");
    if (!e.is_hermitian(1e-10)) throw std::invalid_argument("Povm: element not Hermitian");
    if (hermitian_eigenvalues(e).front() < kPsdFloor) {
      throw std::invalid_argument("Povm: element not PSD");
    }
    sum = sum + e;
  }
  if (sum.max_abs_diff(ComplexMatrix::identity(d)) > 1e-10) {
    throw std::invalid_argument("Povm: elements do not sum to identity");
  }
}

PureState bell_pair() { return max_entangled(2); }

PureState max_entangled(int d) {
  if (d < 2) throw std::invalid_argument("max_entangled: d must be >= 2");
  check_dim(d * d);
  std::vector<cdouble> amp(static_cast<size_t>(d) * d);
  const double w = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) amp[static_cast<size_t>(i) * d + i] = w;
  return PureState(std::move(amp), {d, d});
}

ComplexMatrix phase_gate(double theta) {
  ComplexMatrix m(2, 2);
  m.at(0, 0) = 1.0;
  m.at(1, 1) = std::polar(1.0, theta);
  return m;
}

ComplexMatrix plus_minus_basis() {
  const double w = 1.0 / std::sqrt(2.0);
  ComplexMatrix m(2, 2);
  m.at(0, 0) = w;
  m.at(1, 0) = w;
  m.at(0, 1) = w;
  m.at(1, 1) = -w;
  return m;
}

DensityOperator to_density(const PureState& state) {
  return DensityOperator(ComplexMatrix::outer(state.amp, state.amp), state.dims);
}

PureState apply_local(const PureState& state, const ComplexMatrix& op, int subsystem) {
  if (!op.is_unitary(1e-10)) throw std::invalid_argument("apply_local: operator not unitary");
  ComplexMatrix full = embed_local(op, state.dims, subsystem);
  return PureState(full.apply(state.amp), state.dims);
}

DensityOperator apply_local(const DensityOperator& rho, const ComplexMatrix& op, int subsystem) {
  if (!op.is_unitary(1e-10)) throw std::invalid_argument("apply_local: operator not unitary");
  ComplexMatrix full = embed_local(op, rho.dims, subsystem);
  return DensityOperator(full * rho.mat * full.adjoint(), rho.dims);
}

std::vector<PureBranch> measure_in_basis(const PureState& state, const ComplexMatrix& basis,
                                         int subsystem) {
  if (!basis.is_unitary(1e-10)) {
    throw std::invalid_argument("measure_in_basis: basis columns not orthonormal");
  }
  std::vector<ComplexMatrix> projectors;
  projectors.reserve(basis.cols);
  for (int k = 0; k < basis.cols; ++k) {
    std::vector<cdouble> col(basis.rows);
    for (int r = 0; r < basis.rows; ++r) col[r] = basis.at(r, k);
    projectors.push_back(ComplexMatrix::outer(col, col));
  }
  return measure_projectors(state, projectors, subsystem);
}

std::vector<PureBranch> measure_projectors(const PureState& state,
                                           const std::vector<ComplexMatrix>& projectors,
                                           int subsystem) {
  std::vector<PureBranch> branches;
  branches.reserve(projectors.size());
  double total = 0.0;
  for (const auto& proj : projectors) {
    ComplexMatrix full = embed_local(proj, state.dims, subsystem);
    std::vector<cdouble> projected = full.apply(state.amp);
    double nrm = norm(projected);
    PureBranch branch;
    branch.probability = nrm * nrm;
    total += branch.probability;
    if (nrm > 1e-9) {
      for (cdouble& c : projected) c /= nrm;
      branch.post = PureState(std::move(projected), state.dims);
    }
    branches.push_back(std::move(branch));
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("measure_projectors: outcome probabilities do not sum to 1");
  }
  return branches;
}

std::vector<MixedBranch> measure_povm(const DensityOperator& rho, const Povm& povm,
                                      int subsystem) {
  std::vector<MixedBranch> branches;
  branches.reserve(povm.elements.size());
  double total = 0.0;
  for (const auto& element : povm.elements) {
    ComplexMatrix full = embed_local(element, rho.dims, subsystem);
    double prob = (full * rho.mat).trace().real();
    prob = std::max(prob, 0.0);
    total += prob;
    MixedBranch branch;
    branch.probability = prob;
    if (prob > 1e-9) {
      ComplexMatrix root = embed_local(hermitian_sqrt(element), rho.dims, subsystem);
      ComplexMatrix post = (root * rho.mat * root).scaled(1.0 / prob);
      branch.post = DensityOperator(post, rho.dims);
    }
    branches.push_back(std::move(branch));
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("measure_povm: outcome probabilities do not sum to 1");
  }
  return branches;
}

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep) {
  const int n = static_cast<int>(rho.dims.size());
  std::vector<char> kept(n, 0);
  for (int k : keep) {
    if (k < 0 || k >= n) throw std::invalid_argument("partial_trace: subsystem out of range");
    if (kept[k]) throw std::invalid_argument("partial_trace: duplicate subsystem");
    kept[k] = 1;
  }
  std::vector<int> keep_sorted;
  std::vector<int> traced;
  for (int k = 0; k < n; ++k) (kept[k] ? keep_sorted : traced).push_back(k);
  if (keep_sorted.empty()) throw std::invalid_argument("partial_trace: nothing kept");

  std::vector<int> kept_dims;
  int kept_total = 1, traced_total = 1;
  for (int k : keep_sorted) {
    kept_dims.push_back(rho.dims[k]);
    kept_total *= rho.dims[k];
  }
  for (int k : traced) traced_total *= rho.dims[k];

  // Strides of each subsystem in the flattened composite index.
  std::vector<int> stride(n, 1);
  for (int k = n - 2; k >= 0; --k) stride[k] = stride[k + 1] * rho.dims[k + 1];

  auto compose = [&](int kept_index, int traced_index) {
    int full = 0;
    int ki = kept_index, ti = traced_index;
    for (int pos = static_cast<int>(keep_sorted.size()) - 1; pos >= 0; --pos) {
      int k = keep_sorted[pos];
      full += (ki % rho.dims[k]) * stride[k];
      ki /= rho.dims[k];
    }
    for (int pos = static_cast<int>(traced.size()) - 1; pos >= 0; --pos) {
      int k = traced[pos];
      full += (ti % rho.dims[k]) * stride[k];
      ti /= rho.dims[k];
    }
    return full;
  };

  ComplexMatrix out(kept_total, kept_total);
  for (int r = 0; r < kept_total; ++r) {
    for (int c = 0; c < kept_total; ++c) {
      cdouble acc{};
      for (int t = 0; t < traced_total; ++t) {
        acc += rho.mat.at(compose(r, t), compose(c, t));
      }
      out.at(r, c) = acc;
    }
  }
  return DensityOperator(std::move(out), kept_dims);
}

ComplexMatrix random_unitary(int d, Rng& rng) {
  check_dim(d);
  // Gram-Schmidt on columns of a complex Gaussian matrix (Box-Muller from
  // the documented uniform stream).
  auto gauss = [&rng]() {
    double u1 = rng.next_double();
    double u2 = rng.next_double();
    while (u1 <= 0.0) u1 = rng.next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  };
  std::vector<std::vector<cdouble>> cols(d, std::vector<cdouble>(d));
  for (int c = 0; c < d; ++c) {
    for (int r = 0; r < d; ++r) cols[c][r] = cdouble(gauss(), gauss());
  }
  for (int c = 0; c < d; ++c) {
    for (int prev = 0; prev < c; ++prev) {
      cdouble overlap = inner(cols[prev], cols[c]);
      for (int r = 0; r < d; ++r) cols[c][r] -= overlap * cols[prev][r];
    }
    double nrm = norm(cols[c]);
    if (nrm < 1e-12) throw std::runtime_error("random_unitary: degenerate sample");
    for (int r = 0; r < d; ++r) cols[c][r] /= nrm;
  }
  ComplexMatrix u(d, d);
  for (int c = 0; c < d; ++c) {
    for (int r = 0; r < d; ++r) u.at(r, c) = cols[c][r];
  }
  return u;
}

}  // namespace csitq
