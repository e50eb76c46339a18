#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "csitq/quantum.hpp"

using namespace csitq;

namespace {
constexpr double kPi = 3.14159265358979323846;

PureState random_pure(const std::vector<int>& dims, Rng& rng) {
  int total = 1;
  for (int d : dims) total *= d;
  std::vector<cdouble> amp(total);
  for (auto& c : amp) c = cdouble(rng.next_double() - 0.5, rng.next_double() - 0.5);
  double nrm = norm(amp);
  for (auto& c : amp) c /= nrm;
  return PureState(std::move(amp), dims);
}
}  // namespace

TEST_CASE("bell pair amplitudes") {
  auto phi = bell_pair();
  const double w = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(phi.amp[0] - cdouble{w}) < 1e-15);
  CHECK(std::abs(phi.amp[1]) == 0.0);
  CHECK(std::abs(phi.amp[2]) == 0.0);
  CHECK(std::abs(phi.amp[3] - cdouble{w}) < 1e-15);
  CHECK(max_entangled(2).amp == phi.amp);
}

TEST_CASE("maximally mixed marginals") {
  for (int d : {2, 3, 4}) {
    auto rho = partial_trace(to_density(max_entangled(d)), {1});
    CHECK(rho.mat.max_abs_diff(ComplexMatrix::identity(d).scaled(1.0 / d)) < 1e-12);
    auto rho0 = partial_trace(to_density(max_entangled(d)), {0});
    CHECK(rho0.mat.max_abs_diff(ComplexMatrix::identity(d).scaled(1.0 / d)) < 1e-12);
  }
}

TEST_CASE("phase gate special cases") {
  CHECK(phase_gate(0.0).max_abs_diff(ComplexMatrix::identity(2)) == 0.0);
  auto z = phase_gate(kPi);
  CHECK(std::abs(z.at(1, 1) - cdouble{-1.0}) < 1e-15);
  CHECK(phase_gate(0.7).is_unitary(1e-14));
}

TEST_CASE("relative phase on a bell pair") {
  // R(-xi) x R(eta) |Phi> = (|00> + e^{i(eta-xi)} |11>)/sqrt(2).
  const double xi = 0.9, eta = 2.3;
  auto st = apply_local(apply_local(bell_pair(), phase_gate(-xi), 0), phase_gate(eta), 1);
  const double w = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(st.amp[0] - cdouble{w}) < 1e-14);
  CHECK(std::abs(st.amp[3] - w * std::polar(1.0, eta - xi)) < 1e-14);
}

TEST_CASE("plus minus measurement of a bell pair is fair") {
  auto branches = measure_in_basis(bell_pair(), plus_minus_basis(), 0);
  REQUIRE(branches.size() == 2);
  CHECK(branches[0].probability == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(branches[1].probability == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("matching probability follows the relative phase") {
  // Both sides measured in the +/- basis: P(agree) = cos^2(delta/2).
  for (double delta : {0.0, 0.3, kPi / 10, 0.9 * kPi, kPi}) {
    auto st = apply_local(bell_pair(), phase_gate(delta), 1);
    auto tx = measure_in_basis(st, plus_minus_basis(), 0);
    double agree = 0.0;
    for (int u = 0; u < 2; ++u) {
      if (!tx[u].post) continue;
      auto rx = measure_in_basis(*tx[u].post, plus_minus_basis(), 1);
      agree += tx[u].probability * rx[u].probability;
    }
    CHECK(agree == doctest::Approx(std::cos(delta / 2) * std::cos(delta / 2)).epsilon(1e-12));
  }
}

TEST_CASE("ricochet identity for random unitaries") {
  Rng rng(20240817);
  auto phi = max_entangled(4);
  for (int trial = 0; trial < 20; ++trial) {
    auto u = random_unitary(4, rng);
    auto left = apply_local(phi, u, 0);
    auto right = apply_local(phi, u.transpose(), 1);
    double diff = 0.0;
    for (int i = 0; i < phi.dim(); ++i) diff = std::max(diff, std::abs(left.amp[i] - right.amp[i]));
    CHECK(diff < 1e-12);
  }
}

TEST_CASE("transmitter basis measurement steers the conjugate state") {
  Rng rng(7);
  auto u = random_unitary(4, rng);
  auto phi = max_entangled(4);
  auto branches = measure_in_basis(phi, u, 0);
  for (int k = 0; k < 4; ++k) {
    REQUIRE(branches[k].post);
    CHECK(branches[k].probability == doctest::Approx(0.25).epsilon(1e-12));
    std::vector<cdouble> col(4);
    for (int r = 0; r < 4; ++r) col[r] = std::conj(u.at(r, k));
    auto marginal = partial_trace(to_density(*branches[k].post), {1});
    CHECK(marginal.mat.max_abs_diff(ComplexMatrix::outer(col, col)) < 1e-12);
  }
}

TEST_CASE("no signaling: local operations preserve the other marginal") {
  Rng rng(123);
  for (int trial = 0; trial < 50; ++trial) {
    auto dims = trial % 2 == 0 ? std::vector<int>{2, 2} : std::vector<int>{4, 4};
    auto st = random_pure(dims, rng);
    auto before = partial_trace(to_density(st), {1});

    auto u = random_unitary(dims[0], rng);
    auto after_unitary = partial_trace(to_density(apply_local(st, u, 0)), {1});
    CHECK(after_unitary.mat.max_abs_diff(before.mat) < 1e-12);

    // Averaging over a local measurement's branches also leaves it fixed.
    auto basis = random_unitary(dims[0], rng);
    auto branches = measure_in_basis(st, basis, 0);
    ComplexMatrix averaged(dims[1], dims[1]);
    for (const auto& b : branches) {
      if (!b.post) continue;
      averaged = averaged + partial_trace(to_density(*b.post), {1}).mat.scaled(b.probability);
    }
    CHECK(averaged.max_abs_diff(before.mat) < 1e-12);
  }
}

TEST_CASE("projective measurement is idempotent") {
  Rng rng(55);
  auto st = random_pure({4}, rng);
  auto basis = random_unitary(4, rng);
  auto branches = measure_in_basis(st, basis, 0);
  for (int k = 0; k < 4; ++k) {
    if (!branches[k].post) continue;
    auto again = measure_in_basis(*branches[k].post, basis, 0);
    CHECK(again[k].probability == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("measurement outcome distributions are normalized") {
  Rng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    auto st = random_pure({2, 4}, rng);
    auto basis = random_unitary(4, rng);
    auto branches = measure_in_basis(st, basis, 1);
    double total = 0.0;
    for (const auto& b : branches) {
      CHECK(b.probability >= -1e-15);
      total += b.probability;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("hermitian eigensolver") {
  Rng rng(31);
  for (int trial = 0; trial < 6; ++trial) {
    int n = 2 + trial;
    ComplexMatrix g(n, n);
    for (auto& c : g.a) c = cdouble(rng.next_double() - 0.5, rng.next_double() - 0.5);
    ComplexMatrix h = g + g.adjoint();
    ComplexMatrix vectors;
    auto values = hermitian_eigenvalues(h, &vectors);
    REQUIRE(static_cast<int>(values.size()) == n);
    CHECK(vectors.is_unitary(1e-10));
    for (int k = 0; k < n; ++k) {
      std::vector<cdouble> col(n);
      for (int r = 0; r < n; ++r) col[r] = vectors.at(r, k);
      auto hv = h.apply(col);
      for (int r = 0; r < n; ++r) {
        CHECK(std::abs(hv[r] - values[k] * col[r]) < 1e-10);
      }
      if (k > 0) CHECK(values[k] >= values[k - 1]);
    }
  }
}

TEST_CASE("density operator invariants") {
  // A valid state passes.
  auto rho = to_density(bell_pair());
  CHECK(rho.dim() == 4);
  // Trace != 1 rejected.
  CHECK_THROWS_AS(DensityOperator(ComplexMatrix::identity(2), {2}), std::invalid_argument);
  // Non-PSD rejected.
  ComplexMatrix bad = ComplexMatrix::identity(2);
  bad.at(0, 0) = 1.5;
  bad.at(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityOperator(bad, {2}), std::invalid_argument);
}

TEST_CASE("povm validation and measurement") {
  const double w = 1.0 / std::sqrt(2.0);
  std::vector<cdouble> plus = {w, w}, minus = {w, -w};
  Povm pm({ComplexMatrix::outer(plus, plus), ComplexMatrix::outer(minus, minus)});

  auto rho = to_density(bell_pair());
  auto branches = measure_povm(rho, pm, 0);
  CHECK(branches[0].probability == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(branches[1].probability == doctest::Approx(0.5).epsilon(1e-12));
  REQUIRE(branches[0].post);
  // Post state of a projector update stays a valid density operator with the
  // expected marginal.
  auto marginal = partial_trace(*branches[0].post, {1});
  CHECK(marginal.mat.max_abs_diff(ComplexMatrix::outer(plus, plus)) < 1e-12);

  // Elements that do not sum to identity are rejected.
  CHECK_THROWS_AS(Povm({ComplexMatrix::outer(plus, plus)}), std::invalid_argument);
}

TEST_CASE("partial trace of a product state") {
  Rng rng(8);
  auto a = random_pure({2}, rng);
  auto b = random_pure({3}, rng);
  std::vector<cdouble> prod;
  for (auto& x : a.amp) {
    for (auto& y : b.amp) prod.push_back(x * y);
  }
  auto rho = to_density(PureState(prod, {2, 3}));
  auto kept = partial_trace(rho, {0});
  CHECK(kept.mat.max_abs_diff(to_density(a).mat) < 1e-12);
  CHECK(std::abs(kept.mat.trace() - cdouble{1.0}) < 1e-12);
}

TEST_CASE("dimension guard") {
  CHECK_THROWS_AS(max_entangled(9), std::invalid_argument);  // 81 > 64
  CHECK_NOTHROW(max_entangled(8));
}
