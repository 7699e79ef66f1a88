#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

#include "bigreedy/io.hpp"
#include "bigreedy/objective.hpp"
#include "oracles.hpp"

using namespace bigreedy;

namespace {

QuadraticObjective one_dim_hump() {
  // F(x) = x - x^2, maximum 0.25 at x = 0.5.
  Matrix H(1, 1);
  H << -2.0;
  Vector h(1);
  h << 1.0;
  return QuadraticObjective(H, h, 0.0);
}

QuadraticObjective two_dim_xor() {
  // F(x) = x1 + x2 - 2 x1 x2.
  Matrix H(2, 2);
  H << 0.0, -2.0, -2.0, 0.0;
  Vector h(2);
  h << 1.0, 1.0;
  return QuadraticObjective(H, h, 0.0);
}

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<int>(xs.size()));
  int i = 0;
  for (const double x : xs) v[i++] = x;
  return v;
}

template <class M>
bool same_bits(const M& a, const M& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) {
      if (a(r, c) != b(r, c)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("quadratic evaluation matches hand-computed values") {
  const auto hump = one_dim_hump();
  CHECK(hump.value(vec({0.5})) == doctest::Approx(0.25).epsilon(1e-15));

  const auto xo = two_dim_xor();
  CHECK(xo.value(vec({1.0, 0.0})) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(xo.value(vec({0.5, 0.5})) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("quadratic evaluation validates dimension and box membership") {
  const auto xo = two_dim_xor();
  CHECK_THROWS_WITH_AS(xo.value(vec({0.5, 0.5, 0.5})), "dimension mismatch: expected n=2, got 3",
                       std::invalid_argument);
  CHECK_THROWS_AS(xo.value(vec({-0.01, 0.5})), std::domain_error);
  CHECK_THROWS_AS(xo.value(vec({0.5, 1.01})), std::domain_error);
  // Round-off-sized excursions (within 1e-12) are tolerated.
  CHECK(xo.value(vec({-5e-13, 1.0})) == doctest::Approx(1.0));
}

TEST_CASE("quadratic constructor rejects malformed models") {
  Matrix H(2, 2);
  H << 0.0, 1.0, -1.0, 0.0;  // not symmetric
  CHECK_THROWS_AS(QuadraticObjective(H, vec({0.0, 0.0}), 0.0), std::invalid_argument);
  Matrix H1(1, 1);
  H1 << 0.0;
  CHECK_THROWS_AS(QuadraticObjective(H1, vec({0.0, 0.0}), 0.0), std::invalid_argument);
}

TEST_CASE("softmax evaluation matches closed forms") {
  // log det of the identity perturbation at x = 0 is exactly zero.
  const auto model = gen_softmax(6, 42);
  CHECK(model.value(Vector::Zero(6)) == 0.0);

  // n=1 with L = [e]: at x=1 the value is log e = 1.
  Matrix Le(1, 1);
  Le << std::exp(1.0);
  const SoftmaxObjective unit(Le);
  CHECK(unit.value(vec({1.0})) == doctest::Approx(1.0).epsilon(1e-14));

  // n=2 diagonal model evaluated by a direct 2x2 determinant.
  Matrix L2 = Matrix::Zero(2, 2);
  L2(0, 0) = 2.0;
  L2(1, 1) = 2.0;
  const SoftmaxObjective diag2(L2);
  CHECK(diag2.value(vec({0.5, 1.0})) ==
        doctest::Approx(std::log(1.5) + std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("softmax factorization rejects a matrix that is not positive definite") {
  Matrix bad(1, 1);
  bad << -1.0;  // det(diag(x)(L-I)+I) = 1 - 2x is negative for x > 1/2
  CHECK_THROWS_WITH_AS(SoftmaxObjective{bad}, "softmax matrix not positive definite at x",
                       std::domain_error);
}

TEST_CASE("partial derivatives match closed forms") {
  const auto hump = one_dim_hump();
  CHECK(hump.partial(vec({0.5}), 0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(hump.partial(vec({0.0}), 0) == doctest::Approx(1.0).epsilon(1e-15));

  Matrix L2 = Matrix::Zero(2, 2);
  L2(0, 0) = 2.0;
  L2(1, 1) = 2.0;
  const SoftmaxObjective diag2(L2);
  // At the origin M = I, so the derivative is (L - I)_11 = 1.
  CHECK(diag2.partial(vec({0.0, 0.0}), 0) == doctest::Approx(1.0).epsilon(1e-12));
  // Analytic and direct finite-difference derivatives agree at an interior point.
  const Vector probe = vec({0.001, 0.001});
  CHECK(diag2.partial(probe, 0) ==
        doctest::Approx(oracles::fd_partial(diag2, probe, 0, 1e-6)).epsilon(1e-6));
}

TEST_CASE("black-box objectives fall back to finite differences") {
  const FunctionObjective cube(1, 3.0, [](const Vector& x) { return x[0] * x[0] * x[0]; });
  CHECK_FALSE(cube.has_analytic_partial());
  // Central difference in the interior.
  CHECK(cube.partial(vec({0.5}), 0) == doctest::Approx(0.75).epsilon(1e-8));
  // One-sided at the boundary, pointing into the box.
  CHECK(cube.partial(vec({0.0}), 0) == doctest::Approx(0.0).epsilon(1e-8));
  CHECK(cube.partial(vec({1.0}), 0) == doctest::Approx(3.0).epsilon(1e-4));

  // Supplying a derivative hook switches the analytic path on.
  const FunctionObjective with_grad(
      1, 3.0, [](const Vector& x) { return x[0] * x[0] * x[0]; },
      [](const Vector& x, int) { return 3.0 * x[0] * x[0]; });
  CHECK(with_grad.has_analytic_partial());
  CHECK(with_grad.partial(vec({0.5}), 0) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("random quadratic instances satisfy their construction contract") {
  for (const Variant variant : {Variant::strong, Variant::weak}) {
    const char* variant_name = variant == Variant::strong ? "strong" : "weak";
    CAPTURE(variant_name);
    const auto model = gen_nqp(40, 2024, variant);
    const int n = model.dimension();

    // F(0) + F(1) = 0 by the choice of c.
    CHECK(std::abs(model.value(Vector::Zero(n)) + model.value(Vector::Ones(n))) <= 1e-9);

    // Sign pattern and range of H.
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        if (r == c && variant == Variant::weak) {
          CHECK(model.H()(r, c) >= 0.0);
          CHECK(model.H()(r, c) <= 1.0);
        } else {
          CHECK(model.H()(r, c) <= 0.0);
          CHECK(model.H()(r, c) >= -1.0);
        }
      }
    }
    CHECK(same_bits(model.H(), Matrix(model.H().transpose())));

    // Determinism: bit-identical regeneration, seed sensitivity.
    const auto again = gen_nqp(40, 2024, variant);
    CHECK(same_bits(again.H(), model.H()));
    CHECK(same_bits(again.h(), model.h()));
    CHECK(again.c() == model.c());
    CHECK_FALSE(same_bits(gen_nqp(40, 2025, variant).H(), model.H()));
  }
}

TEST_CASE("random log-determinant instances satisfy their construction contract") {
  const auto model = gen_softmax(30, 7);
  const int n = model.dimension();

  // Spectrum lies in [e^{-1/2}, e].
  const Eigen::SelfAdjointEigenSolver<Matrix> eigs(model.L());
  for (int i = 0; i < n; ++i) {
    CHECK(eigs.eigenvalues()[i] >= std::exp(-0.5) - 1e-8);
    CHECK(eigs.eigenvalues()[i] <= std::exp(1.0) + 1e-8);
  }

  // Full-box value equals the sum of the log-eigenvalues used to build L.
  double sum_u = 0.0;
  for (const double u : model.log_eigenvalues()) sum_u += u;
  CHECK(std::abs(model.value(Vector::Ones(n)) - sum_u) <= 1e-8);

  const auto again = gen_softmax(30, 7);
  CHECK(same_bits(again.L(), model.L()));
  CHECK_FALSE(same_bits(gen_softmax(30, 8).L(), model.L()));
}

TEST_CASE("submodularity validator classifies known sign patterns") {
  // Positive off-diagonal entries are detected with the right magnitude.
  Matrix Hbad(2, 2);
  Hbad << 0.0, 0.5, 0.5, 0.0;
  const QuadraticObjective bad(Hbad, vec({0.0, 0.0}), 0.0);
  for (const Variant variant : {Variant::strong, Variant::weak}) {
    const auto report = validate_submodularity(bad, variant, 3, 99);
    CHECK_FALSE(report.passed);
    CHECK(report.worst_violation == doctest::Approx(0.5).epsilon(1e-5));
  }

  // A positive diagonal passes the weak check (no off-diagonal to inspect)...
  Matrix Hdiag(1, 1);
  Hdiag << 1.0;
  const QuadraticObjective convex(Hdiag, vec({0.0}), 0.0);
  CHECK(validate_submodularity(convex, Variant::weak, 3, 99).passed);
  // ...but fails the strong one.
  const auto strong_report = validate_submodularity(convex, Variant::strong, 3, 99);
  CHECK_FALSE(strong_report.passed);
  CHECK(strong_report.worst_violation == doctest::Approx(1.0).epsilon(1e-5));

  // Generator outputs pass their own variant.
  CHECK(validate_submodularity(gen_nqp(25, 5, Variant::strong), Variant::strong, 2, 5).passed);
  CHECK(validate_submodularity(gen_nqp(25, 5, Variant::weak), Variant::weak, 2, 5).passed);
  CHECK(validate_submodularity(gen_softmax(25, 5), Variant::strong, 2, 5).passed);

  // Weak instances have positive diagonals, so they fail the strong check.
  CHECK_FALSE(validate_submodularity(gen_nqp(25, 5, Variant::weak), Variant::strong, 2, 5).passed);
}

TEST_CASE("analytic partials agree with independent central differences") {
  SplitMix64 rng(314159);
  const auto check_family = [&](const Objective& obj) {
    const double tol = 1e-5 * std::max(1.0, obj.lipschitz_bound());
    double worst = 0.0;
    for (int p = 0; p < 100; ++p) {
      const Vector x = oracles::interior_point(rng, obj.dimension(), 1e-3);
      const int i = static_cast<int>(rng.next_below(obj.dimension()));
      const double analytic = obj.partial(x, i);
      const double numeric = oracles::fd_partial(obj, x, i, 1e-5);
      worst = std::max(worst, std::abs(analytic - numeric));
    }
    CAPTURE(worst);
    CHECK(worst <= tol);
  };
  check_family(gen_nqp(20, 11, Variant::strong));
  check_family(gen_nqp(20, 12, Variant::weak));
  check_family(gen_softmax(20, 13));
}

TEST_CASE("coordinate-wise Lipschitz bound holds for quadratic instances") {
  SplitMix64 rng(1234);
  const auto model = gen_nqp(15, 77, Variant::weak);
  const double C = model.lipschitz_bound();
  for (int p = 0; p < 200; ++p) {
    Vector x = oracles::interior_point(rng, model.dimension(), 0.0);
    const int i = static_cast<int>(rng.next_below(model.dimension()));
    const double z1 = rng.uniform();
    const double z2 = rng.uniform();
    Vector y = x;
    x[i] = z1;
    y[i] = z2;
    CHECK(std::abs(model.value(x) - model.value(y)) <= C * std::abs(z1 - z2) + 1e-12);
  }
}

TEST_CASE("softmax gradient equals per-coordinate partials") {
  const auto model = gen_softmax(12, 3);
  SplitMix64 rng(5);
  const Vector x = oracles::interior_point(rng, 12, 0.01);
  const Vector grad = model.gradient(x);
  for (int i = 0; i < 12; ++i) {
    CHECK(grad[i] == doctest::Approx(model.partial(x, i)).epsilon(1e-10));
  }
}

TEST_CASE("counting wrapper tallies oracle traffic per call") {
  const auto model = one_dim_hump();
  CountingObjective counted(model);
  CHECK(counted.value_calls() == 0);
  counted.value(vec({0.5}));
  counted.value(vec({0.25}));
  counted.partial(vec({0.5}), 0);
  CHECK(counted.value_calls() == 2);
  CHECK(counted.partial_calls() == 1);
}

TEST_CASE("family helpers expose all instance kinds") {
  CHECK(family_name(Family::nqp_strong) == "nqp-strong");
  CHECK(family_name(Family::nqp_weak) == "nqp-weak");
  CHECK(family_name(Family::softmax) == "softmax");
  CHECK(family_from_name("nqp-weak") == Family::nqp_weak);
  CHECK_FALSE(family_from_name("bogus").has_value());
  CHECK(family_variant(Family::nqp_weak) == Variant::weak);
  CHECK(family_variant(Family::softmax) == Variant::strong);

  const auto inst = generate_instance(Family::softmax, 8, 21);
  CHECK(inst->dimension() == 8);
  CHECK(dynamic_cast<SoftmaxObjective*>(inst.get()) != nullptr);
}

TEST_CASE("instance serialization round-trips bit-exactly") {
  const auto quad = gen_nqp(9, 31337, Variant::weak);
  const Json j = instance_to_json("nqp-weak", 31337, quad);
  const auto restored = instance_from_json(j);
  CHECK(restored.kind == "nqp-weak");
  CHECK(restored.n == 9);
  CHECK(restored.seed == 31337);
  const auto* rq = dynamic_cast<const QuadraticObjective*>(restored.objective.get());
  REQUIRE(rq != nullptr);
  CHECK(same_bits(rq->H(), quad.H()));
  CHECK(same_bits(rq->h(), quad.h()));
  CHECK(rq->c() == quad.c());

  // A second serialization produces the same document.
  CHECK(instance_to_json("nqp-weak", 31337, *restored.objective).dump() == j.dump());

  const auto soft = gen_softmax(9, 31337);
  const auto restored_soft = instance_from_json(instance_to_json("softmax", 31337, soft));
  const auto* rs = dynamic_cast<const SoftmaxObjective*>(restored_soft.objective.get());
  REQUIRE(rs != nullptr);
  CHECK(same_bits(rs->L(), soft.L()));
  // The derived Lipschitz estimate is a pure function of L, so it survives.
  CHECK(rs->lipschitz_bound() == soft.lipschitz_bound());
}
