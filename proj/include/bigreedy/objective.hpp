#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bigreedy/rng.hpp"

namespace bigreedy {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Which sign pattern of the (continuous) Hessian an instance is expected to
/// satisfy: `strong` requires every entry to be non-positive, `weak` only the
/// off-diagonal entries.
enum class Variant { strong, weak };

/// A twice-differentiable objective F on the unit box [0,1]^n, exposed to the
/// optimizers through value and partial-derivative queries only.
///
/// Implementations must be deterministic (identical input bits produce
/// identical output bits) and safe to call concurrently from several threads;
/// all state is fixed at construction.  `lipschitz_bound()` returns a
/// coordinate-wise Lipschitz constant C, i.e. |F(z1, x_-i) - F(z2, x_-i)|
/// <= C |z1 - z2| for every coordinate i.
class Objective {
public:
  virtual ~Objective() = default;

  int dimension() const noexcept { return n_; }
  double lipschitz_bound() const noexcept { return lipschitz_; }

  /// Evaluates F(x).  Throws std::invalid_argument on a dimension mismatch
  /// and std::domain_error if x leaves [0,1]^n by more than 1e-12.
  virtual double value(const Vector& x) const;

  /// Partial derivative dF/dx_i.  Uses the analytic form when available,
  /// otherwise a central finite difference with step min(1e-5, distance to
  /// the box boundary), falling back to a one-sided difference on the
  /// boundary itself.
  virtual double partial(const Vector& x, int i) const;

  virtual bool has_analytic_partial() const noexcept { return false; }

  /// Hessian estimate at x from central second differences of F with the
  /// given step; x must be at least 2*step away from the boundary in every
  /// coordinate.  Subclasses may override with an algebraically equivalent
  /// but better-conditioned computation of the same difference quotients.
  virtual Matrix hessian_central_difference(const Vector& x, double step) const;

protected:
  Objective(int n, double lipschitz);

  /// Validates dimension and box membership (tolerance 1e-12), throwing
  /// std::invalid_argument / std::domain_error as appropriate.
  void check_point(const Vector& x) const;
  void check_coordinate(int i) const;
  void set_lipschitz(double c) noexcept { lipschitz_ = c; }

  virtual double unchecked_value(const Vector& x) const = 0;
  virtual double analytic_partial(const Vector& x, int i) const;

private:
  int n_;
  double lipschitz_;
};

/// F(x) = 0.5 x^T H x + h^T x + c with symmetric H.
/// The Lipschitz constant is max_i(|h_i| + sum_j |H_ij|).
class QuadraticObjective final : public Objective {
public:
  QuadraticObjective(Matrix H, Vector h, double c);

  const Matrix& H() const noexcept { return H_; }
  const Vector& h() const noexcept { return h_; }
  double c() const noexcept { return c_; }

  bool has_analytic_partial() const noexcept override { return true; }

  /// Same central-difference stencil as the base class, but accumulated in
  /// extended precision so that round-off in values of magnitude ~|c| does
  /// not swamp second differences of order step^2.
  Matrix hessian_central_difference(const Vector& x, double step) const override;

protected:
  double unchecked_value(const Vector& x) const override;
  double analytic_partial(const Vector& x, int i) const override;

private:
  double precise_value(const Vector& x) const;

  Matrix H_;
  Vector h_;
  double c_;
};

/// F(x) = log det(diag(x) (L - I) + I) for a symmetric positive definite L.
///
/// Values and derivatives are computed through a pivoted LU factorization of
/// M(x) = diag(x)(L - I) + I; a non-positive determinant raises
/// std::domain_error.  dF/dx_i equals [(L - I) M(x)^{-1}]_ii.
class SoftmaxObjective final : public Objective {
public:
  /// `log_eigenvalues` may carry the spectrum used by the generator; it is
  /// kept for validation only and may be empty (e.g. after deserialization).
  explicit SoftmaxObjective(Matrix L, std::vector<double> log_eigenvalues = {});

  const Matrix& L() const noexcept { return L_; }
  const std::vector<double>& log_eigenvalues() const noexcept { return log_eigenvalues_; }

  bool has_analytic_partial() const noexcept override { return true; }

  /// Gradient at x from a single factorization of M(x).
  Vector gradient(const Vector& x) const;

  /// Exact second differences of log det via rank-two determinant updates:
  /// for perturbations only in coordinates i and j the determinant ratio is
  /// a 2x2 capacitance determinant, which avoids the catastrophic
  /// cancellation of differencing O(n)-sized log-determinants directly.
  Matrix hessian_central_difference(const Vector& x, double step) const override;

protected:
  double unchecked_value(const Vector& x) const override;
  double analytic_partial(const Vector& x, int i) const override;

private:
  Eigen::PartialPivLU<Matrix> factor(const Vector& x) const;
  double estimate_lipschitz() const;

  Matrix L_;
  Matrix A_;  // L - I
  std::vector<double> log_eigenvalues_;
};

/// User-supplied black-box objective.  `partial_fn` is optional; without it
/// derivatives come from the base-class finite differences.
class FunctionObjective final : public Objective {
public:
  using ValueFn = std::function<double(const Vector&)>;
  using PartialFn = std::function<double(const Vector&, int)>;

  FunctionObjective(int n, double lipschitz, ValueFn value_fn, PartialFn partial_fn = nullptr);

  bool has_analytic_partial() const noexcept override { return partial_fn_ != nullptr; }

protected:
  double unchecked_value(const Vector& x) const override;
  double analytic_partial(const Vector& x, int i) const override;

private:
  ValueFn value_fn_;
  PartialFn partial_fn_;
};

/// Pass-through wrapper that counts oracle traffic for one run.  Each call to
/// `value` counts as one objective evaluation and each call to `partial` as
/// one derivative evaluation, regardless of how the wrapped objective
/// computes them.  Not thread-safe; wrap per run.
class CountingObjective final : public Objective {
public:
  explicit CountingObjective(const Objective& inner);

  std::uint64_t value_calls() const noexcept { return value_calls_; }
  std::uint64_t partial_calls() const noexcept { return partial_calls_; }

  double value(const Vector& x) const override;
  double partial(const Vector& x, int i) const override;
  bool has_analytic_partial() const noexcept override { return inner_.has_analytic_partial(); }
  Matrix hessian_central_difference(const Vector& x, double step) const override;

protected:
  double unchecked_value(const Vector& x) const override;

private:
  const Objective& inner_;
  mutable std::uint64_t value_calls_ = 0;
  mutable std::uint64_t partial_calls_ = 0;
};

/// Random box-constrained quadratic program instance.  The full matrix is
/// drawn i.i.d. uniform on [-1, 0] and symmetrized as (H + H^T)/2; the weak
/// variant then redraws the diagonal uniform on [0, 1].  h is i.i.d. uniform
/// on [0, 1] and c is chosen so that F(0) + F(1) = 0.
QuadraticObjective gen_nqp(int n, std::uint64_t seed, Variant variant);

/// Random log-determinant instance: eigenvalues exp(u_i) with u_i uniform on
/// [-0.5, 1.0], eigenvectors from the QR factorization of a standard Gaussian
/// matrix with the sign convention diag(R) >= 0, L = V D V^T symmetrized.
SoftmaxObjective gen_softmax(int n, std::uint64_t seed);

struct SubmodularityReport {
  bool passed = false;
  double worst_violation = 0.0;  // most positive Hessian entry among those checked
  int probes = 0;
  Variant variant = Variant::strong;
  double tolerance = 0.0;
};

/// Checks the Hessian sign pattern of `variant` at `probes` random interior
/// points using central second differences with step 1e-4.  An entry fails
/// when it exceeds 1e-6 * max(1, C).
SubmodularityReport validate_submodularity(const Objective& obj, Variant variant, int probes,
                                           std::uint64_t seed);

/// Instance families exposed by the harness and the CLI.
enum class Family { nqp_strong, nqp_weak, softmax };

std::string family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);

/// Hessian sign pattern each family is constructed to satisfy (and is
/// validated against): nqp-weak is weak, the other two are strong.
Variant family_variant(Family family) noexcept;

std::unique_ptr<Objective> generate_instance(Family family, int n, std::uint64_t seed);

}  // namespace bigreedy
