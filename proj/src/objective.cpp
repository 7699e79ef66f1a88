#include "bigreedy/objective.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace bigreedy {

namespace {

constexpr double kBoxTolerance = 1e-12;
constexpr double kFdStep = 1e-5;
// Probe stream for the softmax Lipschitz estimate.  A fixed constant keeps
// the bound a pure function of L, so it survives save/load round trips.
constexpr std::uint64_t kLipschitzProbeSeed = 0x11b5c41275ull;
constexpr int kLipschitzProbes = 200;

}  // namespace

Objective::Objective(int n, double lipschitz) : n_(n), lipschitz_(lipschitz) {
  if (n <= 0) throw std::invalid_argument("objective dimension must be positive");
}

void Objective::check_point(const Vector& x) const {
  if (x.size() != n_) {
    std::ostringstream msg;
    msg << "dimension mismatch: expected n=" << n_ << ", got " << x.size();
    throw std::invalid_argument(msg.str());
  }
  for (int i = 0; i < n_; ++i) {
    if (!(x[i] >= -kBoxTolerance && x[i] <= 1.0 + kBoxTolerance)) {
      std::ostringstream msg;
      msg << "point outside [0,1]^n at coordinate " << i << ": " << x[i];
      throw std::domain_error(msg.str());
    }
  }
}

void Objective::check_coordinate(int i) const {
  if (i < 0 || i >= n_) {
    std::ostringstream msg;
    msg << "coordinate index out of range: " << i << " (n=" << n_ << ")";
    throw std::invalid_argument(msg.str());
  }
}

double Objective::value(const Vector& x) const {
  check_point(x);
  return unchecked_value(x);
}

double Objective::analytic_partial(const Vector&, int) const {
  throw std::logic_error("objective has no analytic partial derivative");
}

double Objective::partial(const Vector& x, int i) const {
  check_point(x);
  check_coordinate(i);
  if (has_analytic_partial()) return analytic_partial(x, i);

  const double dist = std::min(x[i], 1.0 - x[i]);
  Vector probe = x;
  if (dist < 1e-8) {
    // On (or numerically at) the boundary: one-sided difference pointing
    // into the box.
    const double sign = x[i] < 0.5 ? 1.0 : -1.0;
    const double f0 = value(x);
    probe[i] = x[i] + sign * kFdStep;
    return sign * (value(probe) - f0) / kFdStep;
  }
  const double h = std::min(kFdStep, dist);
  probe[i] = x[i] + h;
  const double fp = value(probe);
  probe[i] = x[i] - h;
  const double fm = value(probe);
  return (fp - fm) / (2.0 * h);
}

Matrix Objective::hessian_central_difference(const Vector& x, double step) const {
  check_point(x);
  const int n = dimension();
  const double h = step;
  Matrix out(n, n);
  Vector probe = x;
  const double f0 = value(x);
  for (int i = 0; i < n; ++i) {
    probe = x;
    probe[i] = x[i] + h;
    const double fp = value(probe);
    probe[i] = x[i] - h;
    const double fm = value(probe);
    out(i, i) = (fp - 2.0 * f0 + fm) / (h * h);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      probe = x;
      probe[i] = x[i] + h;
      probe[j] = x[j] + h;
      const double fpp = value(probe);
      probe[j] = x[j] - h;
      const double fpm = value(probe);
      probe[i] = x[i] - h;
      const double fmm = value(probe);
      probe[j] = x[j] + h;
      const double fmp = value(probe);
      out(i, j) = out(j, i) = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quadratic
// ---------------------------------------------------------------------------

namespace {

double quadratic_lipschitz(const Matrix& H, const Vector& h) {
  double c = 0.0;
  for (int i = 0; i < H.rows(); ++i) {
    c = std::max(c, std::abs(h[i]) + H.row(i).cwiseAbs().sum());
  }
  return c;
}

}  // namespace

QuadraticObjective::QuadraticObjective(Matrix H, Vector h, double c)
    : Objective(static_cast<int>(h.size()), 0.0), H_(std::move(H)), h_(std::move(h)), c_(c) {
  if (H_.rows() != H_.cols() || H_.rows() != h_.size()) {
    throw std::invalid_argument("quadratic objective: H must be n x n and h length n");
  }
  if (!H_.isApprox(H_.transpose(), 1e-12)) {
    throw std::invalid_argument("quadratic objective: H must be symmetric");
  }
  set_lipschitz(quadratic_lipschitz(H_, h_));
}

double QuadraticObjective::unchecked_value(const Vector& x) const {
  return 0.5 * x.dot(H_ * x) + h_.dot(x) + c_;
}

double QuadraticObjective::precise_value(const Vector& x) const {
  const int n = dimension();
  long double quad = 0.0L;
  for (int i = 0; i < n; ++i) {
    long double row = 0.0L;
    for (int j = 0; j < n; ++j) row += static_cast<long double>(H_(i, j)) * x[j];
    quad += static_cast<long double>(x[i]) * row;
  }
  long double lin = 0.0L;
  for (int i = 0; i < n; ++i) lin += static_cast<long double>(h_[i]) * x[i];
  return static_cast<double>(0.5L * quad + lin + static_cast<long double>(c_));
}

double QuadraticObjective::analytic_partial(const Vector& x, int i) const {
  return H_.row(i).dot(x) + h_[i];
}

Matrix QuadraticObjective::hessian_central_difference(const Vector& x, double step) const {
  check_point(x);
  const int n = dimension();
  const double h = step;
  Matrix out(n, n);
  Vector probe = x;
  const double f0 = precise_value(x);
  for (int i = 0; i < n; ++i) {
    probe = x;
    probe[i] = x[i] + h;
    const double fp = precise_value(probe);
    probe[i] = x[i] - h;
    const double fm = precise_value(probe);
    out(i, i) = (fp - 2.0 * f0 + fm) / (h * h);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      probe = x;
      probe[i] = x[i] + h;
      probe[j] = x[j] + h;
      const double fpp = precise_value(probe);
      probe[j] = x[j] - h;
      const double fpm = precise_value(probe);
      probe[i] = x[i] - h;
      const double fmm = precise_value(probe);
      probe[j] = x[j] + h;
      const double fmp = precise_value(probe);
      out(i, j) = out(j, i) = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Softmax extension (log-determinant)
// ---------------------------------------------------------------------------

SoftmaxObjective::SoftmaxObjective(Matrix L, std::vector<double> log_eigenvalues)
    : Objective(static_cast<int>(L.rows()), 0.0),
      L_(std::move(L)),
      log_eigenvalues_(std::move(log_eigenvalues)) {
  if (L_.rows() != L_.cols()) throw std::invalid_argument("softmax objective: L must be square");
  if (!L_.isApprox(L_.transpose(), 1e-9)) {
    throw std::invalid_argument("softmax objective: L must be symmetric");
  }
  A_ = L_ - Matrix::Identity(L_.rows(), L_.cols());
  set_lipschitz(estimate_lipschitz());
}

Eigen::PartialPivLU<Matrix> SoftmaxObjective::factor(const Vector& x) const {
  Matrix M = x.asDiagonal() * A_;
  M.diagonal().array() += 1.0;
  Eigen::PartialPivLU<Matrix> lu(M);
  int sign = lu.permutationP().determinant();
  for (int i = 0; i < M.rows(); ++i) {
    const double d = lu.matrixLU()(i, i);
    if (d == 0.0) sign = 0;
    if (d < 0.0) sign = -sign;
  }
  if (sign <= 0) throw std::domain_error("softmax matrix not positive definite at x");
  return lu;
}

double SoftmaxObjective::unchecked_value(const Vector& x) const {
  const auto lu = factor(x);
  long double logdet = 0.0L;
  for (int i = 0; i < dimension(); ++i) {
    logdet += std::log(std::abs(static_cast<long double>(lu.matrixLU()(i, i))));
  }
  return static_cast<double>(logdet);
}

double SoftmaxObjective::analytic_partial(const Vector& x, int i) const {
  // d/dx_i log det M(x) = tr(M^{-1} e_i e_i^T A) = [A M^{-1}]_ii.
  const auto lu = factor(x);
  const Vector w = lu.solve(Vector::Unit(dimension(), i));
  return A_.row(i).dot(w);
}

Vector SoftmaxObjective::gradient(const Vector& x) const {
  check_point(x);
  const auto lu = factor(x);
  const Matrix Minv = lu.inverse();
  Vector grad(dimension());
  for (int i = 0; i < dimension(); ++i) grad[i] = A_.row(i).dot(Minv.col(i));
  return grad;
}

Matrix SoftmaxObjective::hessian_central_difference(const Vector& x, double step) const {
  check_point(x);
  const int n = dimension();
  const double h = step;
  // Perturbing coordinates i, j by (a, b) changes rows i, j of M(x) only:
  //   det(M + a e_i A_i: + b e_j A_j:) = det(M) * det(I_2 + diag(a,b) S)
  // with S the (i,j) submatrix of W = A M^{-1}.  The second difference of
  // log det F is therefore an exact combination of 2x2 determinants of
  // order-h quantities, free of large-value cancellation.
  const auto lu = factor(x);
  const Matrix Minv = lu.inverse();
  const Matrix W = A_ * Minv;

  const auto diff1 = [&](int i, double a) {
    // F(x + a e_i) - F(x)
    return std::log1p(a * W(i, i));
  };
  const auto diff2 = [&](int i, int j, double a, double b) {
    // F(x + a e_i + b e_j) - F(x)
    const double t = a * W(i, i) + b * W(j, j) + a * b * (W(i, i) * W(j, j) - W(i, j) * W(j, i));
    return std::log1p(t);
  };

  Matrix out(n, n);
  for (int i = 0; i < n; ++i) {
    out(i, i) = (diff1(i, h) + diff1(i, -h)) / (h * h);
    for (int j = i + 1; j < n; ++j) {
      const double num = diff2(i, j, h, h) - diff2(i, j, h, -h) - diff2(i, j, -h, h) +
                         diff2(i, j, -h, -h);
      out(i, j) = out(j, i) = num / (4.0 * h * h);
    }
  }
  return out;
}

double SoftmaxObjective::estimate_lipschitz() const {
  SplitMix64 rng(kLipschitzProbeSeed);
  const int n = dimension();
  double worst = 0.0;
  Vector x(n);
  for (int p = 0; p < kLipschitzProbes; ++p) {
    for (int i = 0; i < n; ++i) x[i] = rng.uniform();
    const auto lu = factor(x);
    const Matrix Minv = lu.inverse();
    for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(A_.row(i).dot(Minv.col(i))));
  }
  return 1.2 * worst;
}

// ---------------------------------------------------------------------------
// Black-box hook
// ---------------------------------------------------------------------------

FunctionObjective::FunctionObjective(int n, double lipschitz, ValueFn value_fn, PartialFn partial_fn)
    : Objective(n, lipschitz), value_fn_(std::move(value_fn)), partial_fn_(std::move(partial_fn)) {
  if (!value_fn_) throw std::invalid_argument("function objective requires a value function");
}

double FunctionObjective::unchecked_value(const Vector& x) const { return value_fn_(x); }

double FunctionObjective::analytic_partial(const Vector& x, int i) const {
  return partial_fn_(x, i);
}

// ---------------------------------------------------------------------------
// Counting wrapper
// ---------------------------------------------------------------------------

CountingObjective::CountingObjective(const Objective& inner)
    : Objective(inner.dimension(), inner.lipschitz_bound()), inner_(inner) {}

double CountingObjective::value(const Vector& x) const {
  ++value_calls_;
  return inner_.value(x);
}

double CountingObjective::partial(const Vector& x, int i) const {
  ++partial_calls_;
  return inner_.partial(x, i);
}

Matrix CountingObjective::hessian_central_difference(const Vector& x, double step) const {
  return inner_.hessian_central_difference(x, step);
}

double CountingObjective::unchecked_value(const Vector& x) const { return inner_.value(x); }

// ---------------------------------------------------------------------------
// Instance generators
// ---------------------------------------------------------------------------

QuadraticObjective gen_nqp(int n, std::uint64_t seed, Variant variant) {
  SplitMix64 rng(seed);
  Matrix A(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) A(r, c) = rng.uniform(-1.0, 0.0);
  }
  Matrix H = 0.5 * (A + A.transpose());
  if (variant == Variant::weak) {
    for (int i = 0; i < n; ++i) H(i, i) = rng.uniform(0.0, 1.0);
  }
  Vector h(n);
  for (int i = 0; i < n; ++i) h[i] = rng.uniform(0.0, 1.0);

  // c solves F(0) + F(1) = 0, i.e. 2c + 0.5 * sum(H) + sum(h) = 0.
  long double sum_h_entries = 0.0L;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) sum_h_entries += static_cast<long double>(H(r, c));
  }
  long double sum_lin = 0.0L;
  for (int i = 0; i < n; ++i) sum_lin += static_cast<long double>(h[i]);
  const double c = static_cast<double>(-(0.5L * sum_h_entries + sum_lin) / 2.0L);
  return QuadraticObjective(std::move(H), std::move(h), c);
}

SoftmaxObjective gen_softmax(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<double> u(n);
  for (int i = 0; i < n; ++i) u[i] = rng.uniform(-0.5, 1.0);

  Matrix G(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) G(r, c) = rng.normal();
  }
  Eigen::HouseholderQR<Matrix> qr(G);
  Matrix Q = qr.householderQ();
  const Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    if (R(j, j) < 0.0) Q.col(j) *= -1.0;  // fix signs so Q is unique given G
  }

  Vector d(n);
  for (int i = 0; i < n; ++i) d[i] = std::exp(u[i]);
  Matrix L = Q * d.asDiagonal() * Q.transpose();
  L = 0.5 * (L + L.transpose());
  return SoftmaxObjective(std::move(L), std::move(u));
}

// ---------------------------------------------------------------------------
// Submodularity validation
// ---------------------------------------------------------------------------

SubmodularityReport validate_submodularity(const Objective& obj, Variant variant, int probes,
                                           std::uint64_t seed) {
  if (probes <= 0) throw std::invalid_argument("validate_submodularity: probes must be positive");
  const double step = 1e-4;
  SubmodularityReport report;
  report.probes = probes;
  report.variant = variant;
  report.tolerance = 1e-6 * std::max(1.0, obj.lipschitz_bound());
  report.worst_violation = -std::numeric_limits<double>::infinity();

  SplitMix64 rng(seed);
  const int n = obj.dimension();
  Vector x(n);
  for (int p = 0; p < probes; ++p) {
    for (int i = 0; i < n; ++i) x[i] = rng.uniform(2.0 * step, 1.0 - 2.0 * step);
    const Matrix est = obj.hessian_central_difference(x, step);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        if (i == j && variant != Variant::strong) continue;
        report.worst_violation = std::max(report.worst_violation, est(i, j));
      }
    }
  }
  report.passed = !(report.worst_violation > report.tolerance);
  return report;
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

std::string family_name(Family family) {
  switch (family) {
    case Family::nqp_strong: return "nqp-strong";
    case Family::nqp_weak: return "nqp-weak";
    case Family::softmax: return "softmax";
  }
  return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "nqp-strong") return Family::nqp_strong;
  if (name == "nqp-weak") return Family::nqp_weak;
  if (name == "softmax") return Family::softmax;
  return std::nullopt;
}

Variant family_variant(Family family) noexcept {
  return family == Family::nqp_weak ? Variant::weak : Variant::strong;
}

std::unique_ptr<Objective> generate_instance(Family family, int n, std::uint64_t seed) {
  switch (family) {
    case Family::nqp_strong:
      return std::make_unique<QuadraticObjective>(gen_nqp(n, seed, Variant::strong));
    case Family::nqp_weak:
      return std::make_unique<QuadraticObjective>(gen_nqp(n, seed, Variant::weak));
    case Family::softmax:
      return std::make_unique<SoftmaxObjective>(gen_softmax(n, seed));
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace bigreedy
