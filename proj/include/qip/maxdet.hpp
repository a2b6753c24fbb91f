#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <optional>
#include <vector>

#include "qip/inclusion.hpp"
#include "qip/noise.hpp"

namespace qip {

/// One data-point inequality in real form. For xi = (y; x) with real
/// embedding (yr, yi, xr, xi) the constraint
///   alpha tr[Sigma_eta (I_2 (x) X_B)] + xi^* Q xi >= 0
/// reads
///   <offset_B - Y, X_B> + <L, X_A> + <Z, X_C - X_AA> >= 0
/// with Y = yr yr^T + yi yi^T, L = 2 (yr xr^T + yi xi^T),
/// Z = xr xr^T + xi xi^T and offset_B = alpha (S11 + S22).
struct QipRow {
  Eigen::MatrixXd Y;         // n_y x n_y, PSD
  Eigen::MatrixXd L;         // n_y x n_x
  Eigen::MatrixXd Z;         // n_x x n_x, PSD
  Eigen::MatrixXd offset_B;  // n_y x n_y, zero in degenerate mode
  int point_index = 0;       // index of the originating data point

  [[nodiscard]] double value(const SSDD& s) const;
};

enum class FitMode { Degenerate, NonDegenerate };

/// Determinant-maximization problem over the split decomposition variables:
///   maximize log det X_B
///   s.t. Q' >= 0, X_C >= 0, tr X_C = 1, row_i >= 0 for all i.
struct QipProblem {
  int n_y = 0;
  int n_x = 0;
  std::vector<QipRow> rows;
  FitMode mode = FitMode::Degenerate;
};

/// Builds the problem from data. `noise` may be empty (degenerate), hold one
/// shared summary, or hold one summary per point. Degenerate mode applies
/// when noise is absent or alpha == 0. Identically-zero rows (x = 0, y = 0,
/// no offset) are dropped; in degenerate mode a point with x = 0 and y != 0
/// throws InfeasiblePoint since no cone can contain it.
QipProblem assemble(const std::vector<DataPoint>& data,
                    const std::vector<NoiseSummary>& noise,
                    double alpha);

/// Strictly feasible start of the pattern X_C = I/n_x, X_A = 0,
/// X_B = X_AA = eps I, with eps = min_i (tr Z_i / n_x) / denom_i / 2 over
/// rows whose denominator tr Y_i + tr Z_i - tr offset_B_i is positive
/// (eps = 1 when no row constrains). Throws InfeasibleStart when the pattern
/// admits no strictly feasible point.
SSDD initial_point(const QipProblem& p);

struct SolverConfig {
  double gap_tol = 1e-8;      // relative duality-gap target
  double barrier_mu = 10.0;   // path multiplier
  double newton_tol = 1e-10;  // Newton decrement target per center
  int max_newton = 500;       // total Newton step cap
  std::optional<double> objective_cap;  // default 200 * n_y
  std::ostream* log = nullptr;          // iteration trace when non-null
};

enum class SolveStatus { Optimal, Unbounded, Infeasible, IterationLimit };

const char* to_string(SolveStatus s) noexcept;

struct KktReport {
  double min_eig_q_prime = 0;
  double min_eig_Xc = 0;
  double min_slack = 0;
  double trace_residual = 0;
  double gap_bound = 0;  // nu / t at termination (0 when not applicable)
};

struct SolverResult {
  SSDD ssdd;
  SolveStatus status = SolveStatus::Infeasible;
  double objective = 0;  // log det X_B
  std::vector<int> active_set;  // point indices with relative slack <= 1e-6
  KktReport kkt;
  int newton_steps = 0;
};

/// Primal path-following barrier method. Minimizes
///   t (-log det X_B) - log det Q' - log det X_C - sum_i log(slack_i)
/// with the trace equality handled inside the Newton KKT system, multiplying
/// t by barrier_mu per centering until nu/t <= gap_tol * max(1, |objective|),
/// where nu = (n_y + n_x) + n_x + #rows. Unbounded is declared when the
/// objective exceeds the cap (perfect linear relationships in the data drive
/// an eigenvalue of X_B to infinity).
SolverResult solve(const QipProblem& p, const SolverConfig& cfg = {});

/// Rank condition ||X_AA - X_A^T X_B^{-1} X_A|| <= tol * max(1, ||X_AA||)
/// (spectral norm). Holds for every finite-cost optimum.
bool certify_specialness(const SSDD& s, double tol);

/// Feasibility diagnostics at an arbitrary point.
KktReport check_kkt(const QipProblem& p, const SSDD& s);

// ---------------------------------------------------------------------------
// Barrier internals, exposed for solver diagnostics and derivative checks.
// ---------------------------------------------------------------------------

/// Packed view of the composite barrier objective over the flat variable
/// vector [vech(X_B); vec(X_A); vech(X_AA); vech(X_C)] (lower-triangular
/// column-major packing of symmetric blocks).
class BarrierObjective {
 public:
  explicit BarrierObjective(const QipProblem& p);

  [[nodiscard]] int num_vars() const { return m_; }
  [[nodiscard]] Eigen::VectorXd pack(const SSDD& s) const;
  [[nodiscard]] SSDD unpack(const Eigen::VectorXd& v) const;

  /// Gradient vector of the equality functional tr(X_C).
  [[nodiscard]] const Eigen::VectorXd& trace_gradient() const { return trace_grad_; }

  /// Inequality slacks row_i(v) in assembly order.
  [[nodiscard]] Eigen::VectorXd slacks(const Eigen::VectorXd& v) const;

  /// Composite value t(-log det X_B) - log det Q' - log det X_C - sum log s_i;
  /// +inf outside the strictly feasible region.
  [[nodiscard]] double value(double t, const Eigen::VectorXd& v) const;

  /// Value, gradient and Hessian at a strictly feasible point.
  /// Returns false when v is not strictly feasible.
  bool derivatives(double t, const Eigen::VectorXd& v, double& value,
                   Eigen::VectorXd& grad, Eigen::MatrixXd& hess) const;

  /// log det X_B at v (the maximization objective).
  [[nodiscard]] double objective(const Eigen::VectorXd& v) const;

 private:
  int n_y_, n_x_, m_;
  int off_b_, off_a_, off_aa_, off_c_;
  // Q' basis descriptor per variable in the (X_B, X_A, X_AA) range:
  // entry (a, b) of Q' with sign s (X_A enters negated).
  struct QPrimeEntry {
    int a, b;
    double sign;
  };
  std::vector<QPrimeEntry> qprime_basis_;
  Eigen::MatrixXd row_coeffs_;  // #rows x m
  Eigen::VectorXd trace_grad_;
};

}  // namespace qip
