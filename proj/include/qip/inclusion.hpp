#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>

#include "qip/errors.hpp"

namespace qip {

/// Norm-bounded linear inclusion: the model-set
///   y in { (A + B*Delta*C) x : ||Delta|| <= 1 },
/// with A real n_y x n_x, B and C real invertible square matrices.
/// Delta is never stored; it is only ever witnessed per data point.
struct Inclusion {
  Eigen::MatrixXd A;  // nominal gain, n_y x n_x
  Eigen::MatrixXd B;  // uncertainty output shape, n_y x n_y, invertible
  Eigen::MatrixXd C;  // uncertainty input shape, n_x x n_x, invertible

  Inclusion(Eigen::MatrixXd a, Eigen::MatrixXd b, Eigen::MatrixXd c);

  [[nodiscard]] int n_y() const { return static_cast<int>(B.rows()); }
  [[nodiscard]] int n_x() const { return static_cast<int>(C.rows()); }
};

/// Symmetric quadratic form on stacked vectors xi = (y; x); a pair belongs to
/// the inclusion iff xi^* Q xi >= 0.
struct QuadricForm {
  Eigen::MatrixXd Q;  // (n_y+n_x) x (n_y+n_x), symmetric
  int n_y = 0;
  int n_x = 0;
};

/// Split semidefinite decomposition of the quadratic form: four real matrix
/// blocks (X_B, X_A, X_AA, X_C) subject to
///   Q' = [X_B, -X_A; -X_A^T, X_AA] >= 0  and  X_C >= 0,
/// assembling Q = [-X_B, X_A; X_A^T, X_C - X_AA].
struct SSDD {
  Eigen::MatrixXd Xb;   // n_y x n_y, symmetric PSD
  Eigen::MatrixXd Xa;   // n_y x n_x
  Eigen::MatrixXd Xaa;  // n_x x n_x, symmetric
  Eigen::MatrixXd Xc;   // n_x x n_x, symmetric PSD

  [[nodiscard]] int n_y() const { return static_cast<int>(Xb.rows()); }
  [[nodiscard]] int n_x() const { return static_cast<int>(Xc.rows()); }

  /// The PSD half of the decomposition, [X_B, -X_A; -X_A^T, X_AA].
  [[nodiscard]] Eigen::MatrixXd q_prime() const;

  /// Assembled quadratic form [-X_B, X_A; X_A^T, X_C - X_AA].
  [[nodiscard]] QuadricForm quadric() const;

  /// Checks symmetry and the PSD constraints (eigenvalue floor -tol * scale).
  [[nodiscard]] bool satisfies_invariants(double tol = 1e-9) const;
};

/// One complex input-output measurement pair.
struct DataPoint {
  Eigen::VectorXcd y;
  Eigen::VectorXcd x;
};

// ---------------------------------------------------------------------------
// Conversions
// ---------------------------------------------------------------------------

/// Quadratic form of an inclusion:
///   Q = [ -B^{-T}B^{-1},          B^{-T}B^{-1}A
///          A^T B^{-T}B^{-1},      C^T C - A^T B^{-T}B^{-1} A ].
QuadricForm quadric_from_inclusion(const Inclusion& m);

/// Special-case split decomposition of an inclusion:
///   X_B = B^{-T}B^{-1}, X_A = X_B A, X_AA = A^T X_B A, X_C = C^T C.
SSDD ssdd_from_inclusion(const Inclusion& m);

/// Inverts the special-case assignment. Factor convention: B = L^{-T} for L
/// the lower Cholesky factor of X_B, C the upper Cholesky factor of X_C,
/// A = X_B^{-1} X_A. Any orthogonal remixing of the factors describes the
/// same point set.
///
/// Throws DegenerateModel if X_B or X_C is not positive definite and
/// NotAnInclusion if the rank condition X_AA = X_A^T X_B^{-1} X_A fails
/// beyond `specialness_tol` (relative, spectral norm).
Inclusion inclusion_from_ssdd(const SSDD& s, double specialness_tol = 1e-6);

// ---------------------------------------------------------------------------
// Membership and witnesses
// ---------------------------------------------------------------------------

/// xi^* Q xi for xi = (y; x). Real because Q is real symmetric: the value is
/// evaluated as Re(xi)^T Q Re(xi) + Im(xi)^T Q Im(xi) (cross terms cancel).
double quadric_value(const QuadricForm& q, const DataPoint& p);

/// Inclusion test with a threshold shift: xi^* Q xi + offset >= -tol.
bool membership(const QuadricForm& q, const DataPoint& p, double offset, double tol = 1e-9);

/// Rank-one uncertainty witness Delta = B^{-1}(y - Ax) x^* C^T / (x^* C^T C x),
/// which satisfies y = Ax + B Delta C x exactly; ||Delta|| <= 1 iff the point
/// is a member. When Cx = 0 the witness is the zero matrix if y = Ax, and
/// NoWitness is thrown otherwise.
Eigen::MatrixXcd witness_delta(const Inclusion& m, const DataPoint& p);

// ---------------------------------------------------------------------------
// Cone width
// ---------------------------------------------------------------------------

/// Generalized cone width W = det(X_B^{-1})^{1/(2 n_y)} sqrt(tr X_C): the RMS
/// characteristic radius of the output cross-section over standard complex
/// normal inputs. Returns +inf when X_B is singular.
double cone_width(const SSDD& s);

/// Width in inclusion coordinates: geometric mean of the singular values of B
/// times the Frobenius norm of C. Equals cone_width(ssdd_from_inclusion(m)).
double cone_width_inclusion(const Inclusion& m);

/// Rank-condition residual X_AA - X_A^T X_B^{-1} X_A (a Schur complement of
/// Q'; PSD whenever Q' >= 0, zero exactly when the decomposition matches an
/// inclusion).
Eigen::MatrixXd ssdd_residual(const SSDD& s);

// ---------------------------------------------------------------------------
// Containment
// ---------------------------------------------------------------------------

/// Necessary condition for the outer inclusion to contain the inner one:
/// sigma_max(B_o^{-1} B_i) * sigma_max(C_i C_o^{-1}) <= 1. A false return
/// certifies non-containment; true does not certify containment.
bool containment_necessary(const Inclusion& inner, const Inclusion& outer, double tol = 1e-9);

/// Searches for a contraction Delta violating ||A~ + B~ Delta C~|| <= 1,
/// which certifies that the outer inclusion does not contain the inner one.
/// Candidates: Delta = 0, the deterministic extremal rank-one construction
/// aligned with the top singular directions of B~ and C~, then seeded random
/// contractions. Returns the first violating Delta, or nullopt (evidence of
/// containment, not proof).
std::optional<Eigen::MatrixXcd> containment_falsify(const Inclusion& inner,
                                                    const Inclusion& outer,
                                                    int n_samples,
                                                    std::uint64_t seed,
                                                    double tol = 1e-9);

}  // namespace qip
