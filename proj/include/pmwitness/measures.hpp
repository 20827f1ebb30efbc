#pragma once

// Scalar witnesses on one- and two-qubit states. Entropic quantities are in
// bits (log base 2).

#include <optional>

#include "pmwitness/core.hpp"

namespace pmw {

/// Projective qubit measurement onto |b> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
/// and its orthogonal complement.
struct MeasurementBasis {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2 pi)

  /// Same measurement with the angles folded into their canonical ranges.
  MeasurementBasis canonical() const;
  Matrix projector_plus() const;
  Matrix projector_minus() const;
};

/// Which qubit of a two-qubit state is measured.
enum class Side { A, B };

const char* to_string(Side s);

struct OptimizerConfig {
  int grid_theta = 64;
  int grid_phi = 128;
  double tolerance = 1e-10;
  int max_iterations = 2000;
  bool refine = true;
};

namespace tol {
inline constexpr double kEntropyEigenvalue = 1e-12;
inline constexpr double kConcurrenceEigenvalue = -1e-10;
inline constexpr double kNullBranch = 1e-14;
inline constexpr double kDiscordClamp = 1e-6;
}  // namespace tol

/// Tr(rho^2).
double purity(const DensityMatrix& rho);
/// Purity clamped to [1/dim, 1] when within 1e-9 of either bound.
double purity_for_report(const DensityMatrix& rho);

double entropy(const DensityMatrix& rho);
double entropy(const Matrix& rho);
/// -p log2 p - (1-p) log2 (1-p), with 0 log 0 = 0.
double binary_entropy(double p);

double mutual_information(const DensityMatrix& rho_ab);

/// Sum over outcomes of p_b S(rho_{other|b}) for a fixed measurement on `side`.
double conditional_entropy(const Matrix& rho_ab, Side side, const MeasurementBasis& basis);

struct ClassicalCorrelation {
  double value;
  MeasurementBasis argmin;
  double grid_minimum;     // best conditional entropy on the coarse grid
  double refined_minimum;  // after simplex refinement
};

/// Classical correlation with the measurement on `side`, minimized by an
/// exhaustive theta x phi grid followed by Nelder-Mead refinement.
ClassicalCorrelation classical_correlation(const DensityMatrix& rho_ab, Side side,
                                           const OptimizerConfig& opt = {});

/// Raw discord I - J at the achieved minimum (may be slightly negative).
double discord(const DensityMatrix& rho_ab, Side side, const OptimizerConfig& opt = {});

double concurrence(const DensityMatrix& rho_ab);
/// Entanglement of formation from a concurrence value.
double eof_from_concurrence(double c);
double eof(const DensityMatrix& rho_ab);

struct MeasureReport {
  bool two_qubit = false;
  double purity = 0.0;
  double entropy_A = 0.0;
  double entropy_B = 0.0;
  double entropy_AB = 0.0;
  double mutual_info = 0.0;
  double classical_corr = 0.0;
  double discord = 0.0;      // clamped to 0 for small negatives
  double discord_raw = 0.0;
  double concurrence = 0.0;
  double eof = 0.0;
  MeasurementBasis argmin_basis;
  Side measured_side = Side::B;
};

/// One-qubit inputs fill purity and entropy_A only; two-qubit inputs fill
/// every field. Throws InvalidParameter for other dimensions.
MeasureReport report(const DensityMatrix& rho, Side side = Side::B,
                     const OptimizerConfig& opt = {});

}  // namespace pmw
