#include "pmwitness/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "pmwitness/nelder_mead.hpp"

namespace pmw {

namespace {

constexpr double kPi = std::numbers::pi;

double xlog2x(double x) { return x > tol::kEntropyEigenvalue ? x * std::log2(x) : 0.0; }

// Entropy of a 2x2 Hermitian block [[x, z], [conj z, y]] with unit trace.
double entropy_2x2(double x, double y, Complex z) {
  const double half_sum = 0.5 * (x + y);
  const double half_diff = 0.5 * (x - y);
  const double r = std::sqrt(half_diff * half_diff + std::norm(z));
  return -xlog2x(half_sum + r) - xlog2x(half_sum - r);
}

void require_two_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 4 || rho.layout().size() != 2) {
    throw InvalidParameter("expected a two-qubit state, got layout " + describe(rho.layout()));
  }
}

// Unnormalized conditional state of the unmeasured qubit after projecting
// `side` onto the 2x2 projector `proj`.
std::array<Complex, 4> conditional_block(const Matrix& rho, Side side, const Complex* proj) {
  std::array<Complex, 4> m{};
  for (int u = 0; u < 2; ++u) {
    for (int v = 0; v < 2; ++v) {
      Complex acc = 0.0;
      for (int b = 0; b < 2; ++b) {
        for (int c = 0; c < 2; ++c) {
          const Complex p = proj[2 * b + c];
          if (side == Side::B) {
            acc += p * rho(2 * u + c, 2 * v + b);
          } else {
            acc += p * rho(2 * c + u, 2 * b + v);
          }
        }
      }
      m[static_cast<std::size_t>(2 * u + v)] = acc;
    }
  }
  return m;
}

double branch_entropy(const std::array<Complex, 4>& m) {
  const double p = m[0].real() + m[3].real();
  if (p < tol::kNullBranch) return 0.0;
  return p * entropy_2x2(m[0].real() / p, m[3].real() / p, m[1] / p);
}

double conditional_entropy_angles(const Matrix& rho, Side side, double theta, double phi) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const Complex e = std::polar(1.0, phi);
  // |b><b| and I - |b><b|, row-major
  const Complex plus[4] = {c * c, c * s * std::conj(e), c * s * e, s * s};
  const Complex minus[4] = {1.0 - plus[0], -plus[1], -plus[2], 1.0 - plus[3]};
  return branch_entropy(conditional_block(rho, side, plus)) +
         branch_entropy(conditional_block(rho, side, minus));
}

double grid_theta(int i, int n) { return n > 1 ? kPi * i / (n - 1) : 0.0; }
double grid_phi(int j, int n) { return 2.0 * kPi * j / n; }

Matrix sigma_y_sigma_y() {
  Matrix sy(2, 2);
  sy << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return kron(sy, sy);
}

Matrix psd_sqrt(const Matrix& m) {
  const EigenSystem es = eig_hermitian(m);
  const RealVector root = es.values.cwiseMax(0.0).cwiseSqrt();
  return es.vectors * root.cast<Complex>().asDiagonal() * es.vectors.adjoint();
}

}  // namespace

const char* to_string(Side s) { return s == Side::A ? "A" : "B"; }

MeasurementBasis MeasurementBasis::canonical() const {
  double t = std::fmod(theta, 2.0 * kPi);
  if (t < 0) t += 2.0 * kPi;
  double f = phi;
  if (t > kPi) {
    t = 2.0 * kPi - t;
    f += kPi;
  }
  f = std::fmod(f, 2.0 * kPi);
  if (f < 0) f += 2.0 * kPi;
  if (f >= 2.0 * kPi) f = 0.0;
  return {t, f};
}

Matrix MeasurementBasis::projector_plus() const {
  Vector b(2);
  b << std::cos(0.5 * theta), std::polar(1.0, phi) * std::sin(0.5 * theta);
  return b * b.adjoint();
}

Matrix MeasurementBasis::projector_minus() const {
  return Matrix::Identity(2, 2) - projector_plus();
}

double purity(const DensityMatrix& rho) { return (rho.data() * rho.data()).trace().real(); }

double purity_for_report(const DensityMatrix& rho) {
  const double p = purity(rho);
  const double lo = 1.0 / static_cast<double>(rho.dim());
  if (p > 1.0 && p - 1.0 <= 1e-9) return 1.0;
  if (p < lo && lo - p <= 1e-9) return lo;
  return p;
}

double entropy(const Matrix& rho) {
  const RealVector ev = eigvals_hermitian(rho);
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) s -= xlog2x(ev(i));
  return std::max(s, 0.0);
}

double entropy(const DensityMatrix& rho) { return entropy(rho.data()); }

double binary_entropy(double p) { return -xlog2x(p) - xlog2x(1.0 - p); }

double mutual_information(const DensityMatrix& rho_ab) {
  require_two_qubit(rho_ab);
  const Role ra = rho_ab.layout().subsystems()[0].role;
  const Role rb = rho_ab.layout().subsystems()[1].role;
  return entropy(partial_trace(rho_ab, {ra})) + entropy(partial_trace(rho_ab, {rb})) -
         entropy(rho_ab);
}

double conditional_entropy(const Matrix& rho_ab, Side side, const MeasurementBasis& basis) {
  if (rho_ab.rows() != 4 || rho_ab.cols() != 4) throw InvalidParameter("expected a 4x4 matrix");
  return conditional_entropy_angles(rho_ab, side, basis.theta, basis.phi);
}

ClassicalCorrelation classical_correlation(const DensityMatrix& rho_ab, Side side,
                                           const OptimizerConfig& opt) {
  require_two_qubit(rho_ab);
  if (opt.grid_theta < 2 || opt.grid_phi < 1) throw InvalidParameter("optimizer grid too small");
  const Matrix& rho = rho_ab.data();

  double best = std::numeric_limits<double>::infinity();
  double best_theta = 0.0, best_phi = 0.0;
  for (int i = 0; i < opt.grid_theta; ++i) {
    const double theta = grid_theta(i, opt.grid_theta);
    // phi is irrelevant at the poles
    const int n_phi = (i == 0 || i == opt.grid_theta - 1) ? 1 : opt.grid_phi;
    for (int j = 0; j < n_phi; ++j) {
      const double phi = grid_phi(j, opt.grid_phi);
      const double v = conditional_entropy_angles(rho, side, theta, phi);
      if (v < best) {
        best = v;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }

  double refined = best;
  MeasurementBasis argmin{best_theta, best_phi};
  if (opt.refine) {
    NelderMeadOptions nm;
    nm.tolerance = opt.tolerance;
    nm.max_iterations = opt.max_iterations;
    const double step_theta = kPi / (opt.grid_theta - 1);
    const double step_phi = 2.0 * kPi / opt.grid_phi;
    const auto res = nelder_mead_2d(
        [&](double t, double f) { return conditional_entropy_angles(rho, side, t, f); },
        {best_theta, best_phi}, {step_theta, step_phi}, nm);
    if (res.value < refined) {
      refined = res.value;
      argmin = {res.x[0], res.x[1]};
    }
  }

  const Role other = rho_ab.layout().subsystems()[side == Side::B ? 0 : 1].role;
  const double s_other = entropy(partial_trace(rho_ab, {other}));
  return {s_other - refined, argmin.canonical(), best, refined};
}

double discord(const DensityMatrix& rho_ab, Side side, const OptimizerConfig& opt) {
  return mutual_information(rho_ab) - classical_correlation(rho_ab, side, opt).value;
}

double concurrence(const DensityMatrix& rho_ab) {
  require_two_qubit(rho_ab);
  static const Matrix flip = sigma_y_sigma_y();
  const Matrix& rho = rho_ab.data();
  const Matrix rho_tilde = flip * rho.conjugate() * flip;
  const Matrix root = psd_sqrt(rho);
  Matrix r = root * rho_tilde * root;
  r = 0.5 * (r + r.adjoint());
  RealVector mu = eigvals_hermitian(r);

  std::array<double, 4> lambda{};
  for (int i = 0; i < 4; ++i) {
    double m = mu(i);
    if (m < 0.0 && m >= tol::kConcurrenceEigenvalue) m = 0.0;
    lambda[static_cast<std::size_t>(i)] = std::sqrt(std::max(m, 0.0));
  }
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  const double c = lambda[0] - lambda[1] - lambda[2] - lambda[3];
  return std::clamp(c, 0.0, 1.0);
}

double eof_from_concurrence(double c) {
  c = std::clamp(c, 0.0, 1.0);
  const double f = 0.5 * (1.0 + std::sqrt(1.0 - c * c));
  return binary_entropy(f);
}

double eof(const DensityMatrix& rho_ab) { return eof_from_concurrence(concurrence(rho_ab)); }

MeasureReport report(const DensityMatrix& rho, Side side, const OptimizerConfig& opt) {
  MeasureReport r;
  r.measured_side = side;
  if (rho.dim() == 2 && rho.layout().size() == 1) {
    r.purity = purity_for_report(rho);
    r.entropy_A = entropy(rho);
    return r;
  }
  require_two_qubit(rho);
  r.two_qubit = true;
  r.purity = purity_for_report(rho);
  const Role ra = rho.layout().subsystems()[0].role;
  const Role rb = rho.layout().subsystems()[1].role;
  r.entropy_A = entropy(partial_trace(rho, {ra}));
  r.entropy_B = entropy(partial_trace(rho, {rb}));
  r.entropy_AB = entropy(rho);
  r.mutual_info = r.entropy_A + r.entropy_B - r.entropy_AB;

  const ClassicalCorrelation cc = classical_correlation(rho, side, opt);
  r.classical_corr = cc.value;
  r.argmin_basis = cc.argmin;
  r.discord_raw = r.mutual_info - r.classical_corr;
  r.discord = (r.discord_raw < 0.0 && r.discord_raw >= -tol::kDiscordClamp) ? 0.0 : r.discord_raw;
  r.concurrence = concurrence(rho);
  r.eof = eof_from_concurrence(r.concurrence);
  return r;
}

}  // namespace pmw
