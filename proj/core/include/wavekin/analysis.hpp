#pragma once

// Measurements on the boosted wave and checks of its claimed properties:
// front speeds, de Broglie wave number and frequency, dephasing, preferred
// frame detectability and Bohr loop-phase quantization.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "wavekin/kinematics.hpp"
#include "wavekin/wavemodel.hpp"

namespace wavekin {

struct Window {
  double min = 0.0;
  double max = 0.0;
};

// --- root finding ----------------------------------------------------------

// Bisects a sign change of f on [lo, hi] down to adjacent doubles.
// Throws FeatureNotFound if f(lo) and f(hi) share a strict sign.
double bisect_root(const std::function<double(double)>& f, double lo,
                   double hi);

// All sign changes of f on the window, located by scanning scan_count
// uniform subintervals and bisecting each bracket. Sorted ascending.
std::vector<double> find_zeros(const std::function<double(double)>& f,
                               Window window, int scan_count = 4096);

// --- front tracking ----------------------------------------------------------

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
};

// Ordinary least squares y = slope * x + intercept. Needs >= 3 points.
LinearFit fit_line(std::span<const double> xs, std::span<const double> ys);

struct FrontTrace {
  std::vector<double> times;
  std::vector<double> positions;
  double fitted_speed = 0.0;
  double fit_residual = 0.0;
};

enum class FrontTarget { carrier_node, modulation_crest };

// Follows one zero crossing of profile(x, t) along x through the given
// times. At each time the sign change nearest the extrapolated previous
// position (initial_guess, or the window centre, at first) is refined by
// bisection, then a line is fitted to position against time.
FrontTrace track_zero(const std::function<double(double, double)>& profile,
                      Window x_window, std::span<const double> times,
                      std::optional<double> initial_guess = std::nullopt);

// Tracks a carrier node or a modulation front of the factor pair on the x
// axis (y = z = 0). Modulation tracking requires beta != 0.
FrontTrace track_front(const FactorPair& factors, Window x_window,
                       std::span<const double> times, FrontTarget target,
                       std::optional<double> initial_guess = std::nullopt);

struct FrontSpeeds {
  FrontTrace carrier;     // first carrier node ahead of the centre
  FrontTrace modulation;  // a modulation zero just ahead of the origin
  double product = 0.0;   // carrier speed * modulation speed
};

// Tracks both fronts over [0, duration] with `samples` equally spaced times,
// seeding each tracker at the analytic position of its feature at t = 0.
FrontSpeeds measure_front_speeds(const BoostParams& params,
                                 double duration = 1.0, int samples = 21);

// Wave number of the modulation from the mean spacing of its equal-time
// zeros along x: pi / spacing. Needs at least two zeros in the window.
double measure_wavenumber(const FactorPair& factors, double t,
                          Window x_window);

// Angular frequency of the modulation at fixed x from the spacing of its
// zeros in time: pi / spacing.
double measure_frequency(const FactorPair& factors, double x,
                         Window t_window);

// --- simultaneity and preferred frame ----------------------------------------

// Equal-time modulation phase lag across dx along the motion,
// gamma omega0 v dx / c^2.
double dephasing(const BoostParams& params, double dx);

struct IsotropyFrame {
  double beta = 0.0;          // frame velocity equalizing the ray pair
  double common_omega = 0.0;  // shared frequency seen from that frame
};

// Finds the frame in which a forward/rearward ray pair has equal frequencies,
// re-expressing each ray with the gamma^a Doppler map of params.exponent_a.
// Throws NoSolution for non-positive or non-finite frequencies.
IsotropyFrame isotropy_search(double omega_forward, double omega_rearward,
                              const BoostParams& params);

// Relative mismatch between two successive gamma^a Doppler maps (beta1, then
// beta2 relative to it) and the single map at their relativistic composition.
// Zero for a = 1.
double group_closure_defect(double exponent_a, double beta1, double beta2);

inline constexpr double kAnisotropyThreshold = 1e-9;

struct DetectabilityReport {
  double exponent_a = 1.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  double closure_defect = 0.0;
  double isotropy_frame_beta = 0.0;
  double isotropy_common_omega = 0.0;
  bool anisotropy_flag = false;
};

DetectabilityReport detectability_report(double exponent_a, double beta1,
                                         double beta2,
                                         const BoostParams& base = {});

// One report per (a, beta) cell with beta1 = beta2 = beta, ordered by
// exponent then beta regardless of worker count.
std::vector<DetectabilityReport> detectability_sweep(
    std::span<const double> exponents, std::span<const double> betas,
    const BoostParams& base = {}, unsigned workers = 0);

// --- quantization ------------------------------------------------------------

struct QuantizationResult {
  double loop_phase = 0.0;
  std::int64_t nearest_n = 0;
  double residual = 0.0;  // in (-pi, pi]
};

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Splits a non-negative loop phase into 2 pi n + residual. The split is exact:
// kTwoPi * n + residual == loop_phase in double arithmetic.
QuantizationResult decompose_loop_phase(double loop_phase);

// Closed path of length path_length with constant kappa_dB.
QuantizationResult bohr_residual(double kappa_dB, double path_length);

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Trapezoidal line integral of kappa_dB along a sampled closed curve
// (first point repeated as the last). Segment arclengths are corrected with
// the curvature of the circle through neighbouring samples.
QuantizationResult bohr_path_integral(std::span<const Vec3> path,
                                      std::span<const double> kappa_dB);

}  // namespace wavekin
