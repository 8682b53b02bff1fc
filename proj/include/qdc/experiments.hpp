#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdc/bench.hpp"
#include "qdc/simulate.hpp"

namespace qdc {

/// The canonical interferometer configurations.
///
/// The wheeler pair are the classical open/closed interferometers with a
/// fixed pure-H source (the polarization-controlled splitter then acts as
/// a plain one); fig1_quantum / fig2_* share the base circuit
/// [bs 0 1, phase 1 theta, qbs 0 1] on a sin(a)H + cos(a)V source and
/// differ in the detection stage:
///   fig1_quantum      polarization-blind detectors on both paths
///   fig2_mixture      same detectors, read as the wave-particle mixture
///   fig2_particle_wave  four polarized detectors, branch-renormalized:
///                       V detectors see the flat particle pattern,
///                       H detectors the interference fringes
///   fig2_superposition  22.5° half-wave plates on both arms, then the four
///                       detectors with polarization postselection — the
///                       postselected branch carries a coherent
///                       wave-particle superposition
enum class Scenario {
  WheelerWithBs2,
  WheelerWithoutBs2,
  Fig1Quantum,
  Fig2Mixture,
  Fig2ParticleWave,
  Fig2Superposition,
};

std::string scenario_name(Scenario s);
std::optional<Scenario> scenario_from_name(std::string_view name);
std::vector<Scenario> all_scenarios();

/// Concrete circuit for a scenario at the given knob settings. `branch`
/// selects the postselected polarization for fig2_superposition (H keeps
/// cos a|particle> + sin a|wave>, V the minus combination); other
/// scenarios ignore it. The wheeler scenarios ignore alpha (their source
/// is fixed pure H).
BenchCircuit build_scenario(Scenario s, double alpha, double theta, Pol branch = Pol::H);

/// Detector whose reading is the path-0 intensity plotted for a scenario.
std::string headline_detector(Scenario s);

// Closed-form intensities for the path-0 detector.

/// Interference fringes of the closed interferometer: cos^2(theta/2).
double oracle_wave(double theta);
/// Flat which-path distribution of the open interferometer: 1/2.
double oracle_particle();
/// Path-0 intensity of the wave-particle mixture:
/// cos^2(theta/2) sin^2(a) + cos^2(a)/2.
double oracle_mixture(double theta, double alpha);
/// Path-0 intensity of the postselected wave-particle superposition:
/// (1 + sin^2(a) cos t + sqrt(2) sin 2a cos^2(t/2)) / (2 + sqrt(2) sin 2a cos t).
/// The denominator stays >= 2 - sqrt(2) for real inputs. The V-branch
/// intensity is oracle_superposition(theta, -alpha).
double oracle_superposition(double theta, double alpha);

/// Intensity grid for a scenario's headline detector: values(ia, it) at
/// alpha_grid[ia], theta_grid[it].
struct SweepResult {
  Scenario scenario;
  std::string detector;
  std::vector<double> theta_grid;
  std::vector<double> alpha_grid;
  Eigen::MatrixXd values;  // |alpha_grid| rows x |theta_grid| cols
};

SweepResult surface(Scenario s, const std::vector<double>& theta_grid,
                    const std::vector<double>& alpha_grid);

/// CSV with header `theta,alpha,intensity`, row-major over alpha then
/// theta, 17-significant-digit floats, LF line endings.
void write_sweep_csv(std::ostream& os, const SweepResult& result);

/// n evenly spaced points including both endpoints (n == 1 gives {a}).
std::vector<double> linspace(double a, double b, int n);
/// Default plotting grids: theta over [0, 5*pi], alpha over [0, pi/2].
/// 256 x 64 points resolves every fringe of the 2*pi-periodic patterns.
std::vector<double> default_theta_grid(int n = 256);
std::vector<double> default_alpha_grid(int n = 64);

enum class CheckDirection { AtMost, AtLeast };

/// One verification check: `observed` compared against `threshold` in the
/// given direction. For scenario checks `observed` is the maximum absolute
/// simulator-vs-closed-form deviation over the grid and all detectors.
struct CheckResult {
  std::string name;
  double observed = 0.0;
  double threshold = 0.0;
  CheckDirection direction = CheckDirection::AtMost;
  bool passed = false;
};

CheckResult make_check(std::string name, double observed, double threshold,
                       CheckDirection direction = CheckDirection::AtMost);

/// Compare a scenario's simulated detector readings against the matching
/// closed forms on the grid. fig2_particle_wave conditions within each
/// polarization branch, so its alpha grid is clamped away from the empty
/// branches at 0 and pi/2.
CheckResult verify_scenario(Scenario s, const std::vector<double>& theta_grid,
                            const std::vector<double>& alpha_grid, double tol);

struct VerifyReport {
  double tolerance = 0.0;
  std::vector<CheckResult> checks;
  bool passed = false;
};

/// All scenario equivalences plus the element and state property suites.
/// `tol` governs the simulator-vs-closed-form and state-identity checks;
/// structural thresholds (unitarity, operator identities, special values,
/// visibilities, surface boundary agreement) are fixed constants.
VerifyReport verify_all(double tol = 1e-10);

}  // namespace qdc
