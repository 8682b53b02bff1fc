#include "qdc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace qdc {

namespace {

constexpr double kPi = std::numbers::pi;

double sq(double x) { return x * x; }

double reading(const RunResult& run, const std::string& name) {
  for (const DetectorReading& r : run.readings)
    if (r.spec.name == name) return r.probability;
  throw std::invalid_argument("no detector named '" + name + "'");
}

std::vector<DetectorSpec> two_path_detectors() {
  return {{"D1", 0, PolFilter::Any}, {"D2", 1, PolFilter::Any}};
}

std::vector<DetectorSpec> four_branch_detectors() {
  return {{"D1", 0, PolFilter::V},
          {"D2", 0, PolFilter::H},
          {"D3", 1, PolFilter::H},
          {"D4", 1, PolFilter::V}};
}

}  // namespace

std::string scenario_name(Scenario s) {
  switch (s) {
    case Scenario::WheelerWithBs2: return "wheeler_with_bs2";
    case Scenario::WheelerWithoutBs2: return "wheeler_without_bs2";
    case Scenario::Fig1Quantum: return "fig1_quantum";
    case Scenario::Fig2Mixture: return "fig2_mixture";
    case Scenario::Fig2ParticleWave: return "fig2_particle_wave";
    case Scenario::Fig2Superposition: return "fig2_superposition";
  }
  throw std::invalid_argument("unknown scenario");
}

std::optional<Scenario> scenario_from_name(std::string_view name) {
  for (Scenario s : all_scenarios())
    if (scenario_name(s) == name) return s;
  return std::nullopt;
}

std::vector<Scenario> all_scenarios() {
  return {Scenario::WheelerWithBs2,  Scenario::WheelerWithoutBs2, Scenario::Fig1Quantum,
          Scenario::Fig2Mixture,     Scenario::Fig2ParticleWave,  Scenario::Fig2Superposition};
}

BenchCircuit build_scenario(Scenario s, double alpha, double theta, Pol branch) {
  BenchCircuit c;
  c.d = 2;
  const std::vector<Element> base = {Element::bs(0, 1), Element::phase(1, theta),
                                     Element::qbs(0, 1)};
  switch (s) {
    case Scenario::WheelerWithBs2:
      c.source = {kPi / 2.0, 0};  // pure H: the qbs below would act as a plain bs anyway
      c.elements = {Element::bs(0, 1), Element::phase(1, theta), Element::bs(0, 1)};
      c.detectors = two_path_detectors();
      break;
    case Scenario::WheelerWithoutBs2:
      c.source = {kPi / 2.0, 0};
      c.elements = {Element::bs(0, 1), Element::phase(1, theta)};
      c.detectors = two_path_detectors();
      break;
    case Scenario::Fig1Quantum:
      c.source = {alpha, 0};
      c.elements = base;
      c.detectors = two_path_detectors();
      break;
    case Scenario::Fig2Mixture:
      c.source = {alpha, 0};
      c.elements = base;
      c.detectors = {{"D2", 0, PolFilter::Any}, {"D3", 1, PolFilter::Any}};
      break;
    case Scenario::Fig2ParticleWave:
      c.source = {alpha, 0};
      c.elements = base;
      c.detectors = four_branch_detectors();
      break;
    case Scenario::Fig2Superposition:
      c.source = {alpha, 0};
      c.elements = base;
      c.elements.push_back(Element::hwp(0, 22.5));
      c.elements.push_back(Element::hwp(1, 22.5));
      c.detectors = four_branch_detectors();
      c.postselect = branch;
      break;
  }
  return c;
}

std::string headline_detector(Scenario s) {
  switch (s) {
    case Scenario::WheelerWithBs2:
    case Scenario::WheelerWithoutBs2:
    case Scenario::Fig1Quantum:
      return "D1";
    default:
      return "D2";
  }
}

double oracle_wave(double theta) { return sq(std::cos(theta / 2.0)); }

double oracle_particle() { return 0.5; }

double oracle_mixture(double theta, double alpha) {
  return sq(std::cos(theta / 2.0)) * sq(std::sin(alpha)) + 0.5 * sq(std::cos(alpha));
}

double oracle_superposition(double theta, double alpha) {
  const double root2 = std::sqrt(2.0);
  const double num =
      1.0 + sq(std::sin(alpha)) * std::cos(theta) + root2 * std::sin(2.0 * alpha) * sq(std::cos(theta / 2.0));
  const double den = 2.0 + root2 * std::sin(2.0 * alpha) * std::cos(theta);
  return num / den;
}

std::vector<double> linspace(double a, double b, int n) {
  if (n < 1) throw std::invalid_argument("linspace: need at least one point");
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = a;
    return out;
  }
  for (int k = 0; k < n; ++k) out[k] = a + (b - a) * k / (n - 1);
  return out;
}

std::vector<double> default_theta_grid(int n) { return linspace(0.0, 5.0 * kPi, n); }

std::vector<double> default_alpha_grid(int n) { return linspace(0.0, kPi / 2.0, n); }

SweepResult surface(Scenario s, const std::vector<double>& theta_grid,
                    const std::vector<double>& alpha_grid) {
  if (theta_grid.empty() || alpha_grid.empty())
    throw std::invalid_argument("surface: grids must be nonempty");
  SweepResult res{s, headline_detector(s), theta_grid, alpha_grid,
                  Eigen::MatrixXd(alpha_grid.size(), theta_grid.size())};
  for (size_t ia = 0; ia < alpha_grid.size(); ++ia)
    for (size_t it = 0; it < theta_grid.size(); ++it) {
      const RunResult run = run_circuit(build_scenario(s, alpha_grid[ia], theta_grid[it]));
      res.values(ia, it) = reading(run, res.detector);
    }
  return res;
}

void write_sweep_csv(std::ostream& os, const SweepResult& result) {
  os << "theta,alpha,intensity\n";
  for (size_t ia = 0; ia < result.alpha_grid.size(); ++ia)
    for (size_t it = 0; it < result.theta_grid.size(); ++it)
      os << format_number(result.theta_grid[it]) << ',' << format_number(result.alpha_grid[ia])
         << ',' << format_number(result.values(ia, it)) << '\n';
}

CheckResult make_check(std::string name, double observed, double threshold,
                       CheckDirection direction) {
  const bool passed =
      direction == CheckDirection::AtMost ? observed < threshold : observed > threshold;
  return {std::move(name), observed, threshold, direction, passed};
}

namespace {

// Expected reading of each detector of a scenario, as a closed form.
double expected_reading(Scenario s, const std::string& det, double theta, double alpha,
                        Pol branch) {
  switch (s) {
    case Scenario::WheelerWithBs2:
      return det == "D1" ? oracle_wave(theta) : 1.0 - oracle_wave(theta);
    case Scenario::WheelerWithoutBs2:
      return oracle_particle();
    case Scenario::Fig1Quantum:
      return det == "D1" ? oracle_mixture(theta, alpha) : 1.0 - oracle_mixture(theta, alpha);
    case Scenario::Fig2Mixture:
      return det == "D2" ? oracle_mixture(theta, alpha) : 1.0 - oracle_mixture(theta, alpha);
    case Scenario::Fig2ParticleWave:
      if (det == "D1" || det == "D4") return oracle_particle();
      return det == "D2" ? oracle_wave(theta) : 1.0 - oracle_wave(theta);
    case Scenario::Fig2Superposition: {
      // The kept branch carries cos a|particle> +/- sin a|wave>; the V
      // branch intensity is the H closed form with alpha negated.
      const double kept = branch == Pol::H ? oracle_superposition(theta, alpha)
                                           : oracle_superposition(theta, -alpha);
      const bool h_det = det == "D2" || det == "D3";
      const bool kept_det = (branch == Pol::H) == h_det;
      if (!kept_det) return 0.0;
      const bool path0 = det == "D1" || det == "D2";
      return path0 ? kept : 1.0 - kept;
    }
  }
  throw std::invalid_argument("unknown scenario");
}

double scenario_deviation(Scenario s, double theta, double alpha, Pol branch) {
  const RunResult run = run_circuit(build_scenario(s, alpha, theta, branch));
  double dev = 0.0;
  for (const DetectorReading& r : run.readings)
    dev = std::max(dev, std::abs(r.probability - expected_reading(s, r.spec.name, theta, alpha, branch)));
  return dev;
}

}  // namespace

CheckResult verify_scenario(Scenario s, const std::vector<double>& theta_grid,
                            const std::vector<double>& alpha_grid, double tol) {
  if (theta_grid.empty() || alpha_grid.empty())
    throw std::invalid_argument("verify_scenario: grids must be nonempty");
  double dev = 0.0;
  for (double alpha : alpha_grid) {
    if (s == Scenario::Fig2ParticleWave)
      alpha = std::clamp(alpha, 0.02, kPi / 2.0 - 0.02);  // keep both branches populated
    for (double theta : theta_grid) {
      dev = std::max(dev, scenario_deviation(s, theta, alpha, Pol::H));
      if (s == Scenario::Fig2Superposition)
        dev = std::max(dev, scenario_deviation(s, theta, alpha, Pol::V));
    }
  }
  return make_check("scenario:" + scenario_name(s), dev, tol);
}

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

double unitarity_deviation() {
  double dev = 0.0;
  for (int d : {2, 3, 4}) {
    std::vector<Element> zoo = {Element::bs(0, 1),     Element::bs(0, d - 1),
                                Element::pbs(0, 1),    Element::pbs(d - 2, d - 1),
                                Element::phase(0, 0.7), Element::phase(d - 1, -2.31),
                                Element::hwp(0, 22.5), Element::hwp(d - 1, 13.0),
                                Element::qbs(0, 1),    Element::qbs(0, d - 1)};
    for (const Element& e : zoo) {
      const Matrix u = element_unitary(e, d).entries();
      dev = std::max(dev, max_abs(u.adjoint() * u - Matrix::Identity(2 * d, 2 * d)));
    }
  }
  return dev;
}

double pbs_involution_deviation() {
  double dev = 0.0;
  for (int d : {2, 3, 4}) {
    const Matrix u = element_unitary(Element::pbs(0, d - 1), d).entries();
    dev = std::max(dev, max_abs(u * u - Matrix::Identity(2 * d, 2 * d)));
  }
  return dev;
}

double qbs_commutator_deviation() {
  const int d = 2;
  const Matrix q = element_unitary(Element::qbs(0, 1), d).entries();
  double dev = 0.0;
  // Any polarization-diagonal operator uniform across the two coupled
  // modes: e^{ia} on H, e^{ib} on V.
  Matrix diag = Matrix::Identity(2 * d, 2 * d);
  for (int m : {0, 1}) {
    diag(flat_index(m, Pol::H), flat_index(m, Pol::H)) = std::polar(1.0, 0.9);
    diag(flat_index(m, Pol::V), flat_index(m, Pol::V)) = std::polar(1.0, -1.7);
  }
  dev = std::max(dev, max_abs(q * diag - diag * q));
  // The phase shifter pair is the polarization-blind instance.
  const Matrix p = compose({Element::phase(0, 0.613), Element::phase(1, 0.613)}, d).entries();
  dev = std::max(dev, max_abs(q * p - p * q));
  return dev;
}

double qbs_decomposition_deviation() {
  double dev = 0.0;
  struct Pick {
    int i, j, anc_i, anc_j;
  };
  for (const Pick& pk : {Pick{0, 1, 2, 3}, Pick{1, 3, 0, 2}}) {
    const Matrix m = compose(qbs_decomposition(pk.i, pk.j, pk.anc_i, pk.anc_j), 4).entries();
    const Matrix q = element_unitary(Element::qbs(pk.i, pk.j), 4).entries();
    const int sub[4] = {flat_index(pk.i, Pol::H), flat_index(pk.i, Pol::V),
                        flat_index(pk.j, Pol::H), flat_index(pk.j, Pol::V)};
    for (int r : sub)
      for (int c : sub) dev = std::max(dev, std::abs(m(r, c) - q(r, c)));
  }
  return dev;
}

double overlap_deviation(Scenario s, bool postselected, int n) {
  double dev = 0.0;
  for (double alpha : linspace(0.0, kPi / 2.0, n))
    for (double theta : linspace(0.0, 2.0 * kPi, n)) {
      const BenchCircuit c = build_scenario(s, alpha, theta);
      PureState ref = s == Scenario::Fig1Quantum ? hyperentangled_state(alpha, theta)
                                                 : post_hwp_state(alpha, theta);
      PureState got = output_state(c);
      if (postselected) {
        got = postselect(got, Pol::H).state;
        ref = tensor_with_pol(wave_particle_superposition(alpha, theta), Pol::H);
      }
      dev = std::max(dev, std::abs(1.0 - std::abs(inner(got, ref))));
    }
  return dev;
}

double special_value_deviation(double alpha, double target) {
  const std::vector<double> thetas = linspace(0.0, 2.0 * kPi, 1000);
  std::vector<double> vals;
  vals.reserve(thetas.size());
  for (double theta : thetas) {
    const RunResult run = run_circuit(build_scenario(Scenario::Fig2Superposition, alpha, theta));
    vals.push_back(reading(run, "D2"));
  }
  double mean = 0.0, maxdev = 0.0;
  for (double v : vals) {
    mean += v;
    maxdev = std::max(maxdev, std::abs(v - target));
  }
  mean /= vals.size();
  double var = 0.0;
  for (double v : vals) var += sq(v - mean);
  const double sd = std::sqrt(var / vals.size());
  return std::max(sd, maxdev);
}

std::vector<double> fringe(Scenario s, double alpha, const std::string& det) {
  std::vector<double> out;
  for (double theta : linspace(0.0, 2.0 * kPi, 129))
    out.push_back(reading(run_circuit(build_scenario(s, alpha, theta)), det));
  return out;
}

}  // namespace

VerifyReport verify_all(double tol) {
  VerifyReport report;
  report.tolerance = tol;

  const std::vector<double> thetas = default_theta_grid(64);
  const std::vector<double> alphas = default_alpha_grid(64);
  for (Scenario s : all_scenarios())
    report.checks.push_back(verify_scenario(s, thetas, alphas, tol));

  report.checks.push_back(make_check("elements:unitarity", unitarity_deviation(), kUnitaryTol));
  report.checks.push_back(make_check("elements:pbs_involution", pbs_involution_deviation(), 1e-12));
  report.checks.push_back(
      make_check("elements:qbs_pol_diag_commutator", qbs_commutator_deviation(), 1e-12));
  report.checks.push_back(
      make_check("elements:qbs_decomposition", qbs_decomposition_deviation(), 1e-12));

  report.checks.push_back(
      make_check("states:hyperentangled_overlap", overlap_deviation(Scenario::Fig1Quantum, false, 16), tol));
  report.checks.push_back(make_check(
      "states:post_hwp_overlap", overlap_deviation(Scenario::Fig2Superposition, false, 16), tol));
  report.checks.push_back(make_check(
      "states:postselected_overlap", overlap_deviation(Scenario::Fig2Superposition, true, 16), tol));

  const double root2 = std::sqrt(2.0);
  report.checks.push_back(make_check(
      "special:alpha_pi_4", special_value_deviation(kPi / 4.0, (2.0 + root2) / 4.0), 1e-12));
  report.checks.push_back(make_check(
      "special:alpha_3pi_4", special_value_deviation(3.0 * kPi / 4.0, (2.0 - root2) / 4.0), 1e-12));

  const std::vector<double> wave = fringe(Scenario::Fig2ParticleWave, kPi / 3.0, "D2");
  const std::vector<double> particle = fringe(Scenario::Fig2ParticleWave, kPi / 3.0, "D1");
  const std::vector<double> flat = fringe(Scenario::Fig2Superposition, kPi / 4.0, "D2");
  report.checks.push_back(make_check("visibility:wave", std::abs(visibility(wave) - 1.0), 1e-12));
  report.checks.push_back(make_check("visibility:particle", visibility(particle), 1e-12));
  report.checks.push_back(
      make_check("visibility:superposition_alpha_pi_4", visibility(flat), 1e-12));

  const SweepResult mix = surface(Scenario::Fig2Mixture, thetas, alphas);
  const SweepResult sup = surface(Scenario::Fig2Superposition, thetas, alphas);
  const Eigen::MatrixXd diff = (mix.values - sup.values).cwiseAbs();
  const double boundary =
      std::max(diff.row(0).maxCoeff(), diff.row(diff.rows() - 1).maxCoeff());
  report.checks.push_back(make_check("surfaces:boundary_rows", boundary, 1e-12));
  report.checks.push_back(
      make_check("surfaces:distinctness", diff.maxCoeff(), 0.1, CheckDirection::AtLeast));

  report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const CheckResult& c) { return c.passed; });
  return report;
}

}  // namespace qdc
