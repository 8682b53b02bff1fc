#include "qdc/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace qdc {

bool detector_matches(const DetectorSpec& event, BasisLabel label) {
  if (event.mode != label.mode) return false;
  return event.pol == PolFilter::Any || event.pol == to_filter(label.pol);
}

std::vector<double> outcome_probabilities(const PureState& state) {
  std::vector<double> p(state.dim());
  for (int k = 0; k < state.dim(); ++k) p[k] = std::norm(state.amplitudes()[k]);
  return p;
}

Postselected postselect(const PureState& state, Pol pol) {
  double weight = 0.0;
  for (int m = 0; m < state.modes(); ++m) weight += std::norm(state.amplitude(m, pol));
  if (weight < kDegenerateProb)
    throw DegeneratePostselection("postselect: branch probability " + std::to_string(weight) +
                                  " is degenerate");
  Vector amp = Vector::Zero(state.dim());
  const double scale = 1.0 / std::sqrt(weight);
  for (int m = 0; m < state.modes(); ++m)
    amp[flat_index(m, pol)] = state.amplitude(m, pol) * scale;
  return {PureState(state.modes(), std::move(amp)), weight};
}

double detector_probability(const PureState& state, const DetectorSpec& event) {
  double p = 0.0;
  for (Pol pol : {Pol::H, Pol::V})
    if (matches(event, event.mode, pol)) p += std::norm(state.amplitude(event.mode, pol));
  return p;
}

double conditional_probability(const PureState& state, const DetectorSpec& event, Pol given_pol) {
  double branch = 0.0;
  for (int m = 0; m < state.modes(); ++m) branch += std::norm(state.amplitude(m, given_pol));
  if (branch < kDegenerateProb)
    throw DegeneratePostselection("conditional_probability: P(pol) is degenerate");
  // Event restricted to the conditioning polarization; a disjoint filter
  // makes the conjunction empty.
  double joint = 0.0;
  if (matches(event, event.mode, given_pol)) joint = std::norm(state.amplitude(event.mode, given_pol));
  return joint / branch;
}

std::vector<double> mixture_path_probabilities(const PureState& state) {
  std::vector<double> p(state.modes());
  for (int m = 0; m < state.modes(); ++m)
    p[m] = std::norm(state.amplitude(m, Pol::H)) + std::norm(state.amplitude(m, Pol::V));
  return p;
}

double visibility(std::span<const double> intensities) {
  if (intensities.empty()) throw std::invalid_argument("visibility: empty intensity list");
  const auto [lo, hi] = std::minmax_element(intensities.begin(), intensities.end());
  const double denom = *hi + *lo;
  if (denom < kDegenerateProb)
    throw std::invalid_argument("visibility: I_max + I_min is too small");
  return (*hi - *lo) / denom;
}

std::vector<std::uint64_t> sample_shots(const std::vector<double>& table, std::uint64_t n,
                                        std::uint64_t seed) {
  if (table.empty()) throw std::invalid_argument("sample_shots: empty table");
  double sum = 0.0;
  for (double p : table) {
    if (!(p >= -1e-12) || p > 1.0 + 1e-12)
      throw std::invalid_argument("sample_shots: entry outside [0,1]");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("sample_shots: table sums to " + std::to_string(sum));

  std::vector<std::uint64_t> counts(table.size(), 0);
  std::mt19937_64 rng(seed);
  for (std::uint64_t shot = 0; shot < n; ++shot) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    double cum = 0.0;
    std::size_t pick = table.size() - 1;  // rounding guard: last bucket absorbs u ~ 1
    for (std::size_t k = 0; k < table.size(); ++k) {
      cum += table[k];
      if (u < cum) {
        pick = k;
        break;
      }
    }
    ++counts[pick];
  }
  return counts;
}

}  // namespace qdc
