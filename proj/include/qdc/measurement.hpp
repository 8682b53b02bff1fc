#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "qdc/bench.hpp"
#include "qdc/state.hpp"

namespace qdc {

/// Conditioning on an outcome whose probability is below 1e-12: the
/// conditional state is numerically meaningless.
class DegeneratePostselection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Born-rule distribution over the full basis, flat-index order
/// (k = 2*mode + polbit). Sums to 1 for a normalized input.
std::vector<double> outcome_probabilities(const PureState& state);

struct Postselected {
  PureState state;     // other polarization zeroed, renormalized
  double probability;  // squared norm of the surviving branch
};

/// Keep only the given polarization and renormalize. Throws
/// DegeneratePostselection when the branch weight is below 1e-12.
Postselected postselect(const PureState& state, Pol pol);

/// Whether a basis label triggers the detector.
bool detector_matches(const DetectorSpec& event, BasisLabel label);

/// Unconditional probability of the detection event: sum of |amplitude|^2
/// over labels matching the detector's mode and polarization filter.
double detector_probability(const PureState& state, const DetectorSpec& event);

/// P(event and given_pol) / P(given_pol). Throws DegeneratePostselection
/// when P(given_pol) < 1e-12.
double conditional_probability(const PureState& state, const DetectorSpec& event, Pol given_pol);

/// Per-mode probabilities p(m) = sum_p |amp(m,p)|^2 — the distribution a
/// polarization-blind detector sees, equal to the diagonal of the
/// polarization-traced density matrix.
std::vector<double> mixture_path_probabilities(const PureState& state);

/// (I_max - I_min) / (I_max + I_min). Throws std::invalid_argument on an
/// empty list or a denominator below 1e-12.
double visibility(std::span<const double> intensities);

/// Multinomial draw of n events from a probability table (entries in
/// [0,1], summing to 1 within 1e-9). Deterministic: shot k consumes the
/// k-th 53-bit uniform from std::mt19937_64 seeded with `seed` and picks
/// the first entry whose cumulative probability exceeds it (entries
/// scanned in index order). Counts sum to n.
std::vector<std::uint64_t> sample_shots(const std::vector<double>& table, std::uint64_t n,
                                        std::uint64_t seed);

}  // namespace qdc
