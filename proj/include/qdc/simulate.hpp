#pragma once

#include <optional>

#include "qdc/bench.hpp"
#include "qdc/measurement.hpp"
#include "qdc/state.hpp"

namespace qdc {

struct DetectorReading {
  DetectorSpec spec;
  double probability = 0.0;
};

/// Result of running a bench circuit.
///
/// Detector probability conventions:
///  - with a postselect directive, readings are Born probabilities on the
///    conditioned state (detectors on the discarded polarization read 0);
///  - without one, pol=any detectors report the path marginal, while
///    polarized detectors report the intensity renormalized within their
///    polarization branch, P(mode,pol)/P(pol) — the interference pattern
///    each branch shows on its own.
struct RunResult {
  PureState output;                       // state after the element list
  std::optional<PureState> conditioned;   // after postselection, when requested
  double postselect_probability = 1.0;
  std::vector<DetectorReading> readings;
};

/// Source state pushed through the composed element list (no detection).
PureState output_state(const BenchCircuit& circuit);

/// Full run: output state, optional postselection, detector readings.
/// Throws DegeneratePostselection when a postselect directive or a
/// polarized detector conditions on a branch of probability < 1e-12.
RunResult run_circuit(const BenchCircuit& circuit);

}  // namespace qdc
