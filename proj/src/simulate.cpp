#include "qdc/simulate.hpp"

namespace qdc {

PureState output_state(const BenchCircuit& circuit) {
  const PureState in = source_state(circuit.source.alpha, circuit.source.mode, circuit.d);
  const Unitary u = compose(circuit.elements, circuit.d);
  return PureState(in.modes(), u.entries() * in.amplitudes());
}

RunResult run_circuit(const BenchCircuit& circuit) {
  PureState out = output_state(circuit);
  RunResult result{out, std::nullopt, 1.0, {}};
  const PureState* read_from = &result.output;
  if (circuit.postselect) {
    Postselected ps = postselect(out, *circuit.postselect);
    result.postselect_probability = ps.probability;
    result.conditioned = std::move(ps.state);
    read_from = &*result.conditioned;
  }
  for (const DetectorSpec& det : circuit.detectors) {
    double p;
    if (circuit.postselect || det.pol == PolFilter::Any) {
      p = detector_probability(*read_from, det);
    } else {
      const Pol given = det.pol == PolFilter::H ? Pol::H : Pol::V;
      p = conditional_probability(*read_from, det, given);
    }
    result.readings.push_back({det, p});
  }
  return result;
}

}  // namespace qdc
