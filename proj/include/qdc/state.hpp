#pragma once

#include <stdexcept>

#include "qdc/types.hpp"

namespace qdc {

/// Normalized amplitude vector over d path modes ⊗ {H, V}.
/// Immutable after construction; the constructor enforces the norm
/// invariant so every PureState in flight is a valid quantum state.
class PureState {
 public:
  /// Throws std::invalid_argument unless amplitudes has length 2*d,
  /// d >= 2, and unit squared norm within 1e-12.
  PureState(int d, Vector amplitudes);

  /// The basis state |mode, pol>.
  static PureState basis(int d, int mode, Pol pol);

  int modes() const { return d_; }
  int dim() const { return static_cast<int>(amp_.size()); }
  const Vector& amplitudes() const { return amp_; }
  Complex amplitude(int mode, Pol pol) const {
    return amp_[flat_index(mode, pol)];
  }

  bool operator==(const PureState&) const = default;

 private:
  int d_;
  Vector amp_;
};

/// Hermitian, unit-trace, positive-semidefinite operator. Validated on
/// construction (Hermiticity and trace within 1e-12, eigenvalue floor
/// -1e-10).
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }

 private:
  Matrix entries_;
};

/// Photon entering path `mode` with polarization sin(alpha)|H> + cos(alpha)|V>.
PureState source_state(double alpha, int mode, int d);

/// Path-factor state (|0> + e^{i theta}|1>)/sqrt(2), zero on modes >= 2.
/// Which-path superposition with no interference: detecting either mode is
/// equally likely for every theta.
Vector particle_state(double theta, int d);

/// Path-factor state e^{i theta/2}(cos(theta/2)|0> - i sin(theta/2)|1>),
/// the interfering output of a balanced interferometer. The global phase
/// e^{i theta/2} is kept as written.
Vector wave_state(double theta, int d);

/// Embed a path-factor vector as a PureState with definite polarization.
PureState tensor_with_pol(const Vector& path, Pol pol);

/// amplitudes <- U * amplitudes. U must be unitary within 1e-10 and match
/// the state dimension; throws std::invalid_argument otherwise.
PureState apply_unitary(const PureState& state, const Matrix& u);

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const PureState& a, const PureState& b);
Complex inner(const Vector& a, const Vector& b);

/// |s><s|.
DensityMatrix to_density(const PureState& state);

/// Trace out the polarization factor: (rho_path)_{mn} = sum_p rho_{(m,p),(n,p)}.
/// Throws std::invalid_argument on odd dimension.
DensityMatrix partial_trace_pol(const DensityMatrix& rho);

// Closed-form reference states for the two-path interferometer, used as
// independent targets for the circuit-built states.

/// cos(alpha)|particle>|V> + sin(alpha)|wave>|H>: the path-polarization
/// hyperentangled state the interferometer prepares.
PureState hyperentangled_state(double alpha, double theta);

/// State after a 22.5° half-wave plate on each output arm:
/// [(cos a|particle> + sin a|wave>)|H> - (cos a|particle> - sin a|wave>)|V>]/sqrt(2).
PureState post_hwp_state(double alpha, double theta);

/// Normalized wave-particle superposition selected by the H outcome:
/// (cos a|particle> + sin a|wave>) / sqrt(1 + sqrt(2) sin a cos a cos theta).
/// Path factor only.
Vector wave_particle_superposition(double alpha, double theta);

}  // namespace qdc
