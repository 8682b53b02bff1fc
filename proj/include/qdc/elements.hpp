#pragma once

#include <vector>

#include "qdc/types.hpp"

namespace qdc {

enum class ElementKind { BeamSplitter, PolarizingBeamSplitter, PhaseShifter, HalfWavePlate, QuantumBeamSplitter };

/// One optical element, referencing path modes by index.
///
/// Mode actions (identity elsewhere):
///   bs(i, j)     |i,p> -> (|i,p> + |j,p>)/sqrt(2), |j,p> -> (|i,p> - |j,p>)/sqrt(2)
///                for both polarizations (Hadamard sign convention).
///   pbs(i, j)    H transmits, V swaps modes i and j.
///   phase(i, t)  |i,p> -> e^{it}|i,p> for both polarizations.
///   hwp(i, deg)  on mode i's polarization: [[cos 2f, sin 2f], [sin 2f, -cos 2f]],
///                f given in degrees (22.5 makes it a Hadamard on H/V).
///   qbs(i, j)    beam splitter on the H subspace, identity on V — a beam
///                splitter whose presence is controlled by polarization.
///
/// Angles: phase shifts are radians, wave-plate orientations degrees. The
/// unit mixing is confined to this boundary and mirrored by the bench format.
struct Element {
  ElementKind kind = ElementKind::BeamSplitter;
  int i = 0;
  int j = -1;       // second mode; -1 for single-mode kinds
  double angle = 0.0;

  static Element bs(int i, int j);
  static Element pbs(int i, int j);
  static Element phase(int i, double theta);
  static Element hwp(int i, double angle_deg);
  static Element qbs(int i, int j);

  bool two_mode() const {
    return kind == ElementKind::BeamSplitter || kind == ElementKind::PolarizingBeamSplitter ||
           kind == ElementKind::QuantumBeamSplitter;
  }

  bool operator==(const Element&) const = default;
};

/// A validated 2d x 2d unitary; construction rejects matrices with
/// ||U'U - I||_max >= 1e-10.
class Unitary {
 public:
  explicit Unitary(Matrix entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }

 private:
  Matrix entries_;
};

/// The 2d x 2d action of a single element. Throws std::invalid_argument on
/// out-of-range or coincident mode indices.
Unitary element_unitary(const Element& e, int d);

/// Product U_n ... U_2 U_1 of an ordered element list: the first listed
/// element is applied to the state first. Empty list gives the identity.
Unitary compose(const std::vector<Element>& elements, int d);

/// Polarization-controlled beam splitter built from passive elements:
/// PBS(i,anc_i), PBS(j,anc_j), BS(i,j), PBS(i,anc_i), PBS(j,anc_j).
/// V detours through the ancilla modes around the beam splitter and
/// returns, H passes straight through it. On any input with zero amplitude
/// in the ancilla modes the composition acts exactly as qbs(i, j).
/// Throws std::invalid_argument unless the four indices are distinct.
std::vector<Element> qbs_decomposition(int i, int j, int anc_i, int anc_j);

}  // namespace qdc
