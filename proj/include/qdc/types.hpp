#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qdc {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Photon polarization. H occupies the even flat indices, V the odd ones.
enum class Pol { H = 0, V = 1 };

/// One basis vector of the path ⊗ polarization space: a path mode in
/// [0, d) together with a polarization. The flat amplitude index is
/// k = 2*mode + polbit with polbit(H) = 0, polbit(V) = 1.
struct BasisLabel {
  int mode = 0;
  Pol pol = Pol::H;

  bool operator==(const BasisLabel&) const = default;
};

constexpr int flat_index(int mode, Pol pol) {
  return 2 * mode + static_cast<int>(pol);
}

constexpr BasisLabel label_of(int flat) {
  return BasisLabel{flat / 2, static_cast<Pol>(flat % 2)};
}

constexpr char pol_char(Pol p) { return p == Pol::H ? 'H' : 'V'; }

// Tolerance hierarchy. Construction invariants sit at 1e-12, unitarity
// checks at 1e-10, and the PSD eigenvalue floor at -1e-10; dimensions
// stay <= 8 here so rounding never approaches these.
inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kPsdFloor = -1e-10;
inline constexpr double kDegenerateProb = 1e-12;

}  // namespace qdc
