#include "qdc/state.hpp"

#include <cmath>
#include <string>

namespace qdc {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

PureState::PureState(int d, Vector amplitudes) : d_(d), amp_(std::move(amplitudes)) {
  require(d_ >= 2, "PureState: need at least 2 path modes, got " + std::to_string(d_));
  require(amp_.size() == 2 * d_,
          "PureState: amplitude length " + std::to_string(amp_.size()) +
              " does not match 2*d = " + std::to_string(2 * d_));
  const double norm2 = amp_.squaredNorm();
  require(std::abs(norm2 - 1.0) < kNormTol,
          "PureState: squared norm " + std::to_string(norm2) + " is not 1");
}

PureState PureState::basis(int d, int mode, Pol pol) {
  require(d >= 2, "basis: need at least 2 path modes");
  require(mode >= 0 && mode < d, "basis: mode " + std::to_string(mode) + " out of range");
  Vector amp = Vector::Zero(2 * d);
  amp[flat_index(mode, pol)] = 1.0;
  return PureState(d, std::move(amp));
}

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
  require(entries_.rows() == entries_.cols(), "DensityMatrix: matrix must be square");
  const double herm = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  require(herm < kHermitianTol, "DensityMatrix: not Hermitian, deviation " + std::to_string(herm));
  const Complex tr = entries_.trace();
  require(std::abs(tr - 1.0) < kNormTol, "DensityMatrix: trace is not 1");
  Eigen::SelfAdjointEigenSolver<Matrix> es(entries_, Eigen::EigenvaluesOnly);
  require(es.eigenvalues().minCoeff() >= kPsdFloor,
          "DensityMatrix: negative eigenvalue below floor");
}

PureState source_state(double alpha, int mode, int d) {
  require(d >= 2, "source_state: need at least 2 path modes");
  require(mode >= 0 && mode < d,
          "source_state: mode " + std::to_string(mode) + " out of range for d = " + std::to_string(d));
  Vector amp = Vector::Zero(2 * d);
  amp[flat_index(mode, Pol::H)] = std::sin(alpha);
  amp[flat_index(mode, Pol::V)] = std::cos(alpha);
  return PureState(d, std::move(amp));
}

Vector particle_state(double theta, int d) {
  require(d >= 2, "particle_state: need at least 2 path modes");
  Vector v = Vector::Zero(d);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  v[0] = inv_sqrt2;
  v[1] = std::polar(inv_sqrt2, theta);
  return v;
}

Vector wave_state(double theta, int d) {
  require(d >= 2, "wave_state: need at least 2 path modes");
  Vector v = Vector::Zero(d);
  const Complex phase = std::polar(1.0, theta / 2.0);
  v[0] = phase * std::cos(theta / 2.0);
  v[1] = phase * Complex(0.0, -1.0) * std::sin(theta / 2.0);
  return v;
}

PureState tensor_with_pol(const Vector& path, Pol pol) {
  const int d = static_cast<int>(path.size());
  Vector amp = Vector::Zero(2 * d);
  for (int m = 0; m < d; ++m) amp[flat_index(m, pol)] = path[m];
  return PureState(d, std::move(amp));
}

PureState apply_unitary(const PureState& state, const Matrix& u) {
  require(u.rows() == u.cols() && u.rows() == state.dim(),
          "apply_unitary: operator dimension does not match state");
  const double dev = (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()))
                         .cwiseAbs()
                         .maxCoeff();
  require(dev < kUnitaryTol, "apply_unitary: matrix is not unitary, ||U'U - I|| = " + std::to_string(dev));
  return PureState(state.modes(), u * state.amplitudes());
}

Complex inner(const PureState& a, const PureState& b) {
  require(a.dim() == b.dim(), "inner: dimension mismatch");
  return a.amplitudes().dot(b.amplitudes());
}

Complex inner(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), "inner: dimension mismatch");
  return a.dot(b);
}

DensityMatrix to_density(const PureState& state) {
  return DensityMatrix(state.amplitudes() * state.amplitudes().adjoint());
}

DensityMatrix partial_trace_pol(const DensityMatrix& rho) {
  const int dim = rho.dim();
  require(dim % 2 == 0, "partial_trace_pol: dimension must be even");
  const int d = dim / 2;
  Matrix out = Matrix::Zero(d, d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n)
      out(m, n) = rho.entries()(2 * m, 2 * n) + rho.entries()(2 * m + 1, 2 * n + 1);
  return DensityMatrix(std::move(out));
}

PureState hyperentangled_state(double alpha, double theta) {
  const Vector p = particle_state(theta, 2);
  const Vector w = wave_state(theta, 2);
  Vector amp(4);
  for (int m = 0; m < 2; ++m) {
    amp[flat_index(m, Pol::V)] = std::cos(alpha) * p[m];
    amp[flat_index(m, Pol::H)] = std::sin(alpha) * w[m];
  }
  return PureState(2, std::move(amp));
}

PureState post_hwp_state(double alpha, double theta) {
  const Vector p = particle_state(theta, 2);
  const Vector w = wave_state(theta, 2);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Vector amp(4);
  for (int m = 0; m < 2; ++m) {
    const Complex plus = std::cos(alpha) * p[m] + std::sin(alpha) * w[m];
    const Complex minus = std::cos(alpha) * p[m] - std::sin(alpha) * w[m];
    amp[flat_index(m, Pol::H)] = inv_sqrt2 * plus;
    amp[flat_index(m, Pol::V)] = -inv_sqrt2 * minus;
  }
  return PureState(2, std::move(amp));
}

Vector wave_particle_superposition(double alpha, double theta) {
  const Vector p = particle_state(theta, 2);
  const Vector w = wave_state(theta, 2);
  // Squared norm of cos a |particle> + sin a |wave>; <particle|wave> =
  // cos(theta)/sqrt(2), so this stays >= 1 - sqrt(2)/2 > 0 for all inputs.
  const double norm2 = 1.0 + std::sqrt(2.0) * std::sin(alpha) * std::cos(alpha) * std::cos(theta);
  return (std::cos(alpha) * p + std::sin(alpha) * w) / std::sqrt(norm2);
}

}  // namespace qdc
