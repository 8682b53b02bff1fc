#include "qdc/elements.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qdc {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void check_mode(int m, int d) {
  require(m >= 0 && m < d,
          "element: mode " + std::to_string(m) + " out of range for d = " + std::to_string(d));
}

}  // namespace

Element Element::bs(int i, int j) { return Element{ElementKind::BeamSplitter, i, j, 0.0}; }
Element Element::pbs(int i, int j) { return Element{ElementKind::PolarizingBeamSplitter, i, j, 0.0}; }
Element Element::phase(int i, double theta) { return Element{ElementKind::PhaseShifter, i, -1, theta}; }
Element Element::hwp(int i, double angle_deg) { return Element{ElementKind::HalfWavePlate, i, -1, angle_deg}; }
Element Element::qbs(int i, int j) { return Element{ElementKind::QuantumBeamSplitter, i, j, 0.0}; }

Unitary::Unitary(Matrix entries) : entries_(std::move(entries)) {
  require(entries_.rows() == entries_.cols(), "Unitary: matrix must be square");
  const double dev =
      (entries_.adjoint() * entries_ - Matrix::Identity(entries_.rows(), entries_.cols()))
          .cwiseAbs()
          .maxCoeff();
  require(dev < kUnitaryTol, "Unitary: ||U'U - I||_max = " + std::to_string(dev));
}

Unitary element_unitary(const Element& e, int d) {
  check_mode(e.i, d);
  if (e.two_mode()) {
    check_mode(e.j, d);
    require(e.i != e.j, "element: the two mode indices must differ");
  }

  Matrix u = Matrix::Identity(2 * d, 2 * d);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  switch (e.kind) {
    case ElementKind::BeamSplitter:
      for (Pol p : {Pol::H, Pol::V}) {
        const int a = flat_index(e.i, p), b = flat_index(e.j, p);
        u(a, a) = inv_sqrt2;
        u(b, a) = inv_sqrt2;
        u(a, b) = inv_sqrt2;
        u(b, b) = -inv_sqrt2;
      }
      break;
    case ElementKind::PolarizingBeamSplitter: {
      const int iv = flat_index(e.i, Pol::V), jv = flat_index(e.j, Pol::V);
      u(iv, iv) = 0.0;
      u(jv, jv) = 0.0;
      u(jv, iv) = 1.0;
      u(iv, jv) = 1.0;
      break;
    }
    case ElementKind::PhaseShifter: {
      const Complex ph = std::polar(1.0, e.angle);
      u(flat_index(e.i, Pol::H), flat_index(e.i, Pol::H)) = ph;
      u(flat_index(e.i, Pol::V), flat_index(e.i, Pol::V)) = ph;
      break;
    }
    case ElementKind::HalfWavePlate: {
      const double two_f = 2.0 * e.angle * std::numbers::pi / 180.0;
      const int h = flat_index(e.i, Pol::H), v = flat_index(e.i, Pol::V);
      u(h, h) = std::cos(two_f);
      u(v, h) = std::sin(two_f);
      u(h, v) = std::sin(two_f);
      u(v, v) = -std::cos(two_f);
      break;
    }
    case ElementKind::QuantumBeamSplitter: {
      const int a = flat_index(e.i, Pol::H), b = flat_index(e.j, Pol::H);
      u(a, a) = inv_sqrt2;
      u(b, a) = inv_sqrt2;
      u(a, b) = inv_sqrt2;
      u(b, b) = -inv_sqrt2;
      break;
    }
  }
  return Unitary(std::move(u));
}

Unitary compose(const std::vector<Element>& elements, int d) {
  Matrix u = Matrix::Identity(2 * d, 2 * d);
  for (const Element& e : elements) u = element_unitary(e, d).entries() * u;
  return Unitary(std::move(u));
}

std::vector<Element> qbs_decomposition(int i, int j, int anc_i, int anc_j) {
  require(i != j && i != anc_i && i != anc_j && j != anc_i && j != anc_j && anc_i != anc_j,
          "qbs_decomposition: the four mode indices must be distinct");
  return {Element::pbs(i, anc_i), Element::pbs(j, anc_j), Element::bs(i, j),
          Element::pbs(i, anc_i), Element::pbs(j, anc_j)};
}

}  // namespace qdc
