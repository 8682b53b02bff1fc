#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdc/elements.hpp"
#include "qdc/types.hpp"

namespace qdc {

/// Polarization filter of a detector: a concrete polarization or `any`,
/// which marginalizes over polarization.
enum class PolFilter { H, V, Any };

constexpr PolFilter to_filter(Pol p) { return p == Pol::H ? PolFilter::H : PolFilter::V; }

/// A named detection event: photon found in `mode` with a polarization
/// passing `pol`.
struct DetectorSpec {
  std::string name;
  int mode = 0;
  PolFilter pol = PolFilter::Any;

  bool operator==(const DetectorSpec&) const = default;
};

struct SourceSpec {
  double alpha = 0.0;  // radians; amplitudes sin(alpha) on H, cos(alpha) on V
  int mode = 0;

  bool operator==(const SourceSpec&) const = default;
};

/// A full bench description: mode count, the single photon source, an
/// ordered element list, named detectors, and an optional polarization
/// postselection applied before the detectors are read.
struct BenchCircuit {
  int d = 2;
  SourceSpec source;
  std::vector<Element> elements;
  std::vector<DetectorSpec> detectors;
  std::optional<Pol> postselect;

  bool operator==(const BenchCircuit&) const = default;
};

struct ParseError {
  int line = 0;  // 1-based; for directives missing at end of input this
                 // points at the last input line
  std::string reason;
};

struct ParseResult {
  std::optional<BenchCircuit> circuit;
  std::optional<ParseError> error;

  bool ok() const { return circuit.has_value(); }
};

/// Parse the line-oriented bench format. One directive per line, `#` opens
/// a comment, blank lines are ignored, LF or CRLF both accepted:
///
///   modes <int>
///   source alpha=<angle> mode=<int>
///   bs <i> <j>
///   pbs <i> <j>
///   phase <i> <angle>
///   hwp <i> <degrees>
///   qbs <i> <j>
///   detect <name> mode=<int> pol=<H|V|any>
///   postselect pol=<H|V>
///
/// <angle> is a decimal literal or `pi`, `<num>*pi`, `pi/<num>`,
/// `<num>*pi/<num>`, optionally negated; <degrees> is a decimal literal.
/// Directives may appear in any order except `modes`, which must precede
/// every mode-referencing line. Exactly one `source` is required, detector
/// names must be unique, and all mode indices must be < the declared count.
ParseResult parse_bench(std::string_view text);

/// Canonical text form: `modes` first, then `source`, elements in order,
/// detectors, optional `postselect`; LF line endings. Angles print as the
/// shortest exact pi-expression when one reproduces the same double, else
/// as a 17-significant-digit decimal. parse_bench(serialize(c)) yields a
/// circuit structurally equal to c.
std::string serialize(const BenchCircuit& circuit);

/// Shortest exact pi-expression for the value, else 17-significant-digit
/// decimal.
std::string format_angle(double radians);

/// Locale-independent decimal with 17 significant digits (round-trip exact).
std::string format_number(double value);

}  // namespace qdc
