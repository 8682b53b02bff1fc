#include "qdc/bench.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace qdc {

namespace {

// Internal signal converted to ParseError at the per-line loop.
struct LineFault {
  std::string reason;
};

[[noreturn]] void fail(std::string reason) { throw LineFault{std::move(reason)}; }

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_number(std::string_view tok) {
  double v = 0.0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v))
    fail("malformed number '" + std::string(tok) + "'");
  return v;
}

int parse_int(std::string_view tok) {
  int v = 0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{} || ptr != end) fail("malformed integer '" + std::string(tok) + "'");
  return v;
}

// Decimal literal or pi-expression: pi, <num>*pi, pi/<num>, <num>*pi/<num>,
// optionally negated. Evaluation order matches format_angle.
double parse_angle(std::string_view tok) {
  constexpr double pi = std::numbers::pi;
  std::string_view s = tok;
  double sign = 1.0;
  if (!s.empty() && s.front() == '-') {
    sign = -1.0;
    s.remove_prefix(1);
  }
  if (s.empty()) fail("malformed angle '" + std::string(tok) + "'");

  double v;
  if (s == "pi") {
    v = pi;
  } else if (s.starts_with("pi/")) {
    v = pi / parse_number(s.substr(3));
  } else if (auto star = s.find("*pi"); star != std::string_view::npos) {
    const double num = parse_number(s.substr(0, star));
    std::string_view rest = s.substr(star + 3);
    if (rest.empty()) {
      v = num * pi;
    } else if (rest.front() == '/') {
      v = (num * pi) / parse_number(rest.substr(1));
    } else {
      fail("malformed angle '" + std::string(tok) + "'");
    }
  } else {
    v = parse_number(s);
  }
  if (!std::isfinite(v)) fail("malformed angle '" + std::string(tok) + "'");
  return sign * v;
}

std::string_view field(std::string_view tok, std::string_view key) {
  if (!tok.starts_with(key) || tok.size() <= key.size() || tok[key.size()] != '=')
    fail("expected " + std::string(key) + "=<value>, got '" + std::string(tok) + "'");
  return tok.substr(key.size() + 1);
}

struct Parser {
  std::optional<int> d;
  std::optional<SourceSpec> source;
  std::vector<Element> elements;
  std::vector<DetectorSpec> detectors;
  std::optional<Pol> postselect;

  int mode_count(std::string_view keyword) const {
    if (!d) fail("'" + std::string(keyword) + "' before the modes directive");
    return *d;
  }

  int parse_mode(std::string_view tok, std::string_view keyword) const {
    const int m = parse_int(tok);
    const int dd = mode_count(keyword);
    if (m < 0 || m >= dd)
      fail("mode " + std::to_string(m) + " out of range for " + std::to_string(dd) + " modes");
    return m;
  }

  void want_args(const std::vector<std::string_view>& toks, size_t n) const {
    if (toks.size() != n + 1)
      fail("'" + std::string(toks[0]) + "' takes " + std::to_string(n) + " argument(s)");
  }

  void directive(const std::vector<std::string_view>& toks) {
    const std::string_view kw = toks[0];
    if (kw == "modes") {
      want_args(toks, 1);
      if (d) fail("duplicate modes directive");
      const int v = parse_int(toks[1]);
      if (v < 2) fail("mode count must be at least 2");
      d = v;
    } else if (kw == "source") {
      want_args(toks, 2);
      if (source) fail("duplicate source directive");
      SourceSpec s;
      s.alpha = parse_angle(field(toks[1], "alpha"));
      s.mode = parse_mode(field(toks[2], "mode"), kw);
      source = s;
    } else if (kw == "bs" || kw == "pbs" || kw == "qbs") {
      want_args(toks, 2);
      const int i = parse_mode(toks[1], kw);
      const int j = parse_mode(toks[2], kw);
      if (i == j) fail("'" + std::string(kw) + "' needs two distinct modes");
      elements.push_back(kw == "bs"    ? Element::bs(i, j)
                         : kw == "pbs" ? Element::pbs(i, j)
                                       : Element::qbs(i, j));
    } else if (kw == "phase") {
      want_args(toks, 2);
      const int i = parse_mode(toks[1], kw);
      elements.push_back(Element::phase(i, parse_angle(toks[2])));
    } else if (kw == "hwp") {
      want_args(toks, 2);
      const int i = parse_mode(toks[1], kw);
      elements.push_back(Element::hwp(i, parse_number(toks[2])));
    } else if (kw == "detect") {
      want_args(toks, 3);
      DetectorSpec det;
      det.name = std::string(toks[1]);
      for (const DetectorSpec& prev : detectors)
        if (prev.name == det.name) fail("duplicate detector name '" + det.name + "'");
      det.mode = parse_mode(field(toks[2], "mode"), kw);
      const std::string_view pol = field(toks[3], "pol");
      if (pol == "H")
        det.pol = PolFilter::H;
      else if (pol == "V")
        det.pol = PolFilter::V;
      else if (pol == "any")
        det.pol = PolFilter::Any;
      else
        fail("pol must be H, V or any, got '" + std::string(pol) + "'");
      detectors.push_back(std::move(det));
    } else if (kw == "postselect") {
      want_args(toks, 1);
      if (postselect) fail("duplicate postselect directive");
      const std::string_view pol = field(toks[1], "pol");
      if (pol == "H")
        postselect = Pol::H;
      else if (pol == "V")
        postselect = Pol::V;
      else
        fail("postselect pol must be H or V, got '" + std::string(pol) + "'");
    } else {
      fail("unknown keyword '" + std::string(kw) + "'");
    }
  }
};

}  // namespace

ParseResult parse_bench(std::string_view text) {
  Parser p;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t nl = text.find('\n', pos);
    std::string_view line =
        nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    if (pos == text.size() && line_no > 0) break;  // no trailing empty line after final \n
    ++line_no;
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (const size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const auto toks = split_ws(line);
    if (!toks.empty()) {
      try {
        p.directive(toks);
      } catch (const LineFault& f) {
        return {std::nullopt, ParseError{line_no, f.reason}};
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  const int last = std::max(line_no, 1);
  if (!p.d) return {std::nullopt, ParseError{last, "missing modes directive"}};
  if (!p.source) return {std::nullopt, ParseError{last, "missing source directive"}};
  BenchCircuit c;
  c.d = *p.d;
  c.source = *p.source;
  c.elements = std::move(p.elements);
  c.detectors = std::move(p.detectors);
  c.postselect = p.postselect;
  return {std::move(c), std::nullopt};
}

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

std::string format_angle(double radians) {
  constexpr double pi = std::numbers::pi;
  if (radians == 0.0) return "0";
  const double a = std::abs(radians);
  const std::string sign = radians < 0.0 ? "-" : "";

  std::string best;
  auto consider = [&](double candidate, std::string text) {
    if (candidate == a && (best.empty() || text.size() < best.size())) best = std::move(text);
  };
  consider(pi, "pi");
  for (int m = 2; m <= 64; ++m) consider(pi / m, "pi/" + std::to_string(m));
  for (int n = 2; n <= 64; ++n) consider(n * pi, std::to_string(n) + "*pi");
  for (int n = 2; n <= 64; ++n)
    for (int m = 2; m <= 64; ++m) {
      if (std::gcd(n, m) != 1) continue;
      consider((n * pi) / m, std::to_string(n) + "*pi/" + std::to_string(m));
    }
  if (!best.empty()) return sign + best;
  return format_number(radians);
}

std::string serialize(const BenchCircuit& circuit) {
  std::ostringstream out;
  out << "modes " << circuit.d << "\n";
  out << "source alpha=" << format_angle(circuit.source.alpha) << " mode=" << circuit.source.mode
      << "\n";
  for (const Element& e : circuit.elements) {
    switch (e.kind) {
      case ElementKind::BeamSplitter:
        out << "bs " << e.i << " " << e.j;
        break;
      case ElementKind::PolarizingBeamSplitter:
        out << "pbs " << e.i << " " << e.j;
        break;
      case ElementKind::PhaseShifter:
        out << "phase " << e.i << " " << format_angle(e.angle);
        break;
      case ElementKind::HalfWavePlate:
        out << "hwp " << e.i << " " << format_number(e.angle);
        break;
      case ElementKind::QuantumBeamSplitter:
        out << "qbs " << e.i << " " << e.j;
        break;
    }
    out << "\n";
  }
  for (const DetectorSpec& det : circuit.detectors) {
    out << "detect " << det.name << " mode=" << det.mode << " pol=";
    switch (det.pol) {
      case PolFilter::H:
        out << "H";
        break;
      case PolFilter::V:
        out << "V";
        break;
      case PolFilter::Any:
        out << "any";
        break;
    }
    out << "\n";
  }
  if (circuit.postselect)
    out << "postselect pol=" << pol_char(*circuit.postselect) << "\n";
  return out.str();
}

}  // namespace qdc
