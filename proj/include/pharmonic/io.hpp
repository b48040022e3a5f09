#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "pharmonic/harmonic_series.hpp"
#include "pharmonic/pharmonic_map.hpp"
#include "pharmonic/types.hpp"

namespace pharmonic::io {

class MapParseError : public std::runtime_error {
 public:
  MapParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Shortest decimal string that round-trips the exact double.
inline std::string format_shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string format_sig(double v, int digits) {
  char buf[64];
  const int len = std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return std::string(buf, static_cast<std::size_t>(len));
}

namespace detail {

inline bool parse_int(const std::string& tok, int& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  const auto res = std::from_chars(first, last, out);
  return res.ec == std::errc{} && res.ptr == last;
}

inline bool parse_double(const std::string& tok, double& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  const auto res = std::from_chars(first, last, out);
  return res.ec == std::errc{} && res.ptr == last;
}

inline std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

inline bool is_skippable(const std::string& line) {
  for (char ch : line) {
    if (ch == ' ' || ch == '\t' || ch == '\r') continue;
    return ch == '#';
  }
  return true;  // blank
}

}  // namespace detail

// Text format for layered maps.  Header `p=<int> N=<int>`, then one
// coefficient per row: `k n re im kind` with kind one of const, z, zbar.
// `#` starts a comment line; blank lines are skipped.  Each (k, n, kind)
// may appear at most once.
inline PHarmonicMap parse_map(std::istream& in) {
  std::string line;
  int lineno = 0;

  int p = 0;
  int N = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::is_skippable(line)) continue;
    const auto toks = detail::tokens_of(line);
    if (toks.size() != 2 || toks[0].rfind("p=", 0) != 0 ||
        toks[1].rfind("N=", 0) != 0)
      throw MapParseError(lineno, "expected header p=<int> N=<int>");
    if (!detail::parse_int(toks[0].substr(2), p))
      throw MapParseError(lineno, "expected header p=<int> N=<int>");
    if (!detail::parse_int(toks[1].substr(2), N))
      throw MapParseError(lineno, "expected header p=<int> N=<int>");
    if (p < 1) throw MapParseError(lineno, "p must be >= 1");
    if (N < 0) throw MapParseError(lineno, "N must be >= 0");
    have_header = true;
    break;
  }
  if (!have_header) throw MapParseError(lineno + 1, "missing header");

  std::vector<HarmonicSeries> layers(static_cast<std::size_t>(p));
  std::set<std::tuple<int, int, int>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::is_skippable(line)) continue;
    const auto toks = detail::tokens_of(line);
    if (toks.size() != 5)
      throw MapParseError(lineno, "expected 5 fields: k n re im kind");

    int k = 0, n = 0;
    double re = 0.0, im = 0.0;
    if (!detail::parse_int(toks[0], k))
      throw MapParseError(lineno, "k must be an integer");
    if (!detail::parse_int(toks[1], n))
      throw MapParseError(lineno, "n must be an integer");
    if (!detail::parse_double(toks[2], re))
      throw MapParseError(lineno, "re must be a number");
    if (!detail::parse_double(toks[3], im))
      throw MapParseError(lineno, "im must be a number");
    if (!finite_value(re) || !finite_value(im))
      throw MapParseError(lineno, "coefficient must be finite");
    if (k < 1 || k > p)
      throw MapParseError(lineno, "layer index k out of range [1, p]");

    const std::string& kind = toks[4];
    int kind_code = 0;
    if (kind == "const") {
      if (n != 0) throw MapParseError(lineno, "const coefficient requires n = 0");
    } else if (kind == "z") {
      kind_code = 1;
    } else if (kind == "zbar") {
      kind_code = 2;
    } else {
      throw MapParseError(lineno, "kind must be const, z, or zbar");
    }
    if (kind_code != 0 && (n < 1 || n > N))
      throw MapParseError(lineno, "coefficient index n out of range [1, N]");
    if (!seen.insert({k, n, kind_code}).second)
      throw MapParseError(lineno, "duplicate coefficient");

    HarmonicSeries& layer = layers[static_cast<std::size_t>(k - 1)];
    const Complex v{re, im};
    if (kind_code == 0)
      layer.set_c0(v);
    else if (kind_code == 1)
      layer.set_c(n, v);
    else
      layer.set_d(n, v);
  }

  return PHarmonicMap{std::move(layers)};
}

inline PHarmonicMap parse_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open map file: " + path);
  return parse_map(in);
}

// Emits only nonzero coefficients, layers ascending, const then z then
// zbar rows.  parse_map(write_map(m)) reproduces m exactly because the
// values are printed with shortest round-trip formatting.
inline void write_map(std::ostream& out, const PHarmonicMap& f) {
  out << "p=" << f.p() << " N=" << f.max_degree() << "\n";
  for (int k = 1; k <= f.p(); ++k) {
    const HarmonicSeries& layer = f.layer(k);
    const auto row = [&](int n, Complex v, const char* kind) {
      if (v == Complex{}) return;
      out << k << ' ' << n << ' ' << format_shortest(v.real()) << ' '
          << format_shortest(v.imag()) << ' ' << kind << "\n";
    };
    row(0, layer.c0(), "const");
    for (int n = 1; n <= layer.degree(); ++n) row(n, layer.c(n), "z");
    for (int n = 1; n <= layer.degree(); ++n) row(n, layer.d(n), "zbar");
  }
}

}  // namespace pharmonic::io
