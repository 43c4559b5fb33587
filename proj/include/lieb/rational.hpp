// Exact rational arithmetic: thin layer over boost::multiprecision::cpp_rational
// with "p/q" string round-tripping and an exact square-root probe.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace lieb {

using Int = boost::multiprecision::cpp_int;
// Expression templates off: plain value semantics keep generic code simple.
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Rat rat(long long n, long long d = 1) { return Rat(Int(n), Int(d)); }

inline std::string rat_str(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "p", "-p", "p/q"; throws on anything else.
inline Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational literal: '" + s + "'");
  }
}

// Exact square root if r is a perfect square of a rational, else nullopt.
inline std::optional<Rat> rat_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  Int n = numerator(r), d = denominator(r);
  Int sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rat(sn, sd);
}

inline double rat_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace lieb
