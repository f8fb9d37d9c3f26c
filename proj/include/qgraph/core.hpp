#pragma once

// Shared error types, guard constants and exact-integer aliases used
// throughout the library.

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qgraph {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchemaVersion = "1";

/// Exact arbitrary-precision integer.
using Int = boost::multiprecision::cpp_int;
/// Exact rational (used only by the interpolation probe).
using Rat = boost::multiprecision::cpp_rational;

/// Bad user input: malformed files, mixed fields, precondition violations.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured size guard was exceeded.
class guard_error : public std::runtime_error {
 public:
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// Size guards. Desk-scale experiments stay far below these; the guards stop
// accidental blowups, they are not tuning knobs hidden in call sites.
namespace guards {
inline constexpr std::uint64_t max_field_order = 1u << 20;
inline constexpr int max_graph_vertices = 64;        // adjacency bitmask width
inline constexpr int max_chromatic_vertices = 20;
inline constexpr int max_stable_partition_vertices = 12;
inline constexpr int max_lattice_dim = 8;
inline constexpr std::size_t max_lattice_hyperplanes = 1024;
inline constexpr std::uint64_t max_point_count_space = 1u << 26;  // q^(k*ell)
inline constexpr std::uint64_t max_subspace_space = 1u << 20;     // q^ell
inline constexpr std::uint64_t max_moore_weight = 128;  // q^(#vars - 1)
inline constexpr int max_saito_dim = 5;
}  // namespace guards

inline Int int_pow(const Int& base, unsigned exp) {
  Int r = 1, b = base;
  while (exp) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

/// Non-negative remainder of a mod m, m > 0.
inline Int pos_mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

inline bool divides(const Int& d, const Int& a) {
  if (d == 0) return a == 0;
  return a % d == 0;
}

/// Quotient a/d, throwing if the division is not exact.
inline Int div_exact(const Int& a, const Int& d, const char* context = "") {
  if (d == 0) throw input_error(std::string("exact division by zero: ") + context);
  Int q = a / d;
  if (q * d != a)
    throw input_error(std::string("inexact division: ") + context);
  return q;
}

inline std::string int_to_string(const Int& a) { return a.str(); }

}  // namespace qgraph
