#pragma once

// Univariate polynomials in t with exact integer coefficients.
// Coefficient vector indexed by degree, no trailing zeros stored.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qgraph/core.hpp"

namespace qgraph {

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(Int v) { return IntPoly({std::move(v)}); }
  static IntPoly t() { return IntPoly({Int(0), Int(1)}); }
  static IntPoly monomial(int deg, Int coeff) {
    std::vector<Int> c(static_cast<std::size_t>(deg) + 1);
    c[static_cast<std::size_t>(deg)] = std::move(coeff);
    return IntPoly(std::move(c));
  }
  /// t(t-1)(t-2)...(t-i+1); the empty product for i = 0.
  static IntPoly falling_factorial(int i) {
    IntPoly r = constant(1);
    for (int j = 0; j < i; ++j) r = r * IntPoly({Int(-j), Int(1)});
    return r;
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Int& coeff(int d) const {
    static const Int kZero = 0;
    if (d < 0 || d >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(d)];
  }
  const Int& leading() const { return c_.back(); }
  const std::vector<Int>& coeffs() const { return c_; }

  IntPoly operator-() const {
    std::vector<Int> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return IntPoly(std::move(r));
  }
  IntPoly operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i < c_.size()) r[i] += c_[i];
      if (i < o.c_.size()) r[i] += o.c_[i];
    }
    return IntPoly(std::move(r));
  }
  IntPoly operator-(const IntPoly& o) const { return *this + (-o); }
  IntPoly operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<Int> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
  }
  IntPoly scaled(const Int& s) const {
    std::vector<Int> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return IntPoly(std::move(r));
  }
  IntPoly pow(unsigned e) const {
    IntPoly r = constant(1), b = *this;
    while (e) {
      if (e & 1u) r = r * b;
      b = b * b;
      e >>= 1u;
    }
    return r;
  }

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

  Int eval(const Int& x) const {
    Int r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  /// Division with remainder by a monic divisor; exact integer arithmetic.
  std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& d) const {
    if (d.is_zero() || d.leading() != 1)
      throw input_error("divmod_monic: divisor must be monic");
    std::vector<Int> rem = c_;
    std::vector<Int> quot;
    int dd = d.degree();
    while (static_cast<int>(rem.size()) - 1 >= dd) {
      int rd = static_cast<int>(rem.size()) - 1;
      Int f = rem.back();
      int shift = rd - dd;
      if (static_cast<int>(quot.size()) < shift + 1) quot.resize(shift + 1);
      quot[static_cast<std::size_t>(shift)] = f;
      for (int i = 0; i <= dd; ++i)
        rem[static_cast<std::size_t>(i + shift)] -= f * d.coeff(i);
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
      if (rem.empty()) break;
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
  }

  /// True if the polynomial splits into monic integer-rooted linear factors.
  /// Deflates candidate integer roots (divisors of the constant term).
  bool factors_into_integer_linear() const {
    if (is_zero()) return false;
    IntPoly p = *this;
    if (p.leading() != 1) return false;  // callers use monic polynomials
    while (p.degree() > 0) {
      // strip roots at 0 first
      if (p.coeff(0) == 0) {
        std::vector<Int> c(p.c_.begin() + 1, p.c_.end());
        p = IntPoly(std::move(c));
        continue;
      }
      Int c0 = abs(p.coeff(0));
      bool found = false;
      for (Int d = 1; d * d <= c0 && !found; ++d) {
        if (c0 % d != 0) continue;
        const Int cands[4] = {d, Int(-d), Int(c0 / d), Int(-(c0 / d))};
        for (const Int& cand : cands) {
          if (p.eval(cand) == 0) {
            auto [q, r] = p.divmod_monic(IntPoly({Int(-cand), Int(1)}));
            p = q;
            found = true;
            break;
          }
        }
      }
      if (!found) return false;
    }
    return true;
  }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
      const Int& a = coeff(d);
      if (a == 0) continue;
      if (first) {
        if (a < 0) os << "-";
      } else {
        os << (a < 0 ? " - " : " + ");
      }
      Int m = abs(a);
      if (d == 0 || m != 1) os << m.str();
      if (d > 0) {
        os << var;
        if (d > 1) os << "^" << d;
      }
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

}  // namespace qgraph
