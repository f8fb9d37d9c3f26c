#pragma once

// Sparse multivariate polynomials over a finite field. Terms map exponent
// vectors to nonzero coefficient codes; the canonical term order is graded
// lexicographic, so leading terms and serialization are deterministic.

#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qgraph/core.hpp"
#include "qgraph/finite_field.hpp"

namespace qgraph {

namespace detail {
struct GrLexLess {
  bool operator()(const std::vector<std::uint32_t>& a,
                  const std::vector<std::uint32_t>& b) const {
    std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da < db;
    return a < b;
  }
};
}  // namespace detail

class MPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using TermMap = std::map<Exponents, std::uint32_t, detail::GrLexLess>;

  MPoly(const Field& f, int nvars) : field_(&f), nvars_(nvars) {
    if (nvars < 0) throw input_error("MPoly: negative variable count");
  }

  static MPoly constant(const Field& f, int nvars, std::uint32_t code) {
    MPoly p(f, nvars);
    if (code != 0) p.terms_[Exponents(static_cast<std::size_t>(nvars), 0)] = code;
    return p;
  }
  /// x_i, 1-based variable index.
  static MPoly variable(const Field& f, int nvars, int i) {
    if (i < 1 || i > nvars) throw input_error("MPoly::variable: index out of range");
    MPoly p(f, nvars);
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    p.terms_[std::move(e)] = 1;
    return p;
  }

  const Field& field() const { return *field_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  std::uint64_t total_degree() const {
    if (terms_.empty()) return 0;
    const Exponents& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
  }

  void add_term(const Exponents& e, std::uint32_t code) {
    if (code == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, code);
    } else {
      std::uint32_t s = field_->add(it->second, code);
      if (s == 0) terms_.erase(it); else it->second = s;
    }
  }

  MPoly operator+(const MPoly& o) const {
    check_compatible(o);
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  MPoly operator-(const MPoly& o) const {
    check_compatible(o);
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, field_->neg(c));
    return r;
  }
  MPoly operator*(const MPoly& o) const {
    check_compatible(o);
    MPoly r(*field_, nvars_);
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_) {
        Exponents e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        r.add_term(e, field_->mul(ca, cb));
      }
    return r;
  }
  MPoly scaled(std::uint32_t code) const {
    MPoly r(*field_, nvars_);
    if (code == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_[e] = field_->mul(c, code);
    return r;
  }
  MPoly negated() const { return scaled(field_->neg(1)); }

  MPoly pow(unsigned e) const {
    MPoly r = constant(*field_, nvars_, 1), b = *this;
    while (e) {
      if (e & 1u) r = r * b;
      b = b * b;
      e >>= 1u;
    }
    return r;
  }

  /// Exact quotient; throws with the offending remainder if division leaves
  /// one. The quotient times the divisor is re-checked against *this.
  MPoly exact_divide(const MPoly& b) const {
    check_compatible(b);
    if (b.is_zero()) throw input_error("exact_divide: zero divisor");
    MPoly quot(*field_, nvars_);
    MPoly rem = *this;
    const auto& [eb, cb] = *b.terms_.rbegin();
    std::uint32_t cb_inv = field_->inv(cb);
    while (!rem.is_zero()) {
      const auto& [er, cr] = *rem.terms_.rbegin();
      Exponents e(er);
      bool ok = true;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < eb[i]) { ok = false; break; }
        e[i] -= eb[i];
      }
      if (!ok)
        throw input_error("exact_divide: nonzero remainder " + rem.to_string());
      std::uint32_t c = field_->mul(cr, cb_inv);
      MPoly mono(*field_, nvars_);
      mono.terms_[e] = c;
      quot = quot + mono;
      rem = rem - mono * b;
    }
    if (quot * b != *this) throw input_error("exact_divide: verification failed");
    return quot;
  }

  /// Substitute x_var (1-based) by the linear form sum lin[j] x_{j+1};
  /// lin[var-1] must be zero.
  MPoly substitute_linear(int var, const std::vector<std::uint32_t>& lin) const {
    if (var < 1 || var > nvars_) throw input_error("substitute_linear: bad variable");
    MPoly linear(*field_, nvars_);
    for (int j = 0; j < nvars_; ++j)
      if (lin[static_cast<std::size_t>(j)] != 0) {
        if (j + 1 == var) throw input_error("substitute_linear: self reference");
        Exponents e(static_cast<std::size_t>(nvars_), 0);
        e[static_cast<std::size_t>(j)] = 1;
        linear.add_term(e, lin[static_cast<std::size_t>(j)]);
      }
    std::vector<MPoly> powers{constant(*field_, nvars_, 1)};
    MPoly out(*field_, nvars_);
    for (const auto& [e, c] : terms_) {
      std::uint32_t ev = e[static_cast<std::size_t>(var - 1)];
      while (powers.size() <= ev) powers.push_back(powers.back() * linear);
      Exponents rest(e);
      rest[static_cast<std::size_t>(var - 1)] = 0;
      MPoly mono(*field_, nvars_);
      mono.terms_[rest] = c;
      out = out + mono * powers[ev];
    }
    return out;
  }

  bool operator==(const MPoly& o) const {
    return field_ == o.field_ && nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      const auto& [e, c] = *it;
      bool all_zero = true;
      for (auto x : e) all_zero = all_zero && x == 0;
      if (c != 1 || all_zero) os << c;
      bool printed = (c != 1 || all_zero);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (printed) os << "*";
        os << "x" << (i + 1);
        if (e[i] > 1) os << "^" << e[i];
        printed = true;
      }
    }
    return os.str();
  }

 private:
  void check_compatible(const MPoly& o) const {
    if (field_ != o.field_ || nvars_ != o.nvars_)
      throw input_error("MPoly: mixed fields or variable counts");
  }

  const Field* field_;
  int nvars_;
  TermMap terms_;
};

}  // namespace qgraph
