#pragma once

// Exact arithmetic in GF(p^m).
//
// Elements are encoded as integers in [0, q): the base-p digits of a code are
// the coefficients of the residue polynomial, lowest degree first. Code 0 is
// the additive identity and code 1 the multiplicative identity. The reducing
// modulus is the lexicographically smallest monic irreducible of degree m
// over GF(p), coefficients compared lowest degree first, so a given (p, m)
// always produces the same field, element for element.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qgraph/core.hpp"

namespace qgraph {

class Field;

/// A single element of a specific Field. Mixing owners is rejected.
class FieldElem {
 public:
  FieldElem() : value_(0), owner_(nullptr) {}
  FieldElem(std::uint32_t value, const Field* owner) : value_(value), owner_(owner) {}

  std::uint32_t value() const { return value_; }
  const Field* owner() const { return owner_; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  bool operator==(const FieldElem& o) const { return owner_ == o.owner_ && value_ == o.value_; }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

 private:
  std::uint32_t value_;
  const Field* owner_;
};

class Field {
 public:
  /// Canonical GF(p^m) from a process-wide registry. Throws input_error for
  /// non-prime p and guard_error when p^m exceeds the order guard.
  static const Field& get(std::uint32_t p, std::uint32_t m);

  /// Canonical field of a prime-power order ("q = 4" means GF(2^2)).
  static const Field& from_order(std::uint64_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }
  /// Monic irreducible modulus, coefficients lowest degree first (size m+1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  // Arithmetic on element codes.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (tabled_) return add_tab_[a * q_ + b];
    return add_slow(a, b);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t neg(std::uint32_t a) const {
    if (tabled_) return neg_tab_[a];
    return neg_slow(a);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (tabled_) return mul_tab_[a * q_ + b];
    return mul_slow(a, b);
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw input_error("field inverse of zero");
    if (tabled_) return inv_tab_[a];
    return pow(a, q_ - 2);
  }
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const {
    if (b == 0) throw input_error("field division by zero");
    return mul(a, inv(b));
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1, b = a;
    while (e) {
      if (e & 1u) r = mul(r, b);
      b = mul(b, b);
      e >>= 1u;
    }
    return r;
  }

  FieldElem elem(std::uint32_t code) const {
    if (code >= q_) throw input_error("element code out of range");
    return FieldElem(code, this);
  }
  FieldElem zero() const { return FieldElem(0, this); }
  FieldElem one() const { return FieldElem(1, this); }

  /// All q elements in increasing code order (0 first, then 1).
  std::vector<FieldElem> enumerate() const {
    std::vector<FieldElem> r;
    r.reserve(q_);
    for (std::uint32_t c = 0; c < q_; ++c) r.emplace_back(c, this);
    return r;
  }

  std::string name() const {
    return "GF(" + std::to_string(p_) + (m_ > 1 ? "^" + std::to_string(m_) : "") + ")";
  }

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field(std::uint32_t p, std::uint32_t m);

  using Digits = std::vector<std::uint32_t>;  // coefficients mod p, low first

  Digits decode(std::uint32_t code) const {
    Digits d(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
      d[i] = code % p_;
      code /= p_;
    }
    return d;
  }
  std::uint32_t encode(const Digits& d) const {
    std::uint32_t code = 0;
    for (std::uint32_t i = m_; i-- > 0;) code = code * p_ + (i < d.size() ? d[i] : 0);
    return code;
  }

  std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const {
    Digits x = decode(a), y = decode(b);
    for (std::uint32_t i = 0; i < m_; ++i) x[i] = (x[i] + y[i]) % p_;
    return encode(x);
  }
  std::uint32_t neg_slow(std::uint32_t a) const {
    Digits x = decode(a);
    for (auto& v : x) v = (p_ - v) % p_;
    return encode(x);
  }
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
    Digits x = decode(a), y = decode(b);
    Digits prod(2 * m_, 0);
    for (std::uint32_t i = 0; i < m_; ++i)
      for (std::uint32_t j = 0; j < m_; ++j)
        prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    // reduce by the monic modulus
    for (std::uint32_t d = 2 * m_; d-- > m_;) {
      std::uint32_t c = prod[d];
      if (c == 0) continue;
      prod[d] = 0;
      for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint32_t sub = (c * modulus_[i]) % p_;
        prod[d - m_ + i] = (prod[d - m_ + i] + p_ - sub) % p_;
      }
    }
    prod.resize(m_);
    return encode(prod);
  }

  static bool is_prime(std::uint64_t n);
  static std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, std::uint32_t m);

  std::uint32_t p_, m_, q_;
  std::vector<std::uint32_t> modulus_;
  bool tabled_ = false;
  std::vector<std::uint32_t> add_tab_, mul_tab_, neg_tab_, inv_tab_;
};

inline FieldElem FieldElem::operator+(const FieldElem& o) const {
  if (owner_ != o.owner_ || owner_ == nullptr) throw input_error("mixed-field operands");
  return FieldElem(owner_->add(value_, o.value_), owner_);
}
inline FieldElem FieldElem::operator-(const FieldElem& o) const {
  if (owner_ != o.owner_ || owner_ == nullptr) throw input_error("mixed-field operands");
  return FieldElem(owner_->sub(value_, o.value_), owner_);
}
inline FieldElem FieldElem::operator*(const FieldElem& o) const {
  if (owner_ != o.owner_ || owner_ == nullptr) throw input_error("mixed-field operands");
  return FieldElem(owner_->mul(value_, o.value_), owner_);
}
inline FieldElem FieldElem::operator/(const FieldElem& o) const {
  if (owner_ != o.owner_ || owner_ == nullptr) throw input_error("mixed-field operands");
  return FieldElem(owner_->div(value_, o.value_), owner_);
}

inline bool Field::is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomial helpers over GF(p) for the modulus search; vectors are
// coefficient lists, lowest degree first, with no trailing zeros.
namespace detail {

inline std::vector<std::uint32_t> gfp_mod(std::vector<std::uint32_t> a,
                                          const std::vector<std::uint32_t>& b,
                                          std::uint32_t p) {
  // b monic
  while (a.size() >= b.size() && !a.empty()) {
    std::uint32_t c = a.back();
    if (c != 0) {
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[shift + i] = (a[shift + i] + p - (c * b[i]) % p) % p;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.size() < b.size()) break;
  }
  return a;
}

inline bool gfp_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  // trial division by all monic polynomials of degree 1..m/2
  for (std::size_t d = 1; 2 * d <= m; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> g(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (gfp_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

inline std::vector<std::uint32_t> Field::canonical_modulus(std::uint32_t p, std::uint32_t m) {
  if (m == 1) return {0, 1};  // x
  // Enumerate constant-to-leading coefficient tuples in lexicographic order
  // (low-degree coefficient most significant, as the encoding compares them).
  std::vector<std::uint32_t> c(m, 0);
  while (true) {
    std::vector<std::uint32_t> f(c);
    f.push_back(1);
    if (detail::gfp_irreducible(f, p)) return f;
    std::uint32_t i = m;
    while (i-- > 0) {
      if (++c[i] < p) break;
      c[i] = 0;
      if (i == 0) throw input_error("no irreducible modulus found");  // unreachable
    }
  }
}

inline Field::Field(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
  if (!is_prime(p)) throw input_error("field characteristic must be prime: " + std::to_string(p));
  if (m == 0) throw input_error("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > guards::max_field_order)
      throw guard_error("field order exceeds guard 2^20");
  }
  q_ = static_cast<std::uint32_t>(q);
  modulus_ = canonical_modulus(p, m);
  if (q_ <= 1024) {
    tabled_ = true;
    add_tab_.resize(static_cast<std::size_t>(q_) * q_);
    mul_tab_.resize(static_cast<std::size_t>(q_) * q_);
    neg_tab_.resize(q_);
    inv_tab_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
      neg_tab_[a] = neg_slow(a);
      for (std::uint32_t b = 0; b < q_; ++b) {
        add_tab_[a * q_ + b] = add_slow(a, b);
        std::uint32_t pr = mul_slow(a, b);
        mul_tab_[a * q_ + b] = pr;
        if (pr == 1) inv_tab_[a] = b;
      }
    }
  }
}

inline const Field& Field::get(std::uint32_t p, std::uint32_t m) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<Field>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, m);
  auto it = registry.find(key);
  if (it == registry.end())
    it = registry.emplace(key, std::unique_ptr<Field>(new Field(p, m))).first;
  return *it->second;
}

inline const Field& Field::from_order(std::uint64_t q) {
  if (q < 2) throw input_error("field order must be a prime power >= 2");
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (p * p > q) p = q;  // q prime
  std::uint32_t m = 0;
  std::uint64_t r = q;
  while (r > 1) {
    if (r % p != 0) throw input_error("field order is not a prime power: " + std::to_string(q));
    r /= p;
    ++m;
  }
  return get(static_cast<std::uint32_t>(p), m);
}

}  // namespace qgraph
