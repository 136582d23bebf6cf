/*
Copyright (C) 2026 The tdlab Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tdlab {

/// Which field a matrix lives over: the rationals or GF(p).
struct FieldSpec {
  enum class Kind { Rational, Prime };

  Kind kind = Kind::Rational;
  std::uint64_t p = 0;  // meaningful only for Kind::Prime

  static FieldSpec rational() { return {}; }
  static FieldSpec prime(std::uint64_t p);

  /// Accepts "rational", "Q", or "prime:<p>".
  static FieldSpec parse(std::string_view text);
  std::string to_string() const {
    return kind == Kind::Rational ? "rational" : "prime:" + std::to_string(p);
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t k = 3; k <= n / k; k += 2) {
    if (n % k == 0) return false;
  }
  return true;
}

// Residues are multiplied in 64 bits, so the modulus must stay below 2^32.
inline constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 32) - 1;

inline FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("p not prime: " + std::to_string(p));
  }
  if (p > kMaxPrime) {
    throw std::invalid_argument("p too large (must be < 2^32): " + std::to_string(p));
  }
  return FieldSpec{Kind::Prime, p};
}

inline FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "rational" || text == "Q" || text == "q") return rational();
  constexpr std::string_view kPrefix = "prime:";
  if (text.substr(0, kPrefix.size()) == kPrefix) {
    auto digits = text.substr(kPrefix.size());
    if (digits.empty() || digits.size() > 19) {
      throw std::invalid_argument("bad field: " + std::string(text));
    }
    std::uint64_t p = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad field: " + std::string(text));
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return prime(p);
  }
  throw std::invalid_argument("bad field: " + std::string(text));
}

/// Exact rational number, always kept in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  explicit Rational(long v) : v_(v) {}
  explicit Rational(const mpz_class& v) : v_(v) {}
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  /// Parses "int" or "int/int"; nullopt on malformed text or zero denominator.
  static std::optional<Rational> parse(std::string_view text) {
    auto slash = text.find('/');
    auto num_text = text.substr(0, slash);
    auto valid_int = [](std::string_view s) {
      if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
      if (s.empty()) return false;
      for (char c : s) {
        if (c < '0' || c > '9') return false;
      }
      return true;
    };
    auto to_mpz = [](std::string_view s) {
      if (!s.empty() && s[0] == '+') s.remove_prefix(1);
      return mpz_class(std::string(s), 10);
    };
    if (!valid_int(num_text)) return std::nullopt;
    if (slash == std::string_view::npos) return Rational(to_mpz(num_text));
    auto den_text = text.substr(slash + 1);
    if (!valid_int(den_text)) return std::nullopt;
    mpz_class den = to_mpz(den_text);
    if (den == 0) return std::nullopt;
    return Rational(to_mpz(num_text), den);
  }

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  std::string to_string() const { return v_.get_str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

/// Element of GF(p). Carries its modulus so operators stay self-contained.
class Residue {
 public:
  Residue() = default;
  Residue(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Residue inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    // extended Euclid on signed 64-bit values; p < 2^32 keeps everything in range
    std::int64_t a = static_cast<std::int64_t>(v_), m = static_cast<std::int64_t>(p_);
    std::int64_t x0 = 1, x1 = 0;
    while (m != 0) {
      std::int64_t q = a / m;
      std::int64_t t = a - q * m;
      a = m;
      m = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    std::int64_t r = x0 % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return Residue(static_cast<std::uint64_t>(r), p_);
  }

  std::string to_string() const { return std::to_string(v_); }

  Residue& operator+=(const Residue& o) {
    check(o);
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
  }
  Residue& operator-=(const Residue& o) {
    check(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  Residue& operator*=(const Residue& o) {
    check(o);
    v_ = (v_ * o.v_) % p_;
    return *this;
  }
  Residue& operator/=(const Residue& o) { return *this *= o.inverse(); }

  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  friend Residue operator/(Residue a, const Residue& b) { return a /= b; }
  friend Residue operator-(const Residue& a) { return Residue(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }

  friend bool operator==(const Residue& a, const Residue& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend std::strong_ordering operator<=>(const Residue& a, const Residue& b) {
    if (auto c = a.p_ <=> b.p_; c != 0) return c;
    return a.v_ <=> b.v_;
  }

 private:
  void check(const Residue& o) const {
    if (p_ != o.p_) throw std::invalid_argument("residues from different fields");
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 1;
};

/// The field of rationals. Field types are cheap value objects that build scalars.
struct RationalField {
  using scalar = Rational;

  Rational zero() const { return Rational(); }
  Rational one() const { return Rational(1L); }
  Rational from_int(long v) const { return Rational(v); }
  Rational from_rational(const Rational& r) const { return r; }
  std::uint64_t characteristic() const { return 0; }
  FieldSpec spec() const { return FieldSpec::rational(); }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// GF(p) for a prime p < 2^32.
class PrimeField {
 public:
  using scalar = Residue;

  explicit PrimeField(std::uint64_t p) : p_(FieldSpec::prime(p).p) {}

  Residue zero() const { return Residue(0, p_); }
  Residue one() const { return Residue(1, p_); }
  Residue from_int(long v) const {
    long m = static_cast<long>(p_);
    long r = v % m;
    if (r < 0) r += m;
    return Residue(static_cast<std::uint64_t>(r), p_);
  }
  Residue from_mpz(const mpz_class& v) const {
    mpz_class r = v % mpz_class(static_cast<unsigned long>(p_));
    if (r < 0) r += static_cast<unsigned long>(p_);
    return Residue(r.get_ui(), p_);
  }
  /// Maps num/den into GF(p); throws when p divides the denominator.
  Residue from_rational(const Rational& r) const {
    Residue den = from_mpz(r.denominator());
    if (den.is_zero()) {
      throw std::invalid_argument("denominator " + r.denominator().get_str() +
                              " vanishes mod " + std::to_string(p_));
    }
    return from_mpz(r.numerator()) / den;
  }
  std::uint64_t characteristic() const { return p_; }
  std::uint64_t p() const { return p_; }
  FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::Prime, p_}; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

template <class F>
concept ExactField = requires(const F& f, const typename F::scalar& a) {
  { f.zero() } -> std::same_as<typename F::scalar>;
  { f.one() } -> std::same_as<typename F::scalar>;
  { f.from_int(1L) } -> std::same_as<typename F::scalar>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
  { a + a } -> std::same_as<typename F::scalar>;
  { a * a } -> std::same_as<typename F::scalar>;
  { a / a } -> std::same_as<typename F::scalar>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
  { a <=> a };
};

/// Calls fn with the concrete field object described by spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::Rational) return fn(RationalField{});
  return fn(PrimeField(spec.p));
}

}  // namespace tdlab
