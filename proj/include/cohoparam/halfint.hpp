#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace cohoparam {

/// Exact rational number with 64-bit numerator and positive denominator,
/// always kept in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);  // NOLINT(google-explicit-constructor)

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p" or "p/q".
  std::string to_string() const;
  /// Accepts "p" or "p/q" with optional sign.
  static Rational parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Element of (1/2)Z, stored as its double.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int value) : twice_(2 * static_cast<std::int64_t>(value)) {}  // NOLINT
  static constexpr HalfInt from_twice(std::int64_t twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  /// Throws InputError unless the denominator divides 2.
  static HalfInt from_rational(const Rational& r);
  static HalfInt parse(std::string_view text);

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  /// Requires is_integer().
  std::int64_t to_integer() const;
  Rational to_rational() const { return Rational(twice_, 2); }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr HalfInt operator*(std::int64_t k, HalfInt a) { return from_twice(k * a.twice_); }
  friend Rational operator*(HalfInt a, HalfInt b) { return Rational(a.twice_ * b.twice_, 4); }

  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr std::strong_ordering operator<=>(HalfInt a, HalfInt b) {
    return a.twice_ <=> b.twice_;
  }

  /// "p" for integers, "p/2" otherwise.
  std::string to_string() const;

 private:
  std::int64_t twice_ = 0;
};

std::ostream& operator<<(std::ostream& os, HalfInt h);

/// Lattice vector with half-integral entries in standard epsilon-coordinates.
class HalfIntVector {
 public:
  HalfIntVector() = default;
  explicit HalfIntVector(std::size_t n) : entries_(n) {}
  explicit HalfIntVector(std::vector<HalfInt> entries) : entries_(std::move(entries)) {}
  HalfIntVector(std::initializer_list<HalfInt> entries) : entries_(entries) {}

  static HalfIntVector from_twice(const std::vector<std::int64_t>& twice);
  static HalfIntVector zero(std::size_t n) { return HalfIntVector(n); }
  static HalfIntVector unit(std::size_t n, std::size_t i, int value = 1);
  /// Comma separated entries, each "p" or "p/2".
  static HalfIntVector parse(std::string_view text);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  HalfInt operator[](std::size_t i) const { return entries_[i]; }
  HalfInt& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<HalfInt>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool is_zero() const;
  bool is_integral() const;

  HalfIntVector operator-() const;
  HalfIntVector& operator+=(const HalfIntVector& o);
  HalfIntVector& operator-=(const HalfIntVector& o);
  friend HalfIntVector operator+(HalfIntVector a, const HalfIntVector& b) { return a += b; }
  friend HalfIntVector operator-(HalfIntVector a, const HalfIntVector& b) { return a -= b; }
  friend HalfIntVector operator*(std::int64_t k, const HalfIntVector& v);

  /// Entry-wise division by two; throws MathCheckError on an entry that is
  /// not an integer.
  HalfIntVector halved() const;

  /// Sub-vector [offset, offset + len).
  HalfIntVector slice(std::size_t offset, std::size_t len) const;

  friend bool operator==(const HalfIntVector&, const HalfIntVector&) = default;
  friend auto operator<=>(const HalfIntVector& a, const HalfIntVector& b) {
    return a.entries_ <=> b.entries_;
  }

  /// "(a, b, c)".
  std::string to_string() const;

 private:
  std::vector<HalfInt> entries_;
};

/// Standard dot product; the pairing between cocharacters and characters.
Rational dot(const HalfIntVector& a, const HalfIntVector& b);

std::ostream& operator<<(std::ostream& os, const HalfIntVector& v);

}  // namespace cohoparam
