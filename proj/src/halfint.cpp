#include "cohoparam/halfint.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include "cohoparam/errors.hpp"

namespace cohoparam {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw InputError("malformed number '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

Rational& Rational::operator+=(const Rational& o) {
  std::int64_t l = std::lcm(den_, o.den_);
  *this = Rational(num_ * (l / den_) + o.num_ * (l / o.den_), l);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  std::int64_t g1 = std::gcd(num_, o.den_);
  std::int64_t g2 = std::gcd(o.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  *this = Rational((num_ / g1) * (o.num_ / g2), (den_ / g2) * (o.den_ / g1));
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw MathCheckError("division by zero");
  return *this *= Rational(o.den_, o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Denominators are positive, so cross multiplication preserves order.
  __int128 l = static_cast<__int128>(a.num_) * b.den_;
  __int128 r = static_cast<__int128>(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash), text), den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

HalfInt HalfInt::from_rational(const Rational& r) {
  if (2 % r.den() != 0) throw InputError("'" + r.to_string() + "' is not a half-integer");
  return from_twice(r.num() * (2 / r.den()));
}

HalfInt HalfInt::parse(std::string_view text) { return from_rational(Rational::parse(text)); }

std::int64_t HalfInt::to_integer() const {
  if (!is_integer()) throw MathCheckError(to_string() + " is not an integer");
  return twice_ / 2;
}

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.to_string(); }

HalfIntVector HalfIntVector::from_twice(const std::vector<std::int64_t>& twice) {
  HalfIntVector v(twice.size());
  for (std::size_t i = 0; i < twice.size(); ++i) v.entries_[i] = HalfInt::from_twice(twice[i]);
  return v;
}

HalfIntVector HalfIntVector::unit(std::size_t n, std::size_t i, int value) {
  HalfIntVector v(n);
  v.entries_.at(i) = HalfInt(value);
  return v;
}

HalfIntVector HalfIntVector::parse(std::string_view text) {
  HalfIntVector v;
  text = trim(text);
  if (text.empty()) return v;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                    : comma - start);
    v.entries_.push_back(HalfInt::parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return v;
}

bool HalfIntVector::is_zero() const {
  for (auto x : entries_)
    if (x.twice() != 0) return false;
  return true;
}

bool HalfIntVector::is_integral() const {
  for (auto x : entries_)
    if (!x.is_integer()) return false;
  return true;
}

HalfIntVector HalfIntVector::operator-() const {
  HalfIntVector r(*this);
  for (auto& x : r.entries_) x = -x;
  return r;
}

HalfIntVector& HalfIntVector::operator+=(const HalfIntVector& o) {
  if (o.size() != size()) throw MathCheckError("vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

HalfIntVector& HalfIntVector::operator-=(const HalfIntVector& o) {
  if (o.size() != size()) throw MathCheckError("vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

HalfIntVector operator*(std::int64_t k, const HalfIntVector& v) {
  HalfIntVector r(v);
  for (auto& x : r.entries_) x = k * x;
  return r;
}

HalfIntVector HalfIntVector::halved() const {
  HalfIntVector r(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (!entries_[i].is_integer())
      throw MathCheckError("cannot halve " + to_string() + " within (1/2)Z");
    r.entries_[i] = HalfInt::from_twice(entries_[i].twice() / 2);
  }
  return r;
}

HalfIntVector HalfIntVector::slice(std::size_t offset, std::size_t len) const {
  if (offset + len > size()) throw MathCheckError("slice out of range");
  return HalfIntVector(std::vector<HalfInt>(entries_.begin() + static_cast<std::ptrdiff_t>(offset),
                                            entries_.begin() + static_cast<std::ptrdiff_t>(offset + len)));
}

std::string HalfIntVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) s += ", ";
    s += entries_[i].to_string();
  }
  return s + ")";
}

Rational dot(const HalfIntVector& a, const HalfIntVector& b) {
  if (a.size() != b.size()) throw MathCheckError("pairing of vectors of different length");
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].twice() * b[i].twice();
  return Rational(acc, 4);
}

std::ostream& operator<<(std::ostream& os, const HalfIntVector& v) { return os << v.to_string(); }

}  // namespace cohoparam
