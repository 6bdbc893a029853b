#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "cohoparam/halfint.hpp"

namespace cohoparam {

/// Signed permutation of {0..n-1}: the basis vector e_i is sent to
/// sign(i) * e_{perm(i)}. Weyl groups of classical type are realized inside
/// the group of these.
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(std::size_t n);
  /// img[i] = +-(j+1) encodes e_i -> +-e_j.
  static WeylElement from_images(std::vector<int> img);
  static WeylElement from_perm(const std::vector<int>& perm);
  static WeylElement transposition(std::size_t n, std::size_t i, std::size_t j);
  static WeylElement sign_flip(std::size_t n, std::size_t i);
  static WeylElement minus_identity(std::size_t n);

  std::size_t rank() const { return img_.size(); }
  int perm(std::size_t i) const { return (img_[i] > 0 ? img_[i] : -img_[i]) - 1; }
  int sign(std::size_t i) const { return img_[i] > 0 ? 1 : -1; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  bool is_unsigned() const;
  int sign_product() const;

  /// (a * b)(v) = a(b(v)).
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  WeylElement inverse() const;

  HalfIntVector act(const HalfIntVector& v) const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  /// Sign vector first (plus before minus), then the permutation.
  friend std::strong_ordering operator<=>(const WeylElement& a, const WeylElement& b);

  /// "[2,-1,3]": one-based images.
  std::string to_string() const;

 private:
  std::vector<int> img_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept;
};

}  // namespace cohoparam
