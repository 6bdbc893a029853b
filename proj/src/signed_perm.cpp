#include "cohoparam/signed_perm.hpp"

#include "cohoparam/errors.hpp"

namespace cohoparam {

WeylElement WeylElement::identity(std::size_t n) {
  WeylElement w;
  w.img_.resize(n);
  for (std::size_t i = 0; i < n; ++i) w.img_[i] = static_cast<int>(i) + 1;
  return w;
}

WeylElement WeylElement::from_images(std::vector<int> img) {
  std::vector<bool> seen(img.size(), false);
  for (int x : img) {
    int j = (x > 0 ? x : -x) - 1;
    if (x == 0 || j >= static_cast<int>(img.size()) || seen[static_cast<std::size_t>(j)])
      throw InputError("not a signed permutation");
    seen[static_cast<std::size_t>(j)] = true;
  }
  WeylElement w;
  w.img_ = std::move(img);
  return w;
}

WeylElement WeylElement::from_perm(const std::vector<int>& perm) {
  std::vector<int> img(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) img[i] = perm[i] + 1;
  return from_images(std::move(img));
}

WeylElement WeylElement::transposition(std::size_t n, std::size_t i, std::size_t j) {
  WeylElement w = identity(n);
  std::swap(w.img_[i], w.img_[j]);
  return w;
}

WeylElement WeylElement::sign_flip(std::size_t n, std::size_t i) {
  WeylElement w = identity(n);
  w.img_[i] = -w.img_[i];
  return w;
}

WeylElement WeylElement::minus_identity(std::size_t n) {
  WeylElement w = identity(n);
  for (auto& x : w.img_) x = -x;
  return w;
}

bool WeylElement::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

bool WeylElement::is_unsigned() const {
  for (int x : img_)
    if (x < 0) return false;
  return true;
}

int WeylElement::sign_product() const {
  int s = 1;
  for (int x : img_)
    if (x < 0) s = -s;
  return s;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.rank() != b.rank()) throw MathCheckError("composing signed permutations of different rank");
  WeylElement r;
  r.img_.resize(b.rank());
  for (std::size_t i = 0; i < b.rank(); ++i) {
    int j = b.perm(i);
    r.img_[i] = b.sign(i) * a.img_[static_cast<std::size_t>(j)];
  }
  return r;
}

WeylElement WeylElement::inverse() const {
  WeylElement r;
  r.img_.resize(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    r.img_[static_cast<std::size_t>(perm(i))] = sign(i) * (static_cast<int>(i) + 1);
  return r;
}

HalfIntVector WeylElement::act(const HalfIntVector& v) const {
  if (v.size() != rank()) throw MathCheckError("Weyl action on vector of wrong length");
  HalfIntVector r(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    HalfInt x = v[i];
    r[static_cast<std::size_t>(perm(i))] = sign(i) > 0 ? x : -x;
  }
  return r;
}

std::strong_ordering operator<=>(const WeylElement& a, const WeylElement& b) {
  if (auto c = a.rank() <=> b.rank(); c != 0) return c;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    // Plus sorts before minus.
    int sa = a.sign(i) > 0 ? 0 : 1;
    int sb = b.sign(i) > 0 ? 0 : 1;
    if (sa != sb) return sa <=> sb;
  }
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (a.perm(i) != b.perm(i)) return a.perm(i) <=> b.perm(i);
  return std::strong_ordering::equal;
}

std::string WeylElement::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(img_[i]);
  }
  return s + "]";
}

std::size_t WeylElementHash::operator()(const WeylElement& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int x : w.images()) {
    h ^= static_cast<std::size_t>(x + 1024);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace cohoparam
