#include "cohoparam/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

#include "cohoparam/errors.hpp"

namespace cohoparam {

std::size_t max_weyl_elements() {
  if (const char* env = std::getenv("COHOPARAM_MAX_WEYL")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

namespace {

std::vector<WeylElement> closure(std::size_t rank, const std::vector<WeylElement>& gens) {
  std::size_t cap = max_weyl_elements();
  std::unordered_set<WeylElement, WeylElementHash> seen;
  std::vector<WeylElement> queue{WeylElement::identity(rank)};
  seen.insert(queue.front());
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& g : gens) {
      WeylElement x = g * queue[k];
      if (seen.insert(x).second) {
        if (seen.size() > cap)
          throw SizeCapError("Weyl group enumeration exceeds the cap of " + std::to_string(cap) +
                             " elements");
        queue.push_back(std::move(x));
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

}  // namespace

WeylSubgroup WeylSubgroup::generated(std::size_t rank, std::vector<WeylElement> gens, std::string label) {
  WeylSubgroup h;
  h.rank_ = rank;
  std::erase_if(gens, [](const WeylElement& g) { return g.is_identity(); });
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  h.elements_ = closure(rank, gens);
  h.generators_ = std::move(gens);
  h.label_ = std::move(label);
  h.build_index();
  return h;
}

WeylSubgroup WeylSubgroup::from_elements(std::size_t rank, std::vector<WeylElement> elems, std::string label) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  std::vector<WeylElement> gens;
  std::vector<WeylElement> current{WeylElement::identity(rank)};
  for (const auto& x : elems) {
    if (std::binary_search(current.begin(), current.end(), x)) continue;
    gens.push_back(x);
    current = closure(rank, gens);
  }
  if (current != elems) throw MathCheckError("element set '" + label + "' is not a subgroup");
  WeylSubgroup h;
  h.rank_ = rank;
  h.elements_ = std::move(elems);
  h.generators_ = std::move(gens);
  h.label_ = std::move(label);
  h.build_index();
  return h;
}

void WeylSubgroup::build_index() {
  index_.clear();
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

bool WeylSubgroup::contains(const WeylElement& w) const { return index_.count(w) > 0; }

std::ptrdiff_t WeylSubgroup::index_of(const WeylElement& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

bool WeylSubgroup::is_subgroup_of(const WeylSubgroup& other) const {
  for (const auto& x : elements_)
    if (!other.contains(x)) return false;
  return true;
}

WeylSubgroup WeylSubgroup::conjugate(const WeylElement& w, std::string label) const {
  WeylElement wi = w.inverse();
  std::vector<WeylElement> gens;
  for (const auto& g : generators_) gens.push_back(w * g * wi);
  return generated(rank_, std::move(gens), std::move(label));
}

WeylSubgroup intersect(const WeylSubgroup& a, const WeylSubgroup& b, std::string label) {
  std::vector<WeylElement> common;
  const WeylSubgroup& small = a.order() <= b.order() ? a : b;
  const WeylSubgroup& big = a.order() <= b.order() ? b : a;
  for (const auto& x : small.elements())
    if (big.contains(x)) common.push_back(x);
  return WeylSubgroup::from_elements(a.rank(), std::move(common), std::move(label));
}

std::uint64_t weyl_group_order(const RootDatum& d) {
  std::uint64_t total = 1;
  for (const auto& f : d.factors) {
    std::uint64_t r = static_cast<std::uint64_t>(f.rank);
    std::uint64_t fact = 1;
    switch (f.type) {
      case CartanType::A:
        for (std::uint64_t i = 2; i <= r + 1; ++i) fact *= i;
        break;
      case CartanType::B:
      case CartanType::C:
        for (std::uint64_t i = 2; i <= r; ++i) fact *= i;
        fact <<= r;
        break;
      case CartanType::D:
        for (std::uint64_t i = 2; i <= r; ++i) fact *= i;
        fact <<= (r - 1);
        break;
      case CartanType::Torus:
        break;
    }
    total *= fact;
  }
  return total;
}

WeylSubgroup full_weyl_group(const RootDatum& d) {
  std::uint64_t expected = weyl_group_order(d);
  if (expected > max_weyl_elements())
    throw SizeCapError("W(" + d.name + ") has " + std::to_string(expected) +
                       " elements, above the cap of " + std::to_string(max_weyl_elements()));
  std::vector<int> all(d.rank());
  for (std::size_t i = 0; i < d.rank(); ++i) all[i] = static_cast<int>(i);
  WeylSubgroup w = levi_weyl_group(d, all);
  if (w.order() != expected) throw MathCheckError("W(" + d.name + ") closure has the wrong order");
  return w;
}

WeylSubgroup levi_weyl_group(const RootDatum& d, const std::vector<int>& subset) {
  std::vector<WeylElement> gens;
  std::string label = "W_L{";
  for (std::size_t k = 0; k < subset.size(); ++k) {
    gens.push_back(d.simple_reflection(static_cast<std::size_t>(subset[k])));
    if (k) label += ",";
    label += std::to_string(subset[k] + 1);
  }
  label += "}";
  if (subset.size() == d.rank()) label = "W(" + d.name + ")";
  return WeylSubgroup::generated(d.ambient_dim, std::move(gens), label);
}

WeylElement longest_element(const RootDatum& d) {
  // Reflect rho_check until it is antidominant.
  HalfIntVector v = d.rho_check;
  WeylElement w = WeylElement::identity(d.ambient_dim);
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i < d.rank(); ++i) {
      if (dot(v, d.simple_roots[i]) > Rational(0)) {
        WeylElement s = d.simple_reflection(i);
        v = s.act(v);
        w = s * w;
        moved = true;
      }
    }
  }
  return w;
}

WeylSubgroup theta_fixed_subgroup(const WeylSubgroup& group, const WeylElement& g, std::string label) {
  std::vector<WeylElement> fixed;
  for (const auto& x : group.elements())
    if (g * x == x * g) fixed.push_back(x);
  return WeylSubgroup::from_elements(group.rank(), std::move(fixed), std::move(label));
}

std::vector<DoubleCoset> double_cosets(const WeylSubgroup& K, const WeylSubgroup& L,
                                       const WeylSubgroup& ambient) {
  if (!K.is_subgroup_of(ambient) || !L.is_subgroup_of(ambient))
    throw InputError("double cosets need subgroups of the ambient group");
  const auto& elems = ambient.elements();
  std::vector<bool> seen(elems.size(), false);
  std::vector<DoubleCoset> out;
  for (std::size_t start = 0; start < elems.size(); ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    std::vector<std::size_t> queue{start};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const WeylElement& x = elems[queue[k]];
      auto visit = [&](const WeylElement& y) {
        std::ptrdiff_t idx = ambient.index_of(y);
        if (idx < 0) throw MathCheckError("double coset left the ambient group");
        if (!seen[static_cast<std::size_t>(idx)]) {
          seen[static_cast<std::size_t>(idx)] = true;
          queue.push_back(static_cast<std::size_t>(idx));
        }
      };
      for (const auto& g : K.generators()) visit(g * x);
      for (const auto& g : L.generators()) visit(x * g);
    }
    out.push_back({elems[start], queue.size()});
  }
  return out;
}

// ------------------------------------------------------------------- catalog

namespace {

WeylElement swap_pair(std::size_t n, std::size_t i, std::size_t j) { return WeylElement::transposition(n, i, j); }

// Reflection in e_i + e_j: e_i -> -e_j, e_j -> -e_i.
WeylElement d_reflection(std::size_t n, std::size_t i, std::size_t j) {
  WeylElement t = WeylElement::transposition(n, i, j);
  std::vector<int> img = t.images();
  img[i] = -img[i];
  img[j] = -img[j];
  return WeylElement::from_images(img);
}

void add_type_a(std::vector<WeylElement>& gens, std::size_t n, std::size_t off, std::size_t len) {
  for (std::size_t i = 0; i + 1 < len; ++i) gens.push_back(swap_pair(n, off + i, off + i + 1));
}

void add_type_b(std::vector<WeylElement>& gens, std::size_t n, std::size_t off, std::size_t len) {
  add_type_a(gens, n, off, len);
  if (len >= 1) gens.push_back(WeylElement::sign_flip(n, off + len - 1));
}

void add_type_d(std::vector<WeylElement>& gens, std::size_t n, std::size_t off, std::size_t len) {
  add_type_a(gens, n, off, len);
  if (len >= 2) gens.push_back(d_reflection(n, off + len - 2, off + len - 1));
}

}  // namespace

CatalogEntry compact_weyl_catalog(const GroupDescriptor& g, KFlavor k) {
  CatalogEntry c;
  c.group = g;
  c.k = k;
  if (g.family == GroupFamily::GLC || g.family == GroupFamily::SLR)
    throw UnsupportedError(g.to_string() + " is outside the compact Weyl catalog");
  c.datum = build_classical_dual(g);
  c.W = full_weyl_group(c.datum);
  c.theta = c.datum.theta_map();
  c.W_theta = theta_fixed_subgroup(c.W, c.theta, "W^theta");
  std::size_t n = c.datum.ambient_dim;
  std::vector<WeylElement> kg;
  std::string label;
  switch (g.family) {
    case GroupFamily::U:
      add_type_a(kg, n, 0, static_cast<std::size_t>(g.p));
      add_type_a(kg, n, static_cast<std::size_t>(g.p), static_cast<std::size_t>(g.q));
      label = "S" + std::to_string(g.p) + "xS" + std::to_string(g.q);
      c.e = g.n();
      break;
    case GroupFamily::GLR: {
      std::size_t m = n / 2;
      for (std::size_t i = 0; i + 1 < m; ++i)
        kg.push_back(swap_pair(n, i, i + 1) * swap_pair(n, n - 1 - i, n - 2 - i));
      bool even_flips = k == KFlavor::SO && n % 2 == 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (!even_flips) {
          kg.push_back(swap_pair(n, i, n - 1 - i));
        } else if (i > 0) {
          kg.push_back(swap_pair(n, 0, n - 1) * swap_pair(n, i, n - 1 - i));
        }
      }
      label = std::string(k == KFlavor::SO ? "W(SO_" : "W(O_") + std::to_string(n) + ")";
      c.d = static_cast<int>((n + 1) / 2);
      c.a = static_cast<int>(n % 2);
      c.b = static_cast<int>(m);
      break;
    }
    case GroupFamily::Sp:
      add_type_a(kg, n, 0, n);
      label = "S" + std::to_string(n);
      c.e = static_cast<int>(n);
      break;
    case GroupFamily::SO: {
      int p = g.p, q = g.q;
      if ((p + q) % 2 == 1) {
        if (p % 2 == 0) std::swap(p, q);
        std::size_t a = static_cast<std::size_t>(p / 2), b = static_cast<std::size_t>(q / 2);
        add_type_b(kg, n, 0, a);
        add_type_d(kg, n, a, b);
        label = "W(B" + std::to_string(a) + ")xW(D" + std::to_string(b) + ")";
        c.e = static_cast<int>(n);
      } else if (p % 2 == 0) {
        std::size_t a = static_cast<std::size_t>(p / 2), b = static_cast<std::size_t>(q / 2);
        add_type_d(kg, n, 0, a);
        add_type_d(kg, n, a, b);
        label = "W(D" + std::to_string(a) + ")xW(D" + std::to_string(b) + ")";
        c.e = static_cast<int>(n);
      } else {
        std::size_t a = static_cast<std::size_t>(p / 2), b = static_cast<std::size_t>(q / 2);
        // W(B_a) x W(B_b) on the first a+b coordinates; the last sign keeps
        // the total sign product equal to +1.
        add_type_a(kg, n, 0, a);
        add_type_a(kg, n, a, b);
        if (a >= 1) kg.push_back(WeylElement::sign_flip(n, a - 1) * WeylElement::sign_flip(n, n - 1));
        if (b >= 1) kg.push_back(WeylElement::sign_flip(n, a + b - 1) * WeylElement::sign_flip(n, n - 1));
        label = "W(B" + std::to_string(a) + ")xW(B" + std::to_string(b) + ")";
        c.d = 1;
        c.a = 1;
        c.e = static_cast<int>(a + b);
      }
      break;
    }
    default:
      break;
  }
  c.K = WeylSubgroup::generated(n, std::move(kg), "iota(W_K) = " + label);
  if (!c.K.is_subgroup_of(c.W_theta))
    throw MathCheckError("catalog subgroup for " + g.to_string() + " is not inside W^theta");
  if (c.W.order() % c.K.order() != 0) throw MathCheckError("catalog subgroup order does not divide |W|");
  return c;
}

}  // namespace cohoparam
