#include "cohoparam/cohomology.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "cohoparam/errors.hpp"

namespace cohoparam {

PoincarePolynomial::PoincarePolynomial(std::vector<std::uint64_t> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0);
}

PoincarePolynomial PoincarePolynomial::exterior(const std::vector<int>& degrees) {
  PoincarePolynomial p;
  for (int g : degrees) {
    if (g < 1) throw InputError("generator degree must be positive");
    std::vector<std::uint64_t> f(static_cast<std::size_t>(g) + 1, 0);
    f.front() = 1;
    f.back() = 1;
    p = p * PoincarePolynomial(std::move(f));
  }
  return p;
}

std::uint64_t PoincarePolynomial::total() const {
  std::uint64_t t = 0;
  for (auto c : coeffs_) t += c;
  return t;
}

bool PoincarePolynomial::palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

PoincarePolynomial operator*(const PoincarePolynomial& a, const PoincarePolynomial& b) {
  std::vector<std::uint64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return PoincarePolynomial(std::move(c));
}

std::string PoincarePolynomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || coeffs_[i] != 1) s += std::to_string(coeffs_[i]);
    if (i >= 1) s += "t";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

std::string to_string(SpaceTag t) {
  switch (t) {
    case SpaceTag::U: return "U";
    case SpaceTag::U_SO: return "U/SO";
    case SpaceTag::U_O: return "U/O";
    case SpaceTag::U_Sp: return "U/Sp";
  }
  return "?";
}

SpaceTag parse_space_tag(std::string_view text) {
  for (SpaceTag t : {SpaceTag::U, SpaceTag::U_SO, SpaceTag::U_O, SpaceTag::U_Sp})
    if (text == to_string(t)) return t;
  throw InputError("unknown space tag '" + std::string(text) + "'");
}

namespace {

std::vector<int> progression(int first, int step, int count) {
  std::vector<int> v;
  for (int i = 0; i < count; ++i) v.push_back(first + step * i);
  return v;
}

}  // namespace

PoincarePolynomial symmetric_space_poincare(SpaceTag tag, int N) {
  if (N < 0) throw InputError("matrix size must be non-negative");
  switch (tag) {
    case SpaceTag::U:
      return PoincarePolynomial::exterior(progression(1, 2, N));
    case SpaceTag::U_SO:
    case SpaceTag::U_O:
      if (N % 2 == 1) return PoincarePolynomial::exterior(progression(1, 4, (N + 1) / 2));
      if (tag == SpaceTag::U_O || N == 0) return PoincarePolynomial::exterior(progression(1, 4, N / 2));
      return PoincarePolynomial::exterior(progression(1, 4, N / 2)) * PoincarePolynomial::exterior({N});
    case SpaceTag::U_Sp:
      if (N % 2 == 1) throw InputError("U/Sp needs an even matrix size");
      return PoincarePolynomial::exterior(progression(1, 4, N / 2));
  }
  throw InputError("unknown space tag");
}

PoincarePolynomial levi_cohomology(const std::vector<int>& partition, KFlavor k) {
  std::size_t len = partition.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (partition[i] < 1) throw InputError("partition parts must be positive");
    if (partition[i] != partition[len - 1 - i]) throw InputError("partition is not self-dual");
  }
  PoincarePolynomial p;
  for (std::size_t i = 0; i < len / 2; ++i) p = p * symmetric_space_poincare(SpaceTag::U, partition[i]);
  if (len % 2 == 1)
    p = p * symmetric_space_poincare(k == KFlavor::SO ? SpaceTag::U_SO : SpaceTag::U_O, partition[len / 2]);
  return p;
}

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

PacketSum packet_cohomology_sum(const CatalogEntry& c, const std::vector<int>& subset) {
  PacketDescriptor pk = packet(c, subset);
  PacketSum s;
  s.packet_size = pk.size();
  for (const auto& m : pk.members) s.double_coset_sum += m.h_dim;
  s.closed_form = (std::uint64_t{1} << c.d) * (c.W_theta.order() / c.K.order());
  s.value = s.closed_form;
  int N = c.group.n();
  if (c.group.family == GroupFamily::GLR) {
    auto blocks = compositions_blocks(N, pk.subset);
    s.levi_sum = pk.size() * levi_cohomology(blocks, c.k).total();
    if (N % 2 == 1) {
      s.gl_formula = std::uint64_t{1} << ((N + 1) / 2);
      s.floor_text = std::uint64_t{1} << (N / 2);
      s.floor_text_discrepancy = *s.floor_text != s.value;
    } else {
      s.gl_formula = std::uint64_t{1} << (N / 2 + (c.k == KFlavor::SO ? 1 : 0));
    }
  } else if (c.group.family == GroupFamily::U) {
    std::uint64_t total = 0;
    for (const auto& m : pk.members) {
      std::uint64_t prod = 1;
      std::size_t pos = 0;
      for (int blk : compositions_blocks(N, pk.subset)) {
        int p = 0;
        for (int j = 0; j < blk; ++j) p += m.rep.perm(pos + static_cast<std::size_t>(j)) < c.group.p ? 1 : 0;
        prod *= binomial(blk, p);
        pos += static_cast<std::size_t>(blk);
      }
      total += prod;
    }
    s.levi_sum = total;
  }
  auto mismatch = [&](const std::string& what, std::uint64_t v) {
    throw MathCheckError("packet sum for " + c.group.to_string() + ": " + what + " = " + std::to_string(v) +
                         " but closed form = " + std::to_string(s.closed_form));
  };
  if (s.double_coset_sum != s.closed_form) mismatch("double coset sum", s.double_coset_sum);
  if (s.levi_sum && *s.levi_sum != s.closed_form) mismatch("Levi cohomology sum", *s.levi_sum);
  if (s.gl_formula && *s.gl_formula != s.closed_form) mismatch("GL formula", *s.gl_formula);
  return s;
}

PacketSum packet_cohomology_sum(const GroupDescriptor& g, const std::vector<int>& subset, KFlavor k) {
  return packet_cohomology_sum(compact_weyl_catalog(g, k), subset);
}

namespace {

RootDatum compact_datum(const CompactDescriptor& g) {
  int r = g.rank();
  switch (g.family) {
    case CompactFamily::U: return simple_datum(CartanType::A, g.n - 1, Flavor::GL);
    case CompactFamily::Sp: return simple_datum(CartanType::C, r, Flavor::Sp);
    case CompactFamily::SO:
      if (g.n % 2 == 1) return simple_datum(CartanType::B, r, Flavor::SO);
      return simple_datum(r == 1 ? CartanType::Torus : CartanType::D, r, Flavor::SO);
  }
  throw InputError("unknown compact group");
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

CompactInnerForms innerform_sum_compact(const CompactDescriptor& g) {
  int r = g.rank();
  if (r > 8) throw UnsupportedError("compact inner forms are enumerated up to rank 8");
  CompactInnerForms out;
  out.group = g;
  if (r == 0) {
    out.weyl_order = 1;
    out.classes.push_back({{}, 1, 1, g.to_string()});
    out.sum = 1;
    return out;
  }
  RootDatum d = compact_datum(g);
  out.weyl_order = weyl_group_order(d);
  std::size_t n = static_cast<std::size_t>(r);

  // W acts on T[2] through its permutation part; sign changes invert t and
  // fix every element of order two.
  std::set<std::vector<int>> seen;
  for (int k = 0; k <= r; ++k) {
    for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
      std::vector<int> c(n);
      int minus = 0;
      for (std::size_t i = 0; i < n; ++i) {
        c[i] = (mask >> i) & 1u ? -1 : 1;
        minus += c[i] < 0 ? 1 : 0;
      }
      if (minus != k || seen.count(c)) continue;
      std::deque<std::vector<int>> queue{c};
      seen.insert(c);
      std::uint64_t orbit = 0;
      while (!queue.empty()) {
        auto cur = queue.front();
        queue.pop_front();
        ++orbit;
        for (std::size_t i = 0; i < d.rank(); ++i) {
          WeylElement s = d.simple_reflection(i);
          std::vector<int> next(n);
          for (std::size_t j = 0; j < n; ++j) next[static_cast<std::size_t>(s.perm(j))] = cur[j];
          if (seen.insert(next).second) queue.push_back(next);
        }
      }
      std::vector<int> rep = c;
      std::sort(rep.begin(), rep.end(), std::greater<>());
      PureInnerFormClass cls;
      cls.rep = rep;
      cls.orbit_size = orbit;
      std::uint64_t signs = 1;
      if (g.family != CompactFamily::U) signs = std::uint64_t{1} << (d.factors.front().type == CartanType::D ? r - 1 : r);
      if (d.factors.front().type == CartanType::Torus) signs = 1;
      cls.stabilizer_order = factorial(k) * factorial(r - k) * signs;
      switch (g.family) {
        case CompactFamily::U: cls.label = "U(" + std::to_string(r - k) + "," + std::to_string(k) + ")"; break;
        case CompactFamily::Sp: cls.label = "Sp(" + std::to_string(r - k) + "," + std::to_string(k) + ")"; break;
        case CompactFamily::SO:
          cls.label = "SO(" + std::to_string(g.n - 2 * k) + "," + std::to_string(2 * k) + ")";
          break;
      }
      if (cls.orbit_size * cls.stabilizer_order != out.weyl_order)
        throw MathCheckError(g.to_string() + ": orbit x stabilizer != |W| for " + cls.label);
      out.classes.push_back(std::move(cls));
    }
  }

  if (out.weyl_order <= 100000) {
    WeylSubgroup W = full_weyl_group(d);
    for (auto& cls : out.classes) {
      std::uint64_t stab = 0;
      for (const auto& w : W.elements()) {
        bool fixed = true;
        for (std::size_t j = 0; j < n && fixed; ++j) fixed = cls.rep[static_cast<std::size_t>(w.perm(j))] == cls.rep[j];
        stab += fixed ? 1 : 0;
      }
      if (stab != cls.stabilizer_order)
        throw MathCheckError(g.to_string() + ": stabilizer of " + cls.label + " has order " + std::to_string(stab));
    }
  }
  for (const auto& cls : out.classes) out.sum += cls.orbit_size;
  if (out.sum != (std::uint64_t{1} << r))
    throw MathCheckError(g.to_string() + ": inner form sum " + std::to_string(out.sum) + " != 2^" + std::to_string(r));
  return out;
}

QuasiSplitInnerForms innerform_sum_quasisplit(const GroupDescriptor& g) {
  CatalogEntry base = compact_weyl_catalog(g);
  QuasiSplitInnerForms out;
  out.a = base.a;
  out.b = base.b;
  out.e = base.e;
  auto term = [](const CatalogEntry& c) {
    InnerFormTerm t;
    t.form = c.group.to_string();
    t.index = c.W_theta.order() / c.K.order();
    t.betti = (std::uint64_t{1} << c.d) * t.index;
    return t;
  };
  switch (g.family) {
    case GroupFamily::U:
      out.family = "U(p,q), p+q=" + std::to_string(g.n());
      for (int p = g.n(); p >= 0; --p) out.terms.push_back(term(compact_weyl_catalog(GroupDescriptor{GroupFamily::U, p, g.n() - p})));
      break;
    case GroupFamily::GLR:
    case GroupFamily::Sp:
      out.family = g.to_string();
      out.terms.push_back(term(base));
      break;
    default:
      throw UnsupportedError("partial sum: the catalog does not list every pure inner form of " + g.to_string());
  }
  for (const auto& t : out.terms) {
    out.index_sum += t.index;
    out.betti_sum += t.betti;
  }
  if (out.index_sum != (std::uint64_t{1} << out.e))
    throw MathCheckError(out.family + ": index sum " + std::to_string(out.index_sum) + " != 2^e");
  if (out.betti_sum != (std::uint64_t{1} << (out.a + out.b + out.e)))
    throw MathCheckError(out.family + ": Betti sum " + std::to_string(out.betti_sum) + " != 2^{a+b+e}");
  return out;
}

}  // namespace cohoparam
