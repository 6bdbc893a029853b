#include "cohoparam/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <set>

#include "cohoparam/errors.hpp"

namespace cohoparam {

std::string to_string(CartanType t) {
  switch (t) {
    case CartanType::A: return "A";
    case CartanType::B: return "B";
    case CartanType::C: return "C";
    case CartanType::D: return "D";
    case CartanType::Torus: return "T";
  }
  return "?";
}

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::GL: return "GL";
    case Flavor::SL: return "SL";
    case Flavor::Adjoint: return "Adjoint";
    case Flavor::SO: return "SO";
    case Flavor::Sp: return "Sp";
  }
  return "?";
}

// ---------------------------------------------------------------- descriptors

namespace {

std::string upper_no_space(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

GroupDescriptor GroupDescriptor::parse(std::string_view text) {
  std::string s = upper_no_space(text);
  std::smatch m;
  static const std::regex two(R"(^(GL|SL|U|SP|SO)\((\d+),(\d+|R|C)\)$)");
  if (!std::regex_match(s, m, two))
    throw InputError("unrecognized group descriptor '" + std::string(text) + "'");
  std::string fam = m[1];
  std::string a = m[2];
  std::string b = m[3];
  int x = std::stoi(a);
  GroupDescriptor g{GroupFamily::GLR, 0, 0};
  if (fam == "GL" || fam == "SL") {
    if (b != "R" && b != "C") throw InputError("expected R or C field in '" + std::string(text) + "'");
    if (fam == "SL" && b == "C") throw InputError("SL(n,C) is not a supported group");
    g.family = fam == "SL" ? GroupFamily::SLR : (b == "R" ? GroupFamily::GLR : GroupFamily::GLC);
    g.p = x;
  } else if (fam == "SP") {
    if (b != "R") throw InputError("expected Sp(2n,R)");
    if (x % 2 != 0) throw InputError("Sp(2n,R) needs an even matrix size");
    g.family = GroupFamily::Sp;
    g.p = x;
  } else {
    if (b == "R" || b == "C") throw InputError("expected a signature (p,q) in '" + std::string(text) + "'");
    g.family = fam == "U" ? GroupFamily::U : GroupFamily::SO;
    g.p = x;
    g.q = std::stoi(b);
  }
  if (g.n() < 1 || (g.family == GroupFamily::Sp && g.p < 2))
    throw InputError("group '" + std::string(text) + "' has rank zero");
  if (g.family == GroupFamily::SO && g.n() < 2) throw InputError("SO(p,q) needs p+q >= 2");
  return g;
}

std::string GroupDescriptor::to_string() const {
  switch (family) {
    case GroupFamily::GLR: return "GL(" + std::to_string(p) + ",R)";
    case GroupFamily::GLC: return "GL(" + std::to_string(p) + ",C)";
    case GroupFamily::SLR: return "SL(" + std::to_string(p) + ",R)";
    case GroupFamily::U: return "U(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case GroupFamily::Sp: return "Sp(" + std::to_string(p) + ",R)";
    case GroupFamily::SO: return "SO(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }
  return "?";
}

CompactDescriptor CompactDescriptor::parse(std::string_view text) {
  std::string s = upper_no_space(text);
  std::smatch m;
  static const std::regex one(R"(^(U|SP|SO)\((\d+)\)$)");
  if (!std::regex_match(s, m, one))
    throw InputError("unrecognized compact group '" + std::string(text) + "'");
  CompactDescriptor c{CompactFamily::U, std::stoi(std::string(m[2]))};
  std::string fam = m[1];
  c.family = fam == "U" ? CompactFamily::U : (fam == "SP" ? CompactFamily::Sp : CompactFamily::SO);
  if (c.rank() < 1) throw InputError("compact group '" + std::string(text) + "' has rank zero");
  return c;
}

std::string CompactDescriptor::to_string() const {
  switch (family) {
    case CompactFamily::U: return "U(" + std::to_string(n) + ")";
    case CompactFamily::Sp: return "Sp(" + std::to_string(n) + ")";
    case CompactFamily::SO: return "SO(" + std::to_string(n) + ")";
  }
  return "?";
}

int CompactDescriptor::rank() const { return family == CompactFamily::SO ? n / 2 : n; }

// ----------------------------------------------------------------- root data

namespace {

HalfIntVector coroot_of(const HalfIntVector& root) {
  Rational len = dot(root, root);
  if (len == Rational(4)) return root.halved();
  if (len == Rational(2)) return root;
  if (len == Rational(1)) return 2 * root;
  throw MathCheckError("unexpected root length for " + root.to_string());
}

// Strictly dominant test vector used to pick out positive roots.
HalfIntVector test_vector(const RootDatum& d) {
  HalfIntVector x(d.ambient_dim);
  for (const auto& f : d.factors) {
    if (f.type == CartanType::Torus) continue;
    for (std::size_t i = 0; i < f.dim; ++i)
      x[f.offset + i] = HalfInt(static_cast<int>(f.dim - i));
  }
  return x;
}

WeylElement longest_by_reflection(const RootDatum& d, const std::vector<int>& subset) {
  HalfIntVector v = -test_vector(d);
  WeylElement w = WeylElement::identity(d.ambient_dim);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : subset) {
      if (dot(v, d.simple_roots[static_cast<std::size_t>(i)]) < Rational(0)) {
        WeylElement s = d.simple_reflection(static_cast<std::size_t>(i));
        v = s.act(v);
        w = s * w;
        moved = true;
      }
    }
  }
  return w;
}

int find_root(const RootDatum& d, const HalfIntVector& r) {
  for (std::size_t j = 0; j < d.rank(); ++j)
    if (d.simple_roots[j] == r) return static_cast<int>(j);
  return -1;
}

std::vector<int> all_indices(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i);
  return v;
}

void install_iota(RootDatum& d) {
  WeylElement w0 = longest_by_reflection(d, all_indices(d.rank()));
  d.iota_map = WeylElement::minus_identity(d.ambient_dim) * w0;
  d.iota.assign(d.rank(), -1);
  for (std::size_t i = 0; i < d.rank(); ++i) {
    int j = find_root(d, d.iota_map.act(d.simple_roots[i]));
    if (j < 0) throw MathCheckError("-w0 does not permute the simple roots of " + d.name);
    d.iota[i] = j;
  }
}

void finish(RootDatum& d) {
  d.simple_coroots.clear();
  for (const auto& a : d.simple_roots) d.simple_coroots.push_back(coroot_of(a));
  d.rho = HalfIntVector(d.ambient_dim);
  d.rho_check = HalfIntVector(d.ambient_dim);
  HalfIntVector two_rho(d.ambient_dim), two_rho_check(d.ambient_dim);
  for (const auto& [r, c] : d.positive_roots()) {
    two_rho += r;
    two_rho_check += c;
  }
  d.rho = two_rho.halved();
  d.rho_check = two_rho_check.halved();
  d.gamma = all_indices(d.rank());
  d.gamma_map = WeylElement::identity(d.ambient_dim);
  install_iota(d);
}

}  // namespace

std::vector<int> RootDatum::theta() const {
  std::vector<int> t(rank());
  for (std::size_t i = 0; i < rank(); ++i) t[i] = iota[static_cast<std::size_t>(gamma[i])];
  return t;
}

WeylElement RootDatum::theta_map() const { return iota_map * gamma_map; }

std::vector<std::vector<int>> RootDatum::cartan_matrix() const {
  std::vector<std::vector<int>> c(rank(), std::vector<int>(rank()));
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) {
      Rational x = dot(simple_coroots[i], simple_roots[j]);
      if (!x.is_integer()) throw MathCheckError("non-integral Cartan entry");
      c[i][j] = static_cast<int>(x.num());
    }
  return c;
}

WeylElement RootDatum::reflection(const HalfIntVector& root, const HalfIntVector& coroot) const {
  std::vector<int> img(ambient_dim);
  for (std::size_t k = 0; k < ambient_dim; ++k) {
    HalfIntVector e = HalfIntVector::unit(ambient_dim, k);
    Rational c = dot(coroot, e);
    if (!c.is_integer()) throw MathCheckError("reflection is not integral");
    HalfIntVector image = e - c.num() * root;
    int found = 0;
    for (std::size_t j = 0; j < ambient_dim; ++j) {
      if (image[j].twice() == 0) continue;
      if (found != 0 || (image[j].twice() != 2 && image[j].twice() != -2))
        throw MathCheckError("reflection is not a signed permutation");
      found = image[j].twice() > 0 ? static_cast<int>(j) + 1 : -(static_cast<int>(j) + 1);
    }
    if (found == 0) throw MathCheckError("degenerate reflection");
    img[k] = found;
  }
  return WeylElement::from_images(std::move(img));
}

WeylElement RootDatum::simple_reflection(std::size_t i) const {
  return reflection(simple_roots.at(i), simple_coroots.at(i));
}

std::vector<std::pair<HalfIntVector, HalfIntVector>> RootDatum::positive_roots(
    const std::vector<int>& subset) const {
  std::map<HalfIntVector, HalfIntVector> seen;
  std::vector<HalfIntVector> queue;
  for (int i : subset) {
    const auto& a = simple_roots.at(static_cast<std::size_t>(i));
    if (seen.emplace(a, simple_coroots[static_cast<std::size_t>(i)]).second) queue.push_back(a);
  }
  std::vector<WeylElement> gens;
  for (int i : subset) gens.push_back(simple_reflection(static_cast<std::size_t>(i)));
  for (std::size_t k = 0; k < queue.size(); ++k) {
    HalfIntVector r = queue[k];
    HalfIntVector c = seen.at(r);
    for (const auto& s : gens) {
      HalfIntVector r2 = s.act(r);
      if (seen.emplace(r2, s.act(c)).second) queue.push_back(r2);
    }
  }
  HalfIntVector x0 = test_vector(*this);
  std::vector<std::pair<HalfIntVector, HalfIntVector>> out;
  for (const auto& [r, c] : seen)
    if (dot(x0, r) > Rational(0)) out.emplace_back(r, c);
  return out;
}

std::vector<std::pair<HalfIntVector, HalfIntVector>> RootDatum::positive_roots() const {
  return positive_roots(all_indices(rank()));
}

bool RootDatum::is_dominant(const HalfIntVector& v) const {
  for (const auto& a : simple_roots)
    if (dot(v, a) < Rational(0)) return false;
  return true;
}

bool RootDatum::is_regular_dominant(const HalfIntVector& v) const {
  for (const auto& a : simple_roots)
    if (dot(v, a) <= Rational(0)) return false;
  return true;
}

std::pair<HalfIntVector, WeylElement> RootDatum::dominant_representative(
    const HalfIntVector& v0) const {
  HalfIntVector v = v0;
  WeylElement w = WeylElement::identity(ambient_dim);
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (dot(v, simple_roots[i]) < Rational(0)) {
        WeylElement s = simple_reflection(i);
        v = s.act(v);
        w = s * w;
        moved = true;
      }
    }
  }
  return {v, w};
}

bool RootDatum::in_cocharacter_lattice(const HalfIntVector& v) const {
  for (const auto& f : factors) {
    for (std::size_t i = 0; i < f.dim; ++i) {
      HalfInt x = v[f.offset + i];
      if (f.flavor == Flavor::Adjoint) x -= v[f.offset];
      if (!x.is_integer()) return false;
    }
  }
  return true;
}

std::vector<HalfIntVector> RootDatum::character_lattice_basis() const {
  std::vector<HalfIntVector> basis;
  for (const auto& f : factors) {
    if (f.flavor == Flavor::Adjoint) {
      for (int k = 0; k < f.rank; ++k) basis.push_back(simple_roots[f.root_offset + static_cast<std::size_t>(k)]);
    } else {
      for (std::size_t i = 0; i < f.dim; ++i) basis.push_back(HalfIntVector::unit(ambient_dim, f.offset + i));
    }
  }
  return basis;
}

bool RootDatum::theta_fixed_mod_center(const HalfIntVector& v) const {
  HalfIntVector diff = v - theta_map().act(v);
  for (const auto& f : factors) {
    bool central = f.type == CartanType::A &&
                   (f.flavor == Flavor::GL || f.flavor == Flavor::Adjoint || f.flavor == Flavor::SL);
    for (std::size_t i = 0; i < f.dim; ++i) {
      HalfInt x = diff[f.offset + i];
      if (central ? x != diff[f.offset] : x.twice() != 0) return false;
    }
  }
  return true;
}

std::vector<HalfIntVector> RootDatum::standard_weights() const {
  std::vector<HalfIntVector> w;
  std::size_t n = ambient_dim;
  switch (kind) {
    case ParamKind::RealGL:
      for (std::size_t i = 0; i < n; ++i) w.push_back(HalfIntVector::unit(n, i));
      break;
    case ParamKind::Complex: {
      const Factor& f = factors.front();
      for (std::size_t i = 0; i < f.dim; ++i) w.push_back(HalfIntVector::unit(n, f.offset + i));
      break;
    }
    case ParamKind::OrthogonalOdd:
    case ParamKind::Symplectic:
    case ParamKind::OrthogonalEven:
      for (std::size_t i = 0; i < n; ++i) w.push_back(HalfIntVector::unit(n, i));
      for (std::size_t i = 0; i < n; ++i) w.push_back(HalfIntVector::unit(n, i, -1));
      if (kind == ParamKind::OrthogonalOdd) w.push_back(HalfIntVector(n));
      break;
  }
  return w;
}

std::vector<std::vector<int>> standard_cartan_matrix(CartanType t, int rank) {
  std::size_t r = static_cast<std::size_t>(rank);
  if (t == CartanType::Torus) return {};
  std::vector<std::vector<int>> c(r, std::vector<int>(r, 0));
  for (std::size_t i = 0; i < r; ++i) c[i][i] = 2;
  if (t == CartanType::D) {
    // Nodes 0..r-3 form a chain; r-2 and r-1 both attach to r-3.
    for (std::size_t i = 0; i + 2 < r; ++i) c[i][i + 1] = c[i + 1][i] = -1;
    if (r >= 3) c[r - 3][r - 1] = c[r - 1][r - 3] = -1;
    return c;
  }
  for (std::size_t i = 0; i + 1 < r; ++i) c[i][i + 1] = c[i + 1][i] = -1;
  // Entry [i][j] is <alpha_i check, alpha_j>.
  if (t == CartanType::B && r >= 2) c[r - 1][r - 2] = -2;
  if (t == CartanType::C && r >= 2) c[r - 2][r - 1] = -2;
  return c;
}

RootDatum simple_datum(CartanType t, int rank, Flavor f) {
  if (rank < 0) throw InputError("negative rank");
  RootDatum d;
  std::size_t r = static_cast<std::size_t>(rank);
  if (t == CartanType::D && rank == 1) t = CartanType::Torus;
  if ((t == CartanType::B || t == CartanType::C || t == CartanType::D) && rank == 0)
    throw InputError("classical factor of rank zero");
  if (t == CartanType::D && rank < 2) throw InputError("D_n needs n >= 2");
  std::size_t n = t == CartanType::A ? r + 1 : r;
  d.ambient_dim = n;
  Factor fac{t, rank, f, 0, n, 0};
  if (t == CartanType::Torus) fac.rank = 0;
  d.factors.push_back(fac);
  d.name = to_string(t) + std::to_string(rank);
  auto e = [n](std::size_t i, int v = 1) { return HalfIntVector::unit(n, i, v); };
  switch (t) {
    case CartanType::A:
      for (std::size_t i = 0; i < r; ++i) d.simple_roots.push_back(e(i) - e(i + 1));
      break;
    case CartanType::B:
      for (std::size_t i = 0; i + 1 < r; ++i) d.simple_roots.push_back(e(i) - e(i + 1));
      d.simple_roots.push_back(e(r - 1));
      break;
    case CartanType::C:
      for (std::size_t i = 0; i + 1 < r; ++i) d.simple_roots.push_back(e(i) - e(i + 1));
      d.simple_roots.push_back(e(r - 1, 2));
      break;
    case CartanType::D:
      for (std::size_t i = 0; i + 1 < r; ++i) d.simple_roots.push_back(e(i) - e(i + 1));
      d.simple_roots.push_back(e(r - 2) + e(r - 1));
      break;
    case CartanType::Torus:
      break;
  }
  finish(d);
  return d;
}

RootDatum product(const RootDatum& a, const RootDatum& b) {
  RootDatum d;
  d.name = a.name + "x" + b.name;
  d.ambient_dim = a.ambient_dim + b.ambient_dim;
  d.factors = a.factors;
  for (Factor f : b.factors) {
    f.offset += a.ambient_dim;
    f.root_offset += a.rank();
    d.factors.push_back(f);
  }
  auto pad = [&](const HalfIntVector& v, bool first) {
    HalfIntVector r(d.ambient_dim);
    std::size_t off = first ? 0 : a.ambient_dim;
    for (std::size_t i = 0; i < v.size(); ++i) r[off + i] = v[i];
    return r;
  };
  for (const auto& r : a.simple_roots) d.simple_roots.push_back(pad(r, true));
  for (const auto& r : b.simple_roots) d.simple_roots.push_back(pad(r, false));
  d.kind = a.kind;
  finish(d);
  return d;
}

void set_galois(RootDatum& d, const WeylElement& gamma_map) {
  if (gamma_map.rank() != d.ambient_dim) throw MathCheckError("Galois map of wrong rank");
  std::vector<int> g(d.rank());
  for (std::size_t i = 0; i < d.rank(); ++i) {
    int j = find_root(d, gamma_map.act(d.simple_roots[i]));
    if (j < 0) throw MathCheckError("Galois map does not permute the simple roots of " + d.name);
    g[i] = j;
  }
  d.gamma = g;
  d.gamma_map = gamma_map;
}

std::vector<int> opposition_involution(const RootDatum& d) {
  RootDatum copy = d;
  install_iota(copy);
  return copy.iota;
}

RootDatum build_classical_dual(const GroupDescriptor& g, const BuildOptions& opts) {
  RootDatum d;
  int n = g.n();
  switch (g.family) {
    case GroupFamily::GLR:
      d = simple_datum(CartanType::A, n - 1, Flavor::GL);
      d.kind = ParamKind::RealGL;
      break;
    case GroupFamily::SLR:
      d = simple_datum(CartanType::A, n - 1, Flavor::Adjoint);
      d.kind = ParamKind::RealGL;
      break;
    case GroupFamily::GLC: {
      RootDatum a = simple_datum(CartanType::A, n - 1, Flavor::GL);
      d = product(a, a);
      d.kind = ParamKind::Complex;
      std::vector<int> img(d.ambient_dim);
      std::size_t m = a.ambient_dim;
      for (std::size_t i = 0; i < m; ++i) {
        img[i] = static_cast<int>(m + i) + 1;
        img[m + i] = static_cast<int>(i) + 1;
      }
      set_galois(d, WeylElement::from_images(img));
      break;
    }
    case GroupFamily::U: {
      d = simple_datum(CartanType::A, n - 1, Flavor::GL);
      d.kind = ParamKind::Complex;
      std::vector<int> img(d.ambient_dim);
      for (std::size_t i = 0; i < d.ambient_dim; ++i) img[i] = -static_cast<int>(d.ambient_dim - i);
      set_galois(d, WeylElement::from_images(img));
      break;
    }
    case GroupFamily::Sp:
      d = simple_datum(CartanType::B, g.p / 2, Flavor::SO);
      d.kind = ParamKind::OrthogonalOdd;
      break;
    case GroupFamily::SO: {
      if (n % 2 == 1) {
        d = simple_datum(CartanType::C, n / 2, Flavor::Sp);
        d.kind = ParamKind::Symplectic;
        break;
      }
      if (n == 8 && opts.triality_sensitive)
        throw UnsupportedError("SO(p,q) with p+q = 8 is excluded for triality-sensitive output");
      int r = n / 2;
      d = simple_datum(r == 1 ? CartanType::Torus : CartanType::D, r, Flavor::SO);
      d.kind = ParamKind::OrthogonalEven;
      int half_diff = (g.p - g.q) / 2;
      d.disc_nontrivial = (half_diff % 2) != 0;
      if (d.disc_nontrivial) {
        // Branch swap: flip the sign of the last coordinate.
        set_galois(d, WeylElement::sign_flip(d.ambient_dim, d.ambient_dim - 1));
      }
      break;
    }
  }
  d.source = g;
  return d;
}

// ------------------------------------------------------------------ parabolics

StandardParabolic::StandardParabolic(const RootDatum& d, std::vector<int> s) : datum(&d), subset(std::move(s)) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (int i : subset)
    if (i < 0 || static_cast<std::size_t>(i) >= d.rank())
      throw InputError("Levi subset index " + std::to_string(i + 1) + " out of range");
}

HalfIntVector StandardParabolic::rho_check_L() const {
  HalfIntVector two(datum->ambient_dim);
  for (const auto& [r, c] : datum->positive_roots(subset)) two += c;
  return two.halved();
}

bool is_self_associate(const StandardParabolic& p) {
  std::vector<int> th = p.datum->theta();
  std::vector<int> image;
  for (int i : p.subset) image.push_back(th[static_cast<std::size_t>(i)]);
  std::sort(image.begin(), image.end());
  return image == p.subset;
}

namespace {

// Gaussian elimination over Q; m is square and invertible.
std::vector<Rational> solve(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw MathCheckError("singular Levi Cartan system");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

}  // namespace

Sl2Coefficients principal_sl2_coefficients(const StandardParabolic& p, const std::vector<int>* phi) {
  const RootDatum& d = *p.datum;
  std::size_t k = p.subset.size();
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c)
      m[r][c] = dot(d.simple_roots[static_cast<std::size_t>(p.subset[r])],
                    d.simple_coroots[static_cast<std::size_t>(p.subset[c])]);
  Sl2Coefficients out;
  out.subset = p.subset;
  out.a = solve(m, std::vector<Rational>(k, Rational(2)));
  out.residual_max = Rational(0);
  for (std::size_t r = 0; r < k; ++r) {
    Rational acc(0);
    for (std::size_t c = 0; c < k; ++c) acc += out.a[c] * m[r][c];
    Rational res = acc - Rational(2);
    if (res < Rational(0)) res = -res;
    if (res > out.residual_max) out.residual_max = res;
  }
  auto pos = [&](int idx) -> std::ptrdiff_t {
    auto it = std::find(p.subset.begin(), p.subset.end(), idx);
    return it == p.subset.end() ? -1 : it - p.subset.begin();
  };
  out.t = out.a;
  if (phi) {
    for (std::size_t r = 0; r < k; ++r) {
      std::ptrdiff_t j = pos((*phi)[static_cast<std::size_t>(p.subset[r])]);
      if (j < 0) throw InputError("involution does not preserve the Levi subset");
      if (out.a[static_cast<std::size_t>(j)] != out.a[r])
        throw MathCheckError("principal SL2 coefficients are not symmetric under the involution");
      // t_alpha * t_phi(alpha) = a_alpha: put a on the smaller node of each pair.
      if (static_cast<std::size_t>(j) != r) out.t[r] = static_cast<std::size_t>(j) > r ? out.a[r] : Rational(1);
    }
  }
  return out;
}

std::vector<int> levi_opposition(const StandardParabolic& p) {
  const RootDatum& d = *p.datum;
  WeylElement w0 = longest_by_reflection(d, p.subset);
  WeylElement m = WeylElement::minus_identity(d.ambient_dim) * w0;
  std::vector<int> out = all_indices(d.rank());
  for (int i : p.subset) {
    int j = find_root(d, m.act(d.simple_roots[static_cast<std::size_t>(i)]));
    if (j < 0 || std::find(p.subset.begin(), p.subset.end(), j) == p.subset.end())
      throw MathCheckError("Levi opposition does not preserve the subset");
    out[static_cast<std::size_t>(i)] = j;
  }
  return out;
}

EpsilonElement::EpsilonElement(const RootDatum& d) : two_rho_check_(2 * d.rho_check) {
  for (const auto& b : d.character_lattice_basis())
    if ((*this)(b) != 1) trivial_ = false;
}

int EpsilonElement::operator()(const HalfIntVector& mu) const {
  Rational x = dot(two_rho_check_, mu);
  if (!x.is_integer()) throw MathCheckError("weight " + mu.to_string() + " outside the character lattice");
  return x.num() % 2 == 0 ? 1 : -1;
}

EpsilonElement epsilon_element(const RootDatum& d) { return EpsilonElement(d); }

}  // namespace cohoparam
