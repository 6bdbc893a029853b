#include "cohoparam/params.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <regex>
#include <set>

#include "cohoparam/errors.hpp"

namespace cohoparam {

// -------------------------------------------------------------------- atoms

std::string Atom::to_string() const {
  if (is_quad()) return "w" + std::to_string(eps) + "[" + std::to_string(a) + "]";
  return "s" + std::to_string(d) + "[" + std::to_string(m) + "]";
}

Atom Atom::parse(std::string_view text) {
  static const std::regex two(R"(^s(\d+)\[(\d+)\]$)");
  static const std::regex quad(R"(^w([01])\[(\d+)\]$)");
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  std::smatch m;
  if (std::regex_match(s, m, two)) {
    int d = std::stoi(std::string(m[1])), mm = std::stoi(std::string(m[2]));
    if (d < 1 || mm < 1) throw InputError("atom '" + s + "' needs d, m >= 1");
    return two_dim(d, mm);
  }
  if (std::regex_match(s, m, quad)) {
    int a = std::stoi(std::string(m[2]));
    if (a < 1) throw InputError("atom '" + s + "' needs a >= 1");
    return Atom::quad(std::stoi(std::string(m[1])), a);
  }
  throw InputError("malformed atom '" + std::string(text) + "'");
}

bool canonical_less(const Atom& x, const Atom& y) {
  if (x.is_quad() != y.is_quad()) return !x.is_quad();
  if (!x.is_quad()) {
    if (x.d != y.d) return x.d > y.d;
    return x.m > y.m;
  }
  if (x.a != y.a) return x.a > y.a;
  return x.eps < y.eps;
}

GLParameter::GLParameter(std::vector<Atom> atoms, HalfInt twist, bool orbit)
    : atoms_(std::move(atoms)), twist_(twist), orbit_(orbit) {
  for (const auto& a : atoms_) {
    if (a.is_quad() ? (a.a < 1 || (a.eps != 0 && a.eps != 1)) : (a.d < 1 || a.m < 1))
      throw InputError("invalid atom " + a.to_string());
  }
  std::stable_sort(atoms_.begin(), atoms_.end(), canonical_less);
  if (quad_count() == 0) orbit_ = false;
}

int GLParameter::dim() const {
  int n = 0;
  for (const auto& a : atoms_) n += a.dim();
  return n;
}

int GLParameter::quad_count() const {
  int c = 0;
  for (const auto& a : atoms_) c += a.is_quad() ? 1 : 0;
  return c;
}

void GLParameter::validate_cohomological() const {
  std::set<int> ds;
  for (const auto& a : atoms_)
    if (!a.is_quad() && !ds.insert(a.d).second)
      throw InputError("repeated d = " + std::to_string(a.d) + " in " + to_string());
  if (quad_count() > 1) throw InputError("more than one Quad atom in " + to_string());
}

GLParameter GLParameter::twisted_by_omega() const {
  std::vector<Atom> v = atoms_;
  for (auto& a : v)
    if (a.is_quad()) a.eps = 1 - a.eps;
  return GLParameter(std::move(v), twist_, orbit_);
}

GLParameter GLParameter::orbit_normalized() const {
  for (const auto& a : atoms_)
    if (a.is_quad()) return a.eps == 0 ? *this : twisted_by_omega();
  return *this;
}

GLParameter GLParameter::with_orbit(bool orbit) const { return GLParameter(atoms_, twist_, orbit); }

std::string GLParameter::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i) s += "+";
    s += atoms_[i].to_string();
  }
  if (s.empty()) s = "0";
  if (twist_ != HalfInt(0)) s += "*nu^" + twist_.to_string();
  return s;
}

GLParameter GLParameter::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  HalfInt twist(0);
  auto star = s.find("*nu^");
  if (star != std::string::npos) {
    twist = HalfInt::parse(s.substr(star + 4));
    s = s.substr(0, star);
  }
  if (s.empty()) throw InputError("empty parameter");
  std::vector<Atom> atoms;
  std::size_t start = 0;
  while (true) {
    auto plus = s.find('+', start);
    atoms.push_back(Atom::parse(s.substr(start, plus == std::string::npos ? std::string::npos : plus - start)));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return GLParameter(std::move(atoms), twist, false);
}

bool same_parameter(const GLParameter& x, const GLParameter& y, bool modulo_omega) {
  if (x.twist() != y.twist()) return false;
  if (x.atoms() == y.atoms()) return true;
  return modulo_omega && x.orbit_normalized().atoms() == y.orbit_normalized().atoms();
}

ComplexParameter::ComplexParameter(std::vector<ComplexAtom> atoms) : atoms_(std::move(atoms)) {
  for (const auto& a : atoms_)
    if (a.n < 1) throw InputError("complex atom needs n >= 1");
  std::stable_sort(atoms_.begin(), atoms_.end(), [](const ComplexAtom& x, const ComplexAtom& y) {
    if (x.d != y.d) return x.d > y.d;
    return x.n > y.n;
  });
}

int ComplexParameter::dim() const {
  int n = 0;
  for (const auto& a : atoms_) n += a.n;
  return n;
}

bool ComplexParameter::strictly_decreasing() const {
  for (std::size_t i = 1; i < atoms_.size(); ++i)
    if (!(atoms_[i - 1].d > atoms_[i].d)) return false;
  return true;
}

bool ComplexParameter::selfdual() const { return conjugate() == *this; }

ComplexParameter ComplexParameter::conjugate() const {
  std::vector<ComplexAtom> v = atoms_;
  for (auto& a : v) a.d = -a.d;
  return ComplexParameter(std::move(v));
}

std::string ComplexParameter::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i) s += "+";
    s += "(" + atoms_[i].d.to_string() + ")[" + std::to_string(atoms_[i].n) + "]";
  }
  return s.empty() ? "0" : s;
}

ComplexParameter ComplexParameter::parse(std::string_view text) {
  static const std::regex atom(R"(^\(([-+]?\d+(/2)?)\)\[(\d+)\]$)");
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  std::vector<ComplexAtom> atoms;
  std::size_t start = 0;
  while (start <= s.size()) {
    // '+' inside parentheses is a sign, not a separator.
    auto close = s.find(')', start);
    auto plus = close == std::string::npos ? std::string::npos : s.find('+', close);
    std::string piece = s.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    std::smatch m;
    if (!std::regex_match(piece, m, atom)) throw InputError("malformed complex atom '" + piece + "'");
    atoms.push_back({HalfInt::parse(std::string(m[1])), std::stoi(std::string(m[3]))});
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return ComplexParameter(std::move(atoms));
}

// ------------------------------------------------------- abstract parameters

namespace {

bool pairing_nonneg_integral(const RootDatum& d, const HalfIntVector& v) {
  for (const auto& a : d.simple_roots) {
    Rational x = dot(v, a);
    if (!x.is_integer() || x < Rational(0)) return false;
  }
  return true;
}

std::vector<std::vector<int>> subsets_by_size(std::size_t r) {
  std::vector<std::vector<int>> out;
  for (std::size_t k = 0; k <= r; ++k) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
      if (cur.size() == k) {
        out.push_back(cur);
        return;
      }
      for (int i = start; i < static_cast<int>(r); ++i) {
        cur.push_back(i);
        rec(i + 1);
        cur.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

bool compatible(const RootDatum& d, const std::vector<int>& subset, const HalfIntVector& lambda) {
  for (int i : subset)
    if (!dot(lambda, d.simple_roots[static_cast<std::size_t>(i)]).is_zero()) return false;
  return true;
}

HalfIntVector gl_rho_check(int n) {
  std::vector<std::int64_t> t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = n - 1 - 2 * i;
  return HalfIntVector::from_twice(t);
}

}  // namespace

void check_weight(const RootDatum& d, const HalfIntVector& lambda) {
  if (lambda.size() != d.ambient_dim)
    throw InputError("weight has length " + std::to_string(lambda.size()) + ", expected " +
                     std::to_string(d.ambient_dim));
  for (const auto& a : d.simple_roots) {
    Rational x = dot(lambda, a);
    if (!x.is_integer()) throw InputError("weight " + lambda.to_string() + " has non-integral pairing with a simple root");
    if (x < Rational(0)) throw InputError("weight " + lambda.to_string() + " is not dominant");
  }
  if (!d.theta_fixed_mod_center(lambda))
    throw InputError("weight " + lambda.to_string() + " is not self-associate: iota o gamma does not fix it");
  if (d.kind == ParamKind::RealGL) (void)gl_twist(lambda);
}

CohomParameter make_cohom_parameter(std::shared_ptr<const RootDatum> datum, std::vector<int> subset,
                                    HalfIntVector lambda) {
  const RootDatum& d = *datum;
  check_weight(d, lambda);
  StandardParabolic P(d, subset);
  if (!is_self_associate(P)) throw InputError("Levi subset is not self-associate");
  if (!compatible(d, P.subset, lambda))
    throw InputError("weight pairs nontrivially with a simple root of the Levi subset");
  CohomParameter p;
  p.subset = P.subset;
  p.lambda = lambda;
  HalfIntVector rl = P.rho_check_L();
  p.chi_exponent = lambda + d.rho_check - rl;
  p.sl2_cochar = 2 * rl;
  p.datum = std::move(datum);
  if (!d.is_regular_dominant(p.chi_exponent + rl))
    throw MathCheckError("infinitesimal character is not regular dominant");
  return p;
}

InfinitesimalCharacter inf_char_gl(const GLParameter& p) {
  std::vector<HalfInt> ex = gl_exponents(p, true);
  std::sort(ex.begin(), ex.end(), std::greater<>());
  InfinitesimalCharacter ic;
  ic.orbit_rep = HalfIntVector(ex);
  ic.regular = std::adjacent_find(ex.begin(), ex.end()) == ex.end();
  ic.integral = (ic.orbit_rep - gl_rho_check(p.dim())).is_integral();
  return ic;
}

InfinitesimalCharacter inf_char_abstract(const CohomParameter& p) {
  const RootDatum& d = *p.datum;
  InfinitesimalCharacter ic;
  ic.orbit_rep = d.dominant_representative(p.lambda + d.rho_check).first;
  ic.integral = d.in_cocharacter_lattice(ic.orbit_rep - d.rho_check);
  ic.regular = d.is_regular_dominant(ic.orbit_rep);
  return ic;
}

std::vector<CohomParameter> enumerate_cohomological(const RootDatum& d, const HalfIntVector& lambda) {
  check_weight(d, lambda);
  auto ptr = std::make_shared<const RootDatum>(d);
  std::vector<CohomParameter> out;
  for (const auto& s : subsets_by_size(d.rank())) {
    if (!is_self_associate(StandardParabolic(d, s)) || !compatible(d, s, lambda)) continue;
    out.push_back(make_cohom_parameter(ptr, s, lambda));
  }
  return out;
}

HalfInt gl_twist(const HalfIntVector& lambda) {
  std::size_t n = lambda.size();
  if (n == 0) return HalfInt(0);
  HalfInt c = lambda[0] + lambda[n - 1];
  for (std::size_t i = 0; i < n; ++i)
    if (lambda[i] + lambda[n - 1 - i] != c)
      throw InputError("weight " + lambda.to_string() + " is not self-associate: lambda_i + lambda_{n+1-i} varies");
  if (!c.is_integer()) throw InputError("twist of weight " + lambda.to_string() + " is not half-integral");
  return HalfInt::from_twice(c.to_integer());
}

// ----------------------------------------------------------------- conversion

namespace {

// SL2 strings of each C^x-exponent, largest string first.
std::map<HalfInt, std::vector<int>, std::greater<>> strings(const CohomParameter& p,
                                                            const std::vector<HalfIntVector>& weights,
                                                            HalfInt shift) {
  std::map<HalfInt, std::multiset<int, std::greater<>>, std::greater<>> lines;
  for (const auto& mu : weights) {
    HalfInt e = HalfInt::from_rational(dot(p.chi_exponent, mu)) - shift;
    Rational h = dot(p.sl2_cochar, mu);
    if (!h.is_integer()) throw MathCheckError("SL2 weight is not integral");
    lines[e].insert(static_cast<int>(h.num()));
  }
  std::map<HalfInt, std::vector<int>, std::greater<>> out;
  for (auto& [e, hs] : lines) {
    auto& v = out[e];
    while (!hs.empty()) {
      int top = *hs.begin();
      if (top < 0) throw MathCheckError("SL2 weights do not form strings");
      for (int h = top; h >= -top; h -= 2) {
        auto it = hs.find(h);
        if (it == hs.end()) throw MathCheckError("SL2 weights do not form strings");
        hs.erase(it);
      }
      v.push_back(top + 1);
    }
  }
  return out;
}

int det_of(const std::vector<Atom>& atoms) {
  int det = 0;
  for (const auto& a : atoms) det += a.is_quad() ? a.eps * a.a : (a.d % 2 == 0 ? a.m : 0);
  return det % 2;
}

}  // namespace

GLParameter cohom_to_gl_parameter(const CohomParameter& p) {
  const RootDatum& d = *p.datum;
  if (d.kind == ParamKind::Complex) throw InputError("complex-group parameters convert to ComplexParameter");
  HalfInt b = d.kind == ParamKind::RealGL ? gl_twist(p.lambda) : HalfInt(0);
  auto st = strings(p, d.standard_weights(), b);
  std::vector<Atom> atoms;
  std::vector<int> middle;
  for (const auto& [e, ms] : st) {
    if (e > HalfInt(0)) {
      auto neg = st.find(-e);
      if (neg == st.end() || neg->second != ms)
        throw MathCheckError("exponent " + e.to_string() + " has no matching negative");
      for (int m : ms) atoms.push_back(Atom::two_dim(static_cast<int>(e.twice()), m));
    } else if (e == HalfInt(0)) {
      middle = ms;
    }
  }
  std::sort(middle.begin(), middle.end(), std::greater<>());
  std::vector<Atom> quads;
  for (int a : middle) quads.push_back(Atom::quad(0, a));
  bool orbit = !quads.empty();
  if (!quads.empty() && (d.kind == ParamKind::OrthogonalOdd || d.kind == ParamKind::OrthogonalEven)) {
    int target = d.kind == ParamKind::OrthogonalEven && d.disc_nontrivial ? 1 : 0;
    std::vector<Atom> all = atoms;
    all.insert(all.end(), quads.begin(), quads.end());
    if (det_of(all) != target) {
      Atom& last = quads.back();
      if (last.a % 2 == 0) throw MathCheckError("determinant cannot be corrected by an even Quad atom");
      last.eps = 1;
    }
    orbit = d.kind == ParamKind::OrthogonalEven;
  }
  atoms.insert(atoms.end(), quads.begin(), quads.end());
  return GLParameter(std::move(atoms), b, orbit);
}

ComplexParameter cohom_to_complex_parameter(const CohomParameter& p) {
  const RootDatum& d = *p.datum;
  if (d.kind != ParamKind::Complex) throw InputError("datum does not carry complex parameters");
  std::vector<ComplexAtom> atoms;
  for (const auto& [e, ms] : strings(p, d.standard_weights(), HalfInt(0)))
    for (int m : ms) atoms.push_back({e, m});
  return ComplexParameter(std::move(atoms));
}

std::variant<GLParameter, ComplexParameter> cohom_to_gl_atoms(const CohomParameter& p) {
  if (p.datum->kind == ParamKind::Complex) return cohom_to_complex_parameter(p);
  return cohom_to_gl_parameter(p);
}

// ------------------------------------------------------------ GL brute force

std::vector<GLParameter> enumerate_gl_real(int n, const HalfIntVector& lambda) {
  if (n < 1 || lambda.size() != static_cast<std::size_t>(n))
    throw InputError("weight must have length " + std::to_string(n));
  for (int i = 0; i + 1 < n; ++i) {
    HalfInt gap = lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(i + 1)];
    if (!gap.is_integer() || gap < HalfInt(0)) throw InputError("weight " + lambda.to_string() + " is not dominant");
  }
  HalfInt b = gl_twist(lambda);
  // Target exponents, doubled, after removing the twist.
  std::set<std::int64_t> target;
  for (int i = 0; i < n; ++i)
    target.insert(2 * lambda[static_cast<std::size_t>(i)].twice() / 2 + (n - 1 - 2 * i) - 2 * b.twice() / 2);
  std::vector<std::int64_t> positive;
  for (auto t : target)
    if (t > 0) positive.push_back(t);
  bool has_zero = target.count(0) > 0;

  std::vector<int> quad_sizes;
  if (!has_zero) quad_sizes.push_back(0);
  for (int a = has_zero ? 1 : 2; a <= n; a += 2) {
    bool ok = true;
    for (int t = -(a - 1); t <= a - 1; t += 2) ok = ok && target.count(t) > 0;
    if (!ok) break;
    quad_sizes.push_back(a);
  }

  std::vector<GLParameter> found;
  for (int a : quad_sizes) {
    std::vector<std::int64_t> rest;
    for (auto t : positive)
      if (t > a - 1) rest.push_back(t);
    // Split rest (ascending) into runs of consecutive exponents.
    std::vector<Atom> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (start == rest.size()) {
        std::vector<Atom> atoms = cur;
        if (a > 0) atoms.push_back(Atom::quad(0, a));
        found.emplace_back(std::move(atoms), b, a > 0);
        return;
      }
      for (std::size_t end = start; end < rest.size(); ++end) {
        if (end > start && rest[end] != rest[end - 1] + 2) break;
        int m = static_cast<int>(end - start + 1);
        int d = static_cast<int>((rest[start] + rest[end]) / 2);
        cur.push_back(Atom::two_dim(d, m));
        rec(end + 1);
        cur.pop_back();
      }
    };
    rec(0);
  }
  std::sort(found.begin(), found.end(),
            [](const GLParameter& x, const GLParameter& y) { return x.to_string() < y.to_string(); });

  RootDatum d = build_classical_dual(GroupDescriptor{GroupFamily::GLR, n, 0});
  std::set<std::string> via_levi, brute;
  for (const auto& p : enumerate_cohomological(d, lambda))
    via_levi.insert(cohom_to_gl_parameter(p).orbit_normalized().to_string());
  for (const auto& p : found) {
    p.validate_cohomological();
    brute.insert(p.orbit_normalized().to_string());
  }
  if (via_levi != brute || brute.size() != found.size())
    throw MathCheckError("GL(" + std::to_string(n) + ",R) brute force disagrees with the Levi enumeration");
  return found;
}

HalfIntVector speh_coefficient_weight(int d, int m) {
  if (m < 1 || d < m) throw InputError("Speh weight needs d >= m >= 1");
  std::vector<std::int64_t> t(static_cast<std::size_t>(2 * m));
  for (int i = 0; i < m; ++i) {
    t[static_cast<std::size_t>(i)] = d - m;
    t[static_cast<std::size_t>(m + i)] = -(d - m);
  }
  return HalfIntVector::from_twice(t);
}

GLParameter tempered_companion(const GLParameter& p) {
  std::vector<Atom> out;
  for (const auto& a : p.atoms()) {
    if (!a.is_quad()) {
      for (int k = 0; k < a.m; ++k) {
        int e = std::abs(a.d + a.m - 1 - 2 * k);
        if (e > 0) {
          out.push_back(Atom::two_dim(e, 1));
        } else {
          // sigma_0 = 1 + omega
          out.push_back(Atom::quad(0, 1));
          out.push_back(Atom::quad(1, 1));
        }
      }
    } else {
      for (int k = 0; a.a - 1 - 2 * k > 0; ++k) out.push_back(Atom::two_dim(a.a - 1 - 2 * k, 1));
      if (a.a % 2 == 1) out.push_back(Atom::quad(a.eps, 1));
    }
  }
  return GLParameter(std::move(out), p.twist(), p.orbit());
}

CohomParameter tempered_parameter(const RootDatum& d, const HalfIntVector& lambda) {
  return make_cohom_parameter(std::make_shared<const RootDatum>(d), {}, lambda);
}

// ---------------------------------------------------------------- self-duality

std::string to_string(SelfDualType t) {
  switch (t) {
    case SelfDualType::Symplectic: return "symplectic";
    case SelfDualType::Orthogonal: return "orthogonal";
    case SelfDualType::Mixed: return "mixed";
    case SelfDualType::NotSelfdual: return "not-selfdual";
  }
  return "?";
}

std::string det_string(int det) { return det % 2 == 0 ? "1" : "omega"; }

SelfDualInfo classify_selfdual(const GLParameter& p) {
  SelfDualInfo info;
  info.det = det_of(p.atoms());
  if (p.twist() != HalfInt(0)) {
    info.type = SelfDualType::NotSelfdual;
    return info;
  }
  bool orth = false, symp = false;
  for (const auto& a : p.atoms()) {
    // sigma_d is orthogonal for d even; [m] is symplectic for m even.
    bool o = a.is_quad() ? (a.a % 2 == 1) : ((a.d + a.m) % 2 == 1);
    (o ? orth : symp) = true;
  }
  info.type = orth && symp ? SelfDualType::Mixed : (symp ? SelfDualType::Symplectic : SelfDualType::Orthogonal);
  return info;
}

Route route_selfdual(const GLParameter& p) {
  SelfDualInfo info = classify_selfdual(p);
  if (info.type == SelfDualType::NotSelfdual) throw InputError(p.to_string() + " is not self-dual");
  if (info.type == SelfDualType::Mixed)
    throw MathCheckError(p.to_string() + " mixes symplectic and orthogonal summands");
  int n = p.dim();
  Route r;
  r.routed = p;
  r.det = info.det;
  if (info.type == SelfDualType::Symplectic) {
    r.family = "SO(p,q), p+q=" + std::to_string(n + 1);
    return r;
  }
  if (n % 2 == 1) {
    if (n < 3) throw InputError("no symplectic group of rank zero");
    if (info.det != 0) {
      // Twisting by omega flips the determinant since the Quad dimensions sum to an odd number.
      r.routed = p.twisted_by_omega();
      r.twisted = true;
      r.det = classify_selfdual(r.routed).det;
      if (r.det != 0) throw MathCheckError("omega twist failed to trivialize the determinant");
    }
    r.family = "Sp(" + std::to_string(n - 1) + ",R)";
    return r;
  }
  r.family = "SO(p,q), p+q=" + std::to_string(n) + ", disc=" + det_string(info.det);
  return r;
}

Dichotomy so_even_dichotomy(const GLParameter& p) {
  SelfDualInfo info = classify_selfdual(p);
  if (info.type != SelfDualType::Orthogonal || p.dim() % 2 != 0)
    throw InputError(p.to_string() + " is not an even-dimensional orthogonal parameter");
  int n = p.dim() / 2;
  Dichotomy out;
  out.det = info.det;
  if (p.quad_count() > 0) {
    out.case_number = 1;
    if (p.quad_count() != 2)
      throw MathCheckError("dichotomy violated: " + std::to_string(p.quad_count()) + " one-dimensional W_R summands");
    std::vector<Atom> rest;
    bool removed = false;
    // The smallest Quad atom sorts last.
    for (auto it = p.atoms().rbegin(); it != p.atoms().rend(); ++it) {
      if (!removed && it->is_quad() && it->a == 1) {
        removed = true;
        out.disc = it->eps;
      } else {
        rest.push_back(*it);
      }
    }
    if (!removed) throw MathCheckError("dichotomy violated: no trivial or omega summand in " + p.to_string());
    GLParameter src(rest, HalfInt(0), false);
    if (det_of(src.atoms()) != 0) src = src.twisted_by_omega();
    out.source = src.with_orbit(false);
    out.basechange_cohomological = inf_char_gl(p).regular;
    return out;
  }
  out.case_number = 2;
  for (const auto& a : p.atoms()) {
    // Textual criterion: sigma_i (x) [m_i + 1] with i + m_i even.
    bool textual = (a.d + (a.m - 1)) % 2 == 0;
    bool table = (a.d + a.m) % 2 == 1;
    if (textual != table) out.textual_parity_agrees = false;
  }
  InfinitesimalCharacter ic = inf_char_gl(p);
  out.mu = ic.orbit_rep - gl_rho_check(2 * n);
  if (info.det != n % 2) throw MathCheckError("determinant of " + p.to_string() + " is not omega^n");
  return out;
}

// ------------------------------------------------------------- complex groups

std::vector<int> compositions_blocks(int n, const std::vector<int>& subset) {
  std::vector<int> blocks;
  int size = 1;
  for (int i = 0; i + 1 < n; ++i) {
    if (std::find(subset.begin(), subset.end(), i) != subset.end()) {
      ++size;
    } else {
      blocks.push_back(size);
      size = 1;
    }
  }
  blocks.push_back(size);
  return blocks;
}

std::vector<ComplexEntry> enumerate_complex_cohomological(int n, const HalfIntVector& lambda) {
  if (n < 1) throw InputError("GL(n,C) needs n >= 1");
  RootDatum d = simple_datum(CartanType::A, n - 1, Flavor::GL);
  if (lambda.size() != d.ambient_dim) throw InputError("weight must have length " + std::to_string(n));
  if (!pairing_nonneg_integral(d, lambda)) throw InputError("weight " + lambda.to_string() + " is not dominant");
  std::vector<ComplexEntry> out;
  for (const auto& s : subsets_by_size(d.rank())) {
    if (!compatible(d, s, lambda)) continue;
    StandardParabolic P(d, s);
    HalfIntVector rl = P.rho_check_L();
    HalfIntVector chi = lambda + d.rho_check - rl;
    ComplexEntry e;
    e.subset = s;
    e.blocks = compositions_blocks(n, s);
    std::vector<ComplexAtom> atoms;
    std::size_t pos = 0;
    for (int blk : e.blocks) {
      atoms.push_back({chi[pos], blk});
      pos += static_cast<std::size_t>(blk);
    }
    e.param = ComplexParameter(std::move(atoms));
    HalfIntVector rho_l(d.ambient_dim);
    for (const auto& [r, c] : d.positive_roots(s)) rho_l += r;
    e.delta_exponent = 2 * d.rho - rho_l;
    out.push_back(std::move(e));
  }
  return out;
}

Relevance uprq_relevance(const ComplexParameter& p, int A, int B) {
  int N = p.dim();
  if (A < 0 || B < 0 || A + B != N)
    throw InputError("signature (" + std::to_string(A) + "," + std::to_string(B) + ") does not match dimension " +
                     std::to_string(N));
  for (const auto& a : p.atoms()) {
    std::int64_t parity = a.d.twice() + a.n - 1 - (N - 1);
    if (parity % 2 != 0)
      throw InputError("parity mismatch: atom (" + a.d.to_string() + ")[" + std::to_string(a.n) +
                       "] is not of parity (-1)^" + std::to_string(N - 1));
  }
  Relevance r;
  for (const auto& a : p.atoms()) r.ones += a.n == 1 ? 1 : 0;
  r.gap = A > B ? A - B : B - A;
  r.relevant = r.gap <= r.ones;
  return r;
}

// --------------------------------------------------------------- central value

bool central_value_applicable(const CohomParameter& p) {
  const RootDatum& d = *p.datum;
  if (!d.in_cocharacter_lattice(p.lambda) || !p.lambda.is_integral()) return false;
  if (d.kind == ParamKind::RealGL && !gl_twist(p.lambda).is_integer()) return false;
  return true;
}

bool verify_central_value(const GLParameter& p, const RootDatum& d) {
  if (!p.twist().is_integer()) throw InputError("central value check needs an integral twist");
  auto weights = d.standard_weights();
  if (static_cast<std::size_t>(p.dim()) != weights.size())
    throw InputError("parameter dimension does not match the standard representation");
  EpsilonElement eps(d);
  int minus_eps = 0;
  for (const auto& mu : weights) minus_eps += eps(mu) < 0 ? 1 : 0;
  int minus_par = 0;
  for (const auto& a : p.atoms()) {
    if (a.is_quad()) {
      minus_par += (a.a - 1) % 2 != 0 ? a.a : 0;
    } else {
      minus_par += (a.d + a.m - 1) % 2 != 0 ? 2 * a.m : 0;
    }
  }
  return minus_eps == minus_par;
}

bool verify_central_value(const ComplexParameter& p) {
  int N = p.dim();
  int expected = N - 1;
  for (const auto& a : p.atoms())
    if ((a.d.twice() + a.n - 1 - expected) % 2 != 0) return false;
  return true;
}

bool verify_central_value(const CohomParameter& p) {
  if (!central_value_applicable(p))
    throw InputError("central value check needs an integral weight with integral twist");
  if (p.datum->kind == ParamKind::Complex) return verify_central_value(cohom_to_complex_parameter(p));
  return verify_central_value(cohom_to_gl_parameter(p), *p.datum);
}

// ------------------------------------------------------- membership queries

std::vector<HalfInt> gl_exponents(const GLParameter& p, bool include_twist) {
  std::vector<HalfInt> ex;
  HalfInt b = include_twist ? p.twist() : HalfInt(0);
  for (const auto& a : p.atoms()) {
    if (a.is_quad()) {
      for (int k = 0; k < a.a; ++k) ex.push_back(HalfInt::from_twice(a.a - 1 - 2 * k) + b);
    } else {
      for (int k = 0; k < a.m; ++k) {
        ex.push_back(HalfInt::from_twice(a.d + a.m - 1 - 2 * k) + b);
        ex.push_back(HalfInt::from_twice(-(a.d + a.m - 1 - 2 * k)) + b);
      }
    }
  }
  return ex;
}

std::optional<HalfIntVector> weight_from_exponents(const RootDatum& d, std::vector<HalfInt> ex) {
  std::sort(ex.begin(), ex.end(), std::greater<>());
  std::size_t r = d.ambient_dim;
  HalfIntVector x(r);
  if (d.kind == ParamKind::RealGL || d.kind == ParamKind::Complex) {
    if (ex.size() != r) return std::nullopt;
    x = HalfIntVector(ex);
  } else {
    std::vector<HalfInt> neg = ex;
    for (auto& v : neg) v = -v;
    std::sort(neg.begin(), neg.end(), std::greater<>());
    if (neg != ex) return std::nullopt;
    std::size_t expected = 2 * r + (d.kind == ParamKind::OrthogonalOdd ? 1 : 0);
    if (ex.size() != expected) return std::nullopt;
    for (std::size_t i = 0; i < r; ++i) x[i] = ex[i];
  }
  HalfIntVector lambda = x - d.rho_check;
  if (!pairing_nonneg_integral(d, lambda) || !d.theta_fixed_mod_center(lambda)) return std::nullopt;
  if (d.kind == ParamKind::RealGL) {
    try {
      (void)gl_twist(lambda);
    } catch (const InputError&) {
      return std::nullopt;
    }
  }
  return lambda;
}

bool is_cohomological_for(const RootDatum& d, const GLParameter& p) {
  if (d.kind == ParamKind::Complex) throw InputError("use is_cohomological_complex for complex data");
  if (d.kind != ParamKind::RealGL && p.twist() != HalfInt(0)) return false;
  auto lambda = weight_from_exponents(d, gl_exponents(p, true));
  if (!lambda) return false;
  for (const auto& c : enumerate_cohomological(d, *lambda)) {
    GLParameter q = cohom_to_gl_parameter(c);
    if (same_parameter(q, p, q.orbit())) return true;
  }
  return false;
}

bool is_cohomological_complex(const ComplexParameter& p) {
  std::vector<HalfInt> ex;
  for (const auto& a : p.atoms())
    for (int k = 0; k < a.n; ++k) ex.push_back(a.d + HalfInt::from_twice(a.n - 1 - 2 * k));
  std::sort(ex.begin(), ex.end(), std::greater<>());
  int n = p.dim();
  HalfIntVector lambda = HalfIntVector(ex) - gl_rho_check(n);
  RootDatum d = simple_datum(CartanType::A, n - 1, Flavor::GL);
  if (!pairing_nonneg_integral(d, lambda)) return false;
  for (const auto& e : enumerate_complex_cohomological(n, lambda))
    if (e.param == p) return true;
  return false;
}

}  // namespace cohoparam
