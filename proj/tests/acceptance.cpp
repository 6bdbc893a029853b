// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cohoparam/cohomology.hpp"
#include "cohoparam/errors.hpp"
#include "cohoparam/packets.hpp"
#include "cohoparam/params.hpp"
#include "cohoparam/transfer.hpp"
#include "cohoparam/weyl.hpp"

using namespace cohoparam;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Parameters produced by the enumerators of criteria 1-3, for criterion 9.
struct CentralPool {
  std::vector<std::pair<GLParameter, RootDatum>> gl;
  std::vector<ComplexParameter> complex;
  std::vector<CohomParameter> abstract;
};
CentralPool pool;

RootDatum dual(const std::string& g) { return build_classical_dual(GroupDescriptor::parse(g)); }

std::set<std::string> text_set(const std::vector<GLParameter>& ps) {
  std::set<std::string> s;
  for (const auto& p : ps) s.insert(p.to_string());
  return s;
}

HalfIntVector zeros(int n) { return HalfIntVector::zero(static_cast<std::size_t>(n)); }

// All compositions of n, as block lists, from the cut-point bitmask.
std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> blocks;
    int size = 1;
    for (int i = 0; i + 1 < n; ++i) {
      if ((mask >> i) & 1u) {
        blocks.push_back(size);
        size = 1;
      } else {
        ++size;
      }
    }
    blocks.push_back(size);
    out.push_back(blocks);
  }
  return out;
}

bool palindromic(const std::vector<int>& v) { return std::equal(v.begin(), v.end(), v.rbegin()); }

// ------------------------------------------------------------------ 1

Outcome criterion1() {
  Outcome o;
  const std::map<int, std::set<std::string>> gl = {
      {2, {"s1[1]", "w0[2]"}},
      {3, {"s2[1]+w0[1]", "w0[3]"}},
      {4, {"s3[1]+s1[1]", "s3[1]+w0[2]", "s2[2]", "w0[4]"}},
      {5, {"w0[5]", "s4[1]+w0[3]", "s3[2]+w0[1]", "s4[1]+s2[1]+w0[1]"}},
  };
  for (const auto& [n, expected] : gl) {
    auto list = enumerate_gl_real(n, zeros(n));
    for (const auto& p : list) pool.gl.emplace_back(p, build_classical_dual({GroupFamily::GLR, n, 0}));
    if (text_set(list) != expected || list.size() != expected.size()) {
      o.ok = false;
      o.detail += " GL" + std::to_string(n);
    }
  }
  const std::set<std::string> sp4 = {"s4[1]+s2[1]+w0[1]", "s3[2]+w0[1]", "s4[1]+w1[3]", "w0[5]"};
  const std::set<std::string> so23 = {"s3[1]+s1[1]", "s2[2]", "s3[1]+w0[2]", "w0[4]"};
  auto check_group = [&](const std::string& g, const std::set<std::string>& expected, int route_from,
                         const std::string& family) {
    RootDatum d = dual(g);
    std::vector<GLParameter> direct;
    for (const auto& p : enumerate_cohomological(d, zeros(static_cast<int>(d.ambient_dim)))) {
      direct.push_back(cohom_to_gl_parameter(p));
      pool.abstract.push_back(p);
    }
    std::vector<GLParameter> routed;
    for (const auto& p : enumerate_gl_real(route_from, zeros(route_from))) {
      Route r = route_selfdual(p);
      if (r.family != family) o.ok = false;
      routed.push_back(r.routed);
    }
    if (text_set(direct) != expected || text_set(routed) != expected) {
      o.ok = false;
      o.detail += " " + g;
    }
  };
  check_group("Sp(4,R)", sp4, 5, "Sp(4,R)");
  check_group("SO(2,3)", so23, 4, "SO(p,q), p+q=5");
  const std::set<std::string> u21 = {"(0)[3]", "(1)[1]+(0)[1]+(-1)[1]", "(1/2)[2]+(-1)[1]", "(1)[1]+(-1/2)[2]"};
  std::set<std::string> gl3c, unitary;
  for (const auto& e : enumerate_complex_cohomological(3, zeros(3))) {
    gl3c.insert(e.param.to_string());
    pool.complex.push_back(e.param);
  }
  for (const auto& p : enumerate_cohomological(dual("U(2,1)"), zeros(3))) {
    unitary.insert(cohom_to_complex_parameter(p).to_string());
    pool.abstract.push_back(p);
  }
  if (gl3c != u21 || unitary != u21) {
    o.ok = false;
    o.detail += " U(2,1)";
  }
  if (o.ok) o.detail = " GL2-GL5, Sp(4,R), SO(2,3), U(2,1)/GL(3,C) lists exact";
  return o;
}

// ------------------------------------------------------------------ 2

Outcome criterion2() {
  Outcome o;
  std::size_t checked = 0;
  for (int n = 1; n <= 10; ++n) {
    auto entries = enumerate_complex_cohomological(n, zeros(n));
    std::map<std::vector<int>, ComplexParameter> by_blocks;
    for (const auto& e : entries) {
      by_blocks[e.blocks] = e.param;
      pool.complex.push_back(e.param);
    }
    auto comps = compositions(n);
    if (entries.size() != comps.size() || comps.size() != (std::size_t{1} << (n - 1))) o.ok = false;
    for (const auto& blocks : comps) {
      auto it = by_blocks.find(blocks);
      if (it == by_blocks.end()) {
        o.ok = false;
        continue;
      }
      // d_j = (n - (2 (n_1 + ... + n_{j-1}) + n_j)) / 2
      int before = 0;
      for (std::size_t j = 0; j < blocks.size(); ++j) {
        const auto& a = it->second.atoms()[j];
        if (a.d.twice() != n - 2 * before - blocks[j] || a.n != blocks[j]) o.ok = false;
        before += blocks[j];
      }
      ++checked;
    }
    std::size_t self_conjugate = static_cast<std::size_t>(std::count_if(comps.begin(), comps.end(), palindromic));
    auto real = enumerate_cohomological(build_classical_dual({GroupFamily::GLR, n, 0}), zeros(n));
    for (const auto& p : real) pool.abstract.push_back(p);
    if (real.size() != self_conjugate) {
      o.ok = false;
      o.detail += " GL(" + std::to_string(n) + ",R) count";
    }
  }
  o.detail += " " + std::to_string(checked) + " compositions, n <= 10";
  return o;
}

// ------------------------------------------------------------------ 3

// Every multiset of atoms (twist removed) whose exponents are exactly T.
void candidates(std::multiset<std::int64_t> T, std::vector<Atom>& cur, std::optional<Atom> last, HalfInt b,
                std::vector<GLParameter>& out) {
  if (T.empty()) {
    out.emplace_back(cur, b, false);
    return;
  }
  std::int64_t top = *T.rbegin();  // doubled exponents
  std::vector<Atom> options;
  for (int m = 1; m <= static_cast<int>(T.size()); ++m) {
    // sigma_d (x) [m] with largest exponent top = d + m - 1.
    int d = static_cast<int>(top) - m + 1;
    if (d >= 1) options.push_back(Atom::two_dim(d, m));
  }
  // omega^eps [a] with largest exponent (a - 1)/2.
  if (top >= 0)
    for (int eps = 0; eps <= 1; ++eps) options.push_back(Atom::quad(eps, static_cast<int>(top) + 1));
  for (const auto& a : options) {
    if (last && canonical_less(a, *last)) continue;
    std::multiset<std::int64_t> rest = T;
    bool ok = true;
    auto take = [&](std::int64_t x) {
      auto it = rest.find(x);
      if (it == rest.end()) {
        ok = false;
      } else {
        rest.erase(it);
      }
    };
    if (a.is_quad()) {
      for (int k = 0; k < a.a && ok; ++k) take(a.a - 1 - 2 * k);
    } else {
      for (int k = 0; k < a.m && ok; ++k) {
        take(a.d + a.m - 1 - 2 * k);
        if (ok) take(-(a.d + a.m - 1 - 2 * k));
      }
    }
    if (!ok) continue;
    cur.push_back(a);
    candidates(rest, cur, a, b, out);
    cur.pop_back();
  }
}

std::vector<HalfIntVector> weight_corpus(int n) {
  std::vector<HalfIntVector> out;
  int half = n / 2;
  std::vector<int> v(static_cast<std::size_t>(half));
  std::function<void(int, int)> rec = [&](int i, int maxv) {
    if (i == half) {
      for (int c = 0; c <= (n % 2 == 0 ? 1 : 0); ++c) {
        std::vector<std::int64_t> tw(static_cast<std::size_t>(n));
        for (int j = 0; j < half; ++j) {
          tw[static_cast<std::size_t>(j)] = 2 * v[static_cast<std::size_t>(j)] + c;
          tw[static_cast<std::size_t>(n - 1 - j)] = -2 * v[static_cast<std::size_t>(j)] + c;
        }
        out.push_back(HalfIntVector::from_twice(tw));
      }
      return;
    }
    for (int x = maxv; x >= 0; --x) {
      v[static_cast<std::size_t>(i)] = x;
      rec(i + 1, x);
    }
  };
  rec(0, 2);
  return out;
}

Outcome criterion3() {
  Outcome o;
  std::size_t weights = 0, cands = 0;
  for (int n = 1; n <= 8; ++n) {
    RootDatum d = build_classical_dual({GroupFamily::GLR, n, 0});
    for (const auto& lambda : weight_corpus(n)) {
      ++weights;
      std::set<std::string> cohom;
      for (const auto& p : enumerate_cohomological(d, lambda)) {
        GLParameter q = cohom_to_gl_parameter(p);
        cohom.insert(q.orbit_normalized().to_string());
        pool.gl.emplace_back(q, d);
      }
      std::string tempered = cohom_to_gl_parameter(tempered_parameter(d, lambda)).orbit_normalized().to_string();
      HalfInt b = gl_twist(lambda);
      std::multiset<std::int64_t> T;
      for (std::size_t i = 0; i < lambda.size(); ++i)
        T.insert((lambda[i] + d.rho_check[i] - b).twice());
      std::vector<GLParameter> cand;
      std::vector<Atom> cur;
      candidates(T, cur, std::nullopt, b, cand);
      for (const auto& p : cand) {
        ++cands;
        if (inf_char_gl(p).orbit_rep != HalfIntVector(std::vector<HalfInt>(lambda.begin(), lambda.end())) + d.rho_check) {
          o.ok = false;
          o.detail += " inf-char " + p.to_string();
        }
        bool in_enum = cohom.count(p.orbit_normalized().to_string()) > 0;
        bool companion = tempered_companion(p).orbit_normalized().to_string() == tempered;
        if (in_enum != companion) {
          o.ok = false;
          o.detail += " " + p.to_string();
        }
      }
      // Every enumerated parameter must be among the candidates.
      std::set<std::string> cand_texts;
      for (const auto& p : cand) cand_texts.insert(p.orbit_normalized().to_string());
      for (const auto& t : cohom)
        if (!cand_texts.count(t)) {
          o.ok = false;
          o.detail += " missing-candidate " + t;
        }
    }
  }
  if (weights < 20) o.ok = false;
  o.detail += " " + std::to_string(weights) + " weights, " + std::to_string(cands) + " candidate parameters";
  return o;
}

// ------------------------------------------------------------------ 4

HalfIntVector gl_rho(int n) {
  std::vector<std::int64_t> t;
  for (int i = 0; i < n; ++i) t.push_back(n - 1 - 2 * i);
  return HalfIntVector::from_twice(t);
}

Outcome criterion4() {
  Outcome o;
  int checks = 0;
  for (int n = 1; n <= 6; ++n) {
    for (Embedding e : {Embedding::SpGL, Embedding::SOGL, Embedding::Diag}) {
      EmbeddingData data = embedding_data(e, n);
      check_rho_transport(data);
      HalfIntVector expected = e == Embedding::SpGL ? gl_rho(2 * n) : e == Embedding::SOGL ? gl_rho(2 * n + 1) : gl_rho(n);
      if (e == Embedding::Diag) expected = push_forward(Embedding::Diag, gl_rho(n));
      if (push_forward(e, data.source.rho_check) != expected) o.ok = false;
      ++checks;
    }
    if (n >= 2) {
      for (int disc = 0; disc <= 1; ++disc) {
        EmbeddingData data = embedding_data(Embedding::SOOddInSOEven, n, disc);
        check_rho_transport(data);
        std::vector<std::int64_t> t;
        for (int i = 0; i < n; ++i) t.push_back(2 * (n - 1 - i));
        if (push_forward(Embedding::SOOddInSOEven, data.source.rho_check) != HalfIntVector::from_twice(t)) o.ok = false;
        ++checks;
      }
    }
  }
  // Highest weights: (l_1..l_n) -> (l_1..l_n, -l_n..-l_1).
  for (const auto& lambda : {HalfIntVector{3, 1}, HalfIntVector{2, 2, 0}, HalfIntVector{5, 3, 1, 0}}) {
    std::vector<HalfInt> want(lambda.begin(), lambda.end());
    for (std::size_t i = lambda.size(); i-- > 0;) want.push_back(-lambda[i]);
    if (transfer_highest_weight(Embedding::SpGL, lambda) != HalfIntVector(want)) o.ok = false;
    ++checks;
  }
  if ((2 * push_forward(Embedding::SOGL, dual("Sp(4,R)").rho_check)).to_string() != "(4, 2, 0, -2, -4)") o.ok = false;
  o.detail = " " + std::to_string(checks) + " transports";
  return o;
}

// ------------------------------------------------------------------ 5

Outcome criterion5() {
  Outcome o;
  int cases = 0;
  for (int N = 1; N <= 8; ++N) {
    WeylSubgroup SN = symmetric_group(static_cast<std::size_t>(N));
    for (int A = 0; A <= N; ++A)
      for (int m = 0; m <= N; ++m) {
        ++cases;
        if (packet_size_unitary(A, N - A, m, N - m).size != packet_size_unitary_brute(A, N - A, m, N - m, SN)) {
          o.ok = false;
          o.detail += " (" + std::to_string(A) + "," + std::to_string(N - A) + "," + std::to_string(m) + ")";
        }
      }
  }
  o.detail += " " + std::to_string(cases) + " cases";
  return o;
}

// ------------------------------------------------------------------ 6

std::vector<GroupDescriptor> small_catalog() {
  std::vector<GroupDescriptor> out;
  for (int n = 1; n <= 6; ++n) out.push_back({GroupFamily::GLR, n, 0});
  for (int n = 1; n <= 6; ++n)
    for (int p = 0; p <= n; ++p) out.push_back({GroupFamily::U, p, n - p});
  for (int n = 1; n <= 4; ++n) out.push_back({GroupFamily::Sp, 2 * n, 0});
  for (int t = 3; t <= 9; ++t)
    for (int p = 0; p <= t; ++p) out.push_back({GroupFamily::SO, p, t - p});
  return out;
}

Outcome criterion6() {
  Outcome o;
  int quadruples = 0;
  for (const auto& g : small_catalog()) {
    std::vector<KFlavor> ks{KFlavor::O};
    if (g.family == GroupFamily::GLR && g.n() % 2 == 0) ks.push_back(KFlavor::SO);
    for (KFlavor k : ks) {
      CatalogEntry c = compact_weyl_catalog(g, k);
      if (c.W.order() > 1024) continue;
      std::uint64_t closed = (std::uint64_t{1} << c.d) * c.W_theta.order() / c.K.order();
      for (const auto& s : self_associate_subsets(c.datum)) {
        ++quadruples;
        WeylSubgroup L = intersect(levi_weyl_group(c.datum, s), c.W_theta, "L");
        std::uint64_t covered = 0, weighted = 0;
        for (const auto& dc : double_cosets(c.K, L, c.W_theta)) {
          // |K w L| = |K| |L| / |K cap w L w^-1|, counted element by element.
          WeylElement wi = dc.rep.inverse();
          std::uint64_t meet = 0;
          for (const auto& l : L.elements()) meet += c.K.contains(dc.rep * l * wi) ? 1 : 0;
          std::set<WeylElement> brute;
          for (const auto& x : c.K.elements())
            for (const auto& l : L.elements()) brute.insert(x * dc.rep * l);
          if (brute.size() != dc.size || brute.size() * meet != c.K.order() * L.order()) o.ok = false;
          covered += brute.size();
          weighted += (std::uint64_t{1} << c.d) * L.order() / meet;
        }
        if (covered != c.W_theta.order() || weighted != closed) {
          o.ok = false;
          o.detail += " " + g.to_string();
        }
      }
    }
  }
  o.detail += " " + std::to_string(quadruples) + " (group, K, L) cases";
  return o;
}

// ------------------------------------------------------------------ 7

Outcome criterion7() {
  Outcome o;
  int flagged = 0;
  for (int N = 1; N <= 10; ++N) {
    std::set<std::uint64_t> totals_o, totals_so;
    for (const auto& blocks : compositions(N)) {
      if (!palindromic(blocks)) continue;
      totals_o.insert(levi_cohomology(blocks, KFlavor::O).total());
      std::uint64_t so = levi_cohomology(blocks, KFlavor::SO).total();
      totals_so.insert(blocks.size() % 2 == 0 ? 2 * so : so);
    }
    if (N % 2 == 0) {
      if (totals_o != std::set<std::uint64_t>{std::uint64_t{1} << (N / 2)}) o.ok = false;
      if (totals_so != std::set<std::uint64_t>{std::uint64_t{1} << (N / 2 + 1)}) o.ok = false;
    } else {
      CatalogEntry c = compact_weyl_catalog({GroupFamily::GLR, N, 0});
      std::uint64_t closed = (std::uint64_t{1} << c.d) * c.W_theta.order() / c.K.order();
      if (totals_o.size() != 1 || *totals_o.begin() != closed || totals_so != totals_o) o.ok = false;
      if (closed != (std::uint64_t{1} << ((N + 1) / 2))) o.ok = false;
      if (closed != (std::uint64_t{1} << (N / 2))) ++flagged;
      if (N <= 7)
        for (const auto& s : self_associate_subsets(c.datum))
          if (packet_cohomology_sum(c, s).value != closed) o.ok = false;
    }
  }
  o.detail = " N <= 10; floor(N/2) text flagged for " + std::to_string(flagged) + " odd N";
  return o;
}

// ------------------------------------------------------------------ 8

Outcome criterion8() {
  Outcome o;
  int groups = 0;
  for (int r = 1; r <= 8; ++r) {
    for (CompactDescriptor g : {CompactDescriptor{CompactFamily::U, r}, CompactDescriptor{CompactFamily::Sp, r},
                                CompactDescriptor{CompactFamily::SO, 2 * r}, CompactDescriptor{CompactFamily::SO, 2 * r + 1}}) {
      auto f = innerform_sum_compact(g);
      std::uint64_t sum = 0;
      for (const auto& c : f.classes) {
        sum += f.weyl_order / c.stabilizer_order;
        if (c.orbit_size * c.stabilizer_order != f.weyl_order) o.ok = false;
      }
      if (sum != (std::uint64_t{1} << r)) o.ok = false;
      ++groups;
    }
  }
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t sum = 0;
    for (int p = 0; p <= n; ++p) {
      CatalogEntry c = compact_weyl_catalog({GroupFamily::U, p, n - p});
      sum += c.W_theta.order() / c.K.order();
    }
    if (sum != (std::uint64_t{1} << n)) o.ok = false;
    if (innerform_sum_quasisplit({GroupFamily::U, n, 0}).index_sum != sum) o.ok = false;
  }
  o.detail = " " + std::to_string(groups) + " compact groups, U(p,q) families n <= 8";
  return o;
}

// ------------------------------------------------------------------ 9

Outcome criterion9() {
  Outcome o;
  std::size_t checked = 0, skipped = 0;
  for (const auto& [p, d] : pool.gl) {
    if (!p.twist().is_integer()) {
      ++skipped;
      continue;
    }
    ++checked;
    if (!verify_central_value(p, d)) {
      o.ok = false;
      o.detail += " " + p.to_string();
    }
  }
  for (const auto& p : pool.complex) {
    ++checked;
    if (!verify_central_value(p)) o.ok = false;
  }
  for (const auto& p : pool.abstract) {
    if (!central_value_applicable(p)) {
      ++skipped;
      continue;
    }
    ++checked;
    if (!verify_central_value(p)) o.ok = false;
  }
  o.detail += " " + std::to_string(checked) + " checked, " + std::to_string(skipped) +
              " outside the integral-twist precondition";
  return o;
}

// ------------------------------------------------------------------ 10

Outcome criterion10() {
  Outcome o;
  std::vector<RootDatum> data;
  for (int n = 1; n <= 9; ++n) {
    data.push_back(build_classical_dual({GroupFamily::GLR, n, 0}));
    data.push_back(build_classical_dual({GroupFamily::SLR, n, 0}));
    data.push_back(build_classical_dual({GroupFamily::U, n - n / 2, n / 2}));
  }
  for (int n = 1; n <= 5; ++n) data.push_back(build_classical_dual({GroupFamily::GLC, n, 0}));
  for (int n = 1; n <= 8; ++n) {
    data.push_back(build_classical_dual({GroupFamily::Sp, 2 * n, 0}));
    data.push_back(build_classical_dual({GroupFamily::SO, n + 1, n}));
    if (n >= 2) data.push_back(build_classical_dual({GroupFamily::SO, n, n}));
  }
  std::size_t subsets = 0;
  for (const auto& d : data) {
    auto C = d.cartan_matrix();
    for (std::uint32_t mask = 0; mask < (1u << d.rank()); ++mask) {
      std::vector<int> s;
      for (std::size_t i = 0; i < d.rank(); ++i)
        if ((mask >> i) & 1u) s.push_back(static_cast<int>(i));
      StandardParabolic P(d, s);
      std::vector<int> phi = levi_opposition(P);
      Sl2Coefficients co = principal_sl2_coefficients(P, &phi);
      ++subsets;
      if (!co.residual_max.is_zero()) o.ok = false;
      // Independent residual: sum_b a_b <alpha_b check, alpha> = 2 for alpha in S.
      for (std::size_t i = 0; i < s.size(); ++i) {
        Rational lhs(0);
        for (std::size_t j = 0; j < s.size(); ++j)
          lhs += co.a[j] * Rational(C[static_cast<std::size_t>(s[j])][static_cast<std::size_t>(s[i])]);
        if (lhs != Rational(2) || !(co.a[i] > Rational(0))) o.ok = false;
        if (co.a[i] != co.a[static_cast<std::size_t>(std::find(s.begin(), s.end(), phi[static_cast<std::size_t>(s[i])]) - s.begin())])
          o.ok = false;
      }
    }
  }
  o.detail = " " + std::to_string(subsets) + " Levi subsets over " + std::to_string(data.size()) + " data";
  return o;
}

// ------------------------------------------------------------------ 11

std::string capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), k);
  status = pclose(f);
  return out;
}

Outcome criterion11() {
  Outcome o;
  std::string cmd = std::string("\"") + COHOPARAM_CLI + "\" verify --suite all --format json 2>/dev/null";
  int s1 = 0, s2 = 0;
  std::string a = capture(cmd, s1);
  std::string b = capture(cmd, s2);
  o.ok = s1 == 0 && s2 == 0 && !a.empty() && a == b;
  o.detail = " two runs of verify --suite all, " + std::to_string(a.size()) + " bytes" + (a == b ? ", identical" : ", differ");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::pair<Outcome (*)(), double>>> criteria = {
      {"golden tables", {criterion1, 1.0}},
      {"complex cascade and counts", {criterion2, 5.0}},
      {"tempered-companion equivalence", {criterion3, 30.0}},
      {"rho_check and highest-weight transport", {criterion4, 0.0}},
      {"unitary packet sizes", {criterion5, 60.0}},
      {"packet-sum double coset identity", {criterion6, 60.0}},
      {"partition independence", {criterion7, 10.0}},
      {"inner-form sums", {criterion8, 10.0}},
      {"central-value consistency", {criterion9, 0.0}},
      {"principal SL2 linear system", {criterion10, 5.0}},
      {"determinism", {criterion11, 0.0}},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [name, spec] = criteria[i];
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = spec.first();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string(" exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = spec.second <= 0.0 || secs < spec.second;
    bool pass = o.ok && in_time;
    failures += pass ? 0 : 1;
    char timing[64];
    std::snprintf(timing, sizeof timing, " [%.2fs]", secs);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << name << " -" << o.detail << timing
              << (in_time ? "" : " over time budget") << "\n";
  }
  return failures == 0 ? 0 : 1;
}
