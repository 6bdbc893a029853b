#include "cohoparam/packets.hpp"

#include <algorithm>
#include <functional>

#include "cohoparam/errors.hpp"

namespace cohoparam {

std::vector<std::vector<int>> self_associate_subsets(const RootDatum& d) {
  std::vector<std::vector<int>> out;
  std::size_t r = d.rank();
  for (std::size_t k = 0; k <= r; ++k) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
      if (cur.size() == k) {
        if (is_self_associate(StandardParabolic(d, cur))) out.push_back(cur);
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

namespace {

std::string unitary_label(const GroupDescriptor& g, const std::vector<int>& subset, const WeylElement& w) {
  int n = g.n();
  std::string label;
  std::size_t pos = 0;
  for (int blk : compositions_blocks(n, subset)) {
    int p = 0;
    for (int j = 0; j < blk; ++j) p += w.perm(pos + static_cast<std::size_t>(j)) < g.p ? 1 : 0;
    if (!label.empty()) label += "x";
    label += "U(" + std::to_string(p) + "," + std::to_string(blk - p) + ")";
    pos += static_cast<std::size_t>(blk);
  }
  return label;
}

}  // namespace

PacketDescriptor packet(const CatalogEntry& c, const std::vector<int>& subset) {
  StandardParabolic P(c.datum, subset);
  if (!is_self_associate(P)) throw InputError("Levi subset is not self-associate");
  WeylSubgroup L = intersect(levi_weyl_group(c.datum, P.subset), c.W_theta, "W_L^theta");
  PacketDescriptor out;
  out.group = c.group;
  out.k = c.k;
  out.subset = P.subset;
  std::uint64_t two_d = std::uint64_t{1} << c.d;
  for (const auto& dc : double_cosets(c.K, L, c.W_theta)) {
    PacketMember m;
    m.rep = dc.rep;
    m.coset_size = dc.size;
    if ((two_d * dc.size) % c.K.order() != 0) throw MathCheckError("double coset size not divisible by |K|");
    m.h_dim = two_d * dc.size / c.K.order();
    m.label = c.group.family == GroupFamily::U ? unitary_label(c.group, P.subset, dc.rep) : dc.rep.to_string();
    out.members.push_back(std::move(m));
  }
  return out;
}

PacketDescriptor packet(const GroupDescriptor& g, const std::vector<int>& subset, KFlavor k) {
  return packet(compact_weyl_catalog(g, k), subset);
}

PacketDescriptor packet(const GroupDescriptor& g, const CohomParameter& p, KFlavor k) {
  CatalogEntry c = compact_weyl_catalog(g, k);
  if (p.datum->simple_roots != c.datum.simple_roots)
    throw InputError("parameter is not valued in the dual group of " + g.to_string());
  return packet(c, p.subset);
}

UnitaryPacketSize packet_size_unitary(int A, int B, int m, int n) {
  if (A < 0 || B < 0 || m < 0 || n < 0 || A + B != m + n)
    throw InputError("packet_size_unitary needs A + B = m + n with all entries >= 0");
  UnitaryPacketSize out;
  for (int r = std::max(0, m - B); r <= std::min(A, m); ++r) out.r_values.push_back(r);
  out.size = out.r_values.size();
  return out;
}

WeylSubgroup symmetric_group(std::size_t N) {
  std::vector<WeylElement> gens;
  for (std::size_t i = 0; i + 1 < N; ++i) gens.push_back(WeylElement::transposition(N, i, i + 1));
  return WeylSubgroup::generated(N, gens, "S" + std::to_string(N));
}

std::size_t packet_size_unitary_brute(int A, int B, int m, int n) {
  if (A < 0 || B < 0 || A + B != m + n) throw InputError("dimension mismatch");
  return packet_size_unitary_brute(A, B, m, n, symmetric_group(static_cast<std::size_t>(A + B)));
}

std::size_t packet_size_unitary_brute(int A, int B, int m, int n, const WeylSubgroup& SN) {
  if (A < 0 || B < 0 || m < 0 || n < 0 || A + B != m + n) throw InputError("dimension mismatch");
  std::size_t N = static_cast<std::size_t>(A + B);
  if (SN.rank() != N) throw InputError("symmetric group of the wrong rank");
  auto young = [N](std::size_t split, const std::string& label) {
    std::vector<WeylElement> gens;
    for (std::size_t i = 0; i + 1 < split; ++i) gens.push_back(WeylElement::transposition(N, i, i + 1));
    for (std::size_t i = split; i + 1 < N; ++i) gens.push_back(WeylElement::transposition(N, i, i + 1));
    return WeylSubgroup::generated(N, gens, label);
  };
  return double_cosets(young(static_cast<std::size_t>(m), "S_m x S_n"), young(static_cast<std::size_t>(A), "S_A x S_B"), SN)
      .size();
}

std::size_t theta_stable_parabolic_count(const GroupDescriptor& g, const std::vector<int>& subset, KFlavor k) {
  return packet(g, subset, k).size();
}

}  // namespace cohoparam
