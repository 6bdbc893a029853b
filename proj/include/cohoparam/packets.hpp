#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cohoparam/params.hpp"
#include "cohoparam/weyl.hpp"

namespace cohoparam {

struct PacketMember {
  WeylElement rep;
  std::string label;
  std::uint64_t h_dim = 0;  // 2^d |W_L^theta| / |w W_L^theta w^-1 cap iota(W_K)|
  std::size_t coset_size = 0;
};

struct PacketDescriptor {
  GroupDescriptor group;
  KFlavor k = KFlavor::O;
  std::vector<int> subset;
  std::vector<PacketMember> members;
  std::size_t size() const { return members.size(); }
};

/// Members indexed by iota(W_K) \ W^theta / W_L^theta. The subset indexes the
/// simple roots of the dual datum and must be self-associate.
PacketDescriptor packet(const CatalogEntry& c, const std::vector<int>& subset);
PacketDescriptor packet(const GroupDescriptor& g, const std::vector<int>& subset, KFlavor k = KFlavor::O);
PacketDescriptor packet(const GroupDescriptor& g, const CohomParameter& p, KFlavor k = KFlavor::O);

struct UnitaryPacketSize {
  std::size_t size = 0;
  std::vector<int> r_values;
};

/// |[S_m x S_n] \ S_N / [S_A x S_B]| from the closed form
/// max(0, m - B) <= r <= min(A, m).
UnitaryPacketSize packet_size_unitary(int A, int B, int m, int n);

/// Same count by enumerating double cosets in S_N.
std::size_t packet_size_unitary_brute(int A, int B, int m, int n);
/// As above with S_N supplied, for sweeps over many (A, B, m, n).
std::size_t packet_size_unitary_brute(int A, int B, int m, int n, const WeylSubgroup& symmetric_group);
WeylSubgroup symmetric_group(std::size_t N);

std::size_t theta_stable_parabolic_count(const GroupDescriptor& g, const std::vector<int>& subset,
                                         KFlavor k = KFlavor::O);

/// Self-associate subsets of the datum, by size then lexicographically.
std::vector<std::vector<int>> self_associate_subsets(const RootDatum& d);

}  // namespace cohoparam
