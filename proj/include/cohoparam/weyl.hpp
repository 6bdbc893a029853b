#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cohoparam/rootdata.hpp"
#include "cohoparam/signed_perm.hpp"

namespace cohoparam {

/// Enumeration cap; COHOPARAM_MAX_WEYL overrides the default of 10^6.
std::size_t max_weyl_elements();

/// Explicitly enumerated subgroup of the signed permutations of a fixed rank.
/// Elements are kept sorted in the WeylElement order.
class WeylSubgroup {
 public:
  WeylSubgroup() = default;
  static WeylSubgroup generated(std::size_t rank, std::vector<WeylElement> gens, std::string label);
  /// Throws MathCheckError unless the set is closed under products.
  static WeylSubgroup from_elements(std::size_t rank, std::vector<WeylElement> elems, std::string label);

  std::size_t rank() const { return rank_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const std::vector<WeylElement>& generators() const { return generators_; }
  const std::string& label() const { return label_; }
  bool contains(const WeylElement& w) const;
  /// Position in the sorted element list, or -1.
  std::ptrdiff_t index_of(const WeylElement& w) const;
  bool is_subgroup_of(const WeylSubgroup& other) const;
  WeylSubgroup conjugate(const WeylElement& w, std::string label) const;

 private:
  std::size_t rank_ = 0;
  std::vector<WeylElement> elements_;
  std::vector<WeylElement> generators_;
  std::string label_;
  std::unordered_map<WeylElement, std::size_t, WeylElementHash> index_;

  void build_index();
};

WeylSubgroup intersect(const WeylSubgroup& a, const WeylSubgroup& b, std::string label);

/// |W| from the Cartan types alone.
std::uint64_t weyl_group_order(const RootDatum& d);
WeylSubgroup full_weyl_group(const RootDatum& d);
WeylSubgroup levi_weyl_group(const RootDatum& d, const std::vector<int>& subset);
WeylElement longest_element(const RootDatum& d);

/// Elements commuting with g (the involution acting on W by conjugation).
WeylSubgroup theta_fixed_subgroup(const WeylSubgroup& group, const WeylElement& g, std::string label);

struct DoubleCoset {
  WeylElement rep;
  std::size_t size = 0;
};

/// K \ ambient / L, each representative minimal in its double coset.
std::vector<DoubleCoset> double_cosets(const WeylSubgroup& K, const WeylSubgroup& L,
                                       const WeylSubgroup& ambient);

enum class KFlavor { O, SO };

struct CatalogEntry {
  GroupDescriptor group;
  KFlavor k = KFlavor::O;
  RootDatum datum;      // dual datum; Levi subsets index its simple roots
  WeylSubgroup W;
  WeylElement theta;    // W^theta is its centralizer
  WeylSubgroup W_theta;
  WeylSubgroup K;       // iota(W_K)
  int d = 0;
  int a = 0, b = 0, e = 0;
};

CatalogEntry compact_weyl_catalog(const GroupDescriptor& g, KFlavor k = KFlavor::O);

}  // namespace cohoparam
