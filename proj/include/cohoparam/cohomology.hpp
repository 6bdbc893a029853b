#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cohoparam/packets.hpp"
#include "cohoparam/rootdata.hpp"
#include "cohoparam/weyl.hpp"

namespace cohoparam {

class PoincarePolynomial {
 public:
  PoincarePolynomial() : coeffs_{1} {}
  explicit PoincarePolynomial(std::vector<std::uint64_t> coeffs);
  /// Exterior algebra on generators of the given degrees.
  static PoincarePolynomial exterior(const std::vector<int>& degrees);

  const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::uint64_t total() const;
  bool palindromic() const;

  friend PoincarePolynomial operator*(const PoincarePolynomial& a, const PoincarePolynomial& b);
  friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;

  /// "1+2t+t^2".
  std::string to_string() const;

 private:
  std::vector<std::uint64_t> coeffs_;
};

enum class SpaceTag { U, U_SO, U_O, U_Sp };
std::string to_string(SpaceTag t);
SpaceTag parse_space_tag(std::string_view text);

/// Cohomology of U_N, U_N/SO_N, U_N/O_N or U_N/Sp_N; N is the matrix size.
PoincarePolynomial symmetric_space_poincare(SpaceTag tag, int N);

/// Product over a self-dual ordered partition (n_k, ..., n_1, n_0, n_1, ..., n_k):
/// one U_{n_i} factor per pair and U_{n_0}/O or U_{n_0}/SO for the middle part.
PoincarePolynomial levi_cohomology(const std::vector<int>& partition, KFlavor k);

struct PacketSum {
  std::uint64_t value = 0;
  std::uint64_t double_coset_sum = 0;  // sum of member h_dim
  std::uint64_t closed_form = 0;       // 2^d |W^theta / iota(W_K)|
  std::optional<std::uint64_t> levi_sum;    // sum of member Levi cohomology totals
  std::optional<std::uint64_t> gl_formula;  // 2^{ceil(N/2)} or 2^{N/2 + [K = SO]}
  std::optional<std::uint64_t> floor_text;  // 2^{floor(N/2)}, odd N only
  bool floor_text_discrepancy = false;
  std::size_t packet_size = 0;
};

/// Computes the packet cohomology total several ways; throws MathCheckError
/// on any disagreement.
PacketSum packet_cohomology_sum(const CatalogEntry& c, const std::vector<int>& subset);
PacketSum packet_cohomology_sum(const GroupDescriptor& g, const std::vector<int>& subset, KFlavor k = KFlavor::O);

struct PureInnerFormClass {
  std::vector<int> rep;  // entries +-1
  std::uint64_t orbit_size = 0;
  std::uint64_t stabilizer_order = 0;
  std::string label;
};

struct CompactInnerForms {
  CompactDescriptor group;
  std::uint64_t weyl_order = 0;
  std::vector<PureInnerFormClass> classes;
  std::uint64_t sum = 0;  // sum of |W| / |W_{K_c}|
};

/// Orbits of W on T[2] = {+-1}^r. Throws MathCheckError unless the indices
/// sum to 2^r and orbit x stabilizer = |W| for every class.
CompactInnerForms innerform_sum_compact(const CompactDescriptor& g);

struct InnerFormTerm {
  std::string form;
  std::uint64_t index = 0;  // |W^theta / iota(W_K)|
  std::uint64_t betti = 0;  // 2^d times the index
};

struct QuasiSplitInnerForms {
  std::string family;
  int a = 0, b = 0, e = 0;
  std::vector<InnerFormTerm> terms;
  std::uint64_t index_sum = 0;
  std::uint64_t betti_sum = 0;
};

/// Sums over the pure inner forms of the family of g that the catalog lists.
/// Throws UnsupportedError when the catalog covers only part of the family.
QuasiSplitInnerForms innerform_sum_quasisplit(const GroupDescriptor& g);

}  // namespace cohoparam
