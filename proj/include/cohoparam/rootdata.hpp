#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cohoparam/halfint.hpp"
#include "cohoparam/signed_perm.hpp"

namespace cohoparam {

enum class CartanType { A, B, C, D, Torus };
enum class Flavor { GL, SL, Adjoint, SO, Sp };

std::string to_string(CartanType t);
std::string to_string(Flavor f);

// One simple (or torus) factor of a product datum. Coordinates
// [offset, offset + dim) of the ambient lattice belong to it, as do the
// simple roots [root_offset, root_offset + rank).
struct Factor {
  CartanType type;
  int rank;
  Flavor flavor;
  std::size_t offset = 0;
  std::size_t dim = 0;
  std::size_t root_offset = 0;
};

enum class GroupFamily { GLR, GLC, SLR, U, Sp, SO };

// A real group from the supported list. For GL/SL/GLC, p holds n and q = 0;
// for Sp(2n,R), p holds 2n.
struct GroupDescriptor {
  GroupFamily family;
  int p = 0;
  int q = 0;

  static GroupDescriptor parse(std::string_view text);
  std::string to_string() const;
  int n() const { return p + q; }
  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

enum class CompactFamily { U, Sp, SO };

// Compact group U(n), Sp(n) (quaternionic, rank n) or SO(n).
struct CompactDescriptor {
  CompactFamily family;
  int n = 0;

  static CompactDescriptor parse(std::string_view text);
  std::string to_string() const;
  int rank() const;
};

// How the standard representation of the dual group reads a parameter.
enum class ParamKind {
  RealGL,          // GL(n,C)-valued, W_R-parameter; twist allowed
  Complex,         // W_C-parameter: U(p,q) base change, GL(n,C)
  OrthogonalOdd,   // SO(2n+1,C)
  Symplectic,      // Sp(2n,C)
  OrthogonalEven,  // SO(2n,C)
};

class RootDatum {
 public:
  std::string name;
  std::vector<Factor> factors;
  std::size_t ambient_dim = 0;
  std::vector<HalfIntVector> simple_roots;
  std::vector<HalfIntVector> simple_coroots;
  HalfIntVector rho;
  HalfIntVector rho_check;
  // Index permutations of the simple roots and the lattice maps realizing them.
  std::vector<int> gamma;
  std::vector<int> iota;
  WeylElement gamma_map;
  WeylElement iota_map;
  ParamKind kind = ParamKind::RealGL;
  bool disc_nontrivial = false;
  std::optional<GroupDescriptor> source;

  std::size_t rank() const { return simple_roots.size(); }
  std::vector<int> theta() const;
  WeylElement theta_map() const;

  Rational pairing(const HalfIntVector& cochar, const HalfIntVector& chr) const {
    return dot(cochar, chr);
  }
  /// C[i][j] = <alpha_i check, alpha_j>.
  std::vector<std::vector<int>> cartan_matrix() const;
  WeylElement simple_reflection(std::size_t i) const;
  /// Reflection in an arbitrary root with the given coroot.
  WeylElement reflection(const HalfIntVector& root, const HalfIntVector& coroot) const;
  /// Every root of the subsystem spanned by the given simple roots, with its
  /// coroot, positive roots only.
  std::vector<std::pair<HalfIntVector, HalfIntVector>> positive_roots(
      const std::vector<int>& subset) const;
  std::vector<std::pair<HalfIntVector, HalfIntVector>> positive_roots() const;

  bool is_dominant(const HalfIntVector& v) const;
  bool is_regular_dominant(const HalfIntVector& v) const;
  /// Weyl-conjugate of v in the closed dominant chamber, with the element used.
  std::pair<HalfIntVector, WeylElement> dominant_representative(const HalfIntVector& v) const;
  bool in_cocharacter_lattice(const HalfIntVector& v) const;
  std::vector<HalfIntVector> character_lattice_basis() const;
  /// v - theta(v) lies in the span of the central directions of GL-type factors.
  bool theta_fixed_mod_center(const HalfIntVector& v) const;
  /// Weights of the standard representation read by parameters.
  std::vector<HalfIntVector> standard_weights() const;
};

std::vector<std::vector<int>> standard_cartan_matrix(CartanType t, int rank);

// Single-factor datum; the ambient lattice is Z^n (n+1 for type A_n).
RootDatum simple_datum(CartanType t, int rank, Flavor f);
RootDatum product(const RootDatum& a, const RootDatum& b);
/// Installs gamma as the given lattice map, deriving the index permutation;
/// throws if the map does not permute the simple roots.
void set_galois(RootDatum& d, const WeylElement& gamma_map);

struct BuildOptions {
  bool triality_sensitive = false;
};

RootDatum build_classical_dual(const GroupDescriptor& g, const BuildOptions& opts = {});

std::vector<int> opposition_involution(const RootDatum& d);

struct StandardParabolic {
  const RootDatum* datum = nullptr;
  std::vector<int> subset;

  StandardParabolic(const RootDatum& d, std::vector<int> s);
  HalfIntVector rho_check_L() const;
  HalfIntVector two_rho_check_L() const { return 2 * rho_check_L(); }
};

bool is_self_associate(const StandardParabolic& p);

struct Sl2Coefficients {
  std::vector<int> subset;
  std::vector<Rational> a;  // a[k] belongs to subset[k]
  std::vector<Rational> t;  // t[k] * t[phi(k)] = a[k]; fixed nodes record a itself
  Rational residual_max;    // largest |residual| of the defining system
};

/// Solves sum_b a_b <alpha, H_b> = 2 over the Levi subset. When phi is
/// supplied (an index permutation of all simple roots preserving the subset)
/// a_alpha = a_phi(alpha) is verified.
Sl2Coefficients principal_sl2_coefficients(const StandardParabolic& p,
                                           const std::vector<int>* phi = nullptr);

/// Opposition involution of the Levi subsystem itself, as an index map on
/// all simple roots (identity outside the subset).
std::vector<int> levi_opposition(const StandardParabolic& p);

class EpsilonElement {
 public:
  explicit EpsilonElement(const RootDatum& d);
  /// (-1)^{<2 rho_check, mu>}.
  int operator()(const HalfIntVector& mu) const;
  bool trivial() const { return trivial_; }
  const HalfIntVector& two_rho_check() const { return two_rho_check_; }

 private:
  HalfIntVector two_rho_check_;
  bool trivial_ = true;
};

EpsilonElement epsilon_element(const RootDatum& d);

}  // namespace cohoparam
