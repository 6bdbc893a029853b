#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cohoparam/halfint.hpp"
#include "cohoparam/rootdata.hpp"

namespace cohoparam {

// sigma_d (x) [m]  or  omega^eps (x) [a].
struct Atom {
  enum class Kind { TwoDim, Quad };
  Kind kind = Kind::TwoDim;
  int d = 0;
  int m = 0;
  int eps = 0;
  int a = 0;

  static Atom two_dim(int d, int m) { return {Kind::TwoDim, d, m, 0, 0}; }
  static Atom quad(int eps, int a) { return {Kind::Quad, 0, 0, eps, a}; }
  bool is_quad() const { return kind == Kind::Quad; }
  int dim() const { return is_quad() ? a : 2 * m; }
  std::string to_string() const;
  static Atom parse(std::string_view text);
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Canonical order: TwoDim before Quad; d then m descending; a descending.
bool canonical_less(const Atom& x, const Atom& y);

class GLParameter {
 public:
  GLParameter() = default;
  /// Sorts into canonical order. Repeated d values are allowed here; see
  /// validate_cohomological().
  explicit GLParameter(std::vector<Atom> atoms, HalfInt twist = 0, bool orbit = false);

  const std::vector<Atom>& atoms() const { return atoms_; }
  HalfInt twist() const { return twist_; }
  /// Stands for the pair {p, p (x) omega} when a Quad atom is present.
  bool orbit() const { return orbit_; }
  int dim() const;
  int quad_count() const;

  /// Throws InputError unless the d values are distinct and at most one
  /// Quad atom occurs.
  void validate_cohomological() const;

  GLParameter twisted_by_omega() const;
  /// Orbit representative with the first Quad atom at eps = 0.
  GLParameter orbit_normalized() const;
  GLParameter with_orbit(bool orbit) const;

  /// "s3[1]+w0[2]", with "*nu^b" appended for a nonzero twist.
  std::string to_string() const;
  static GLParameter parse(std::string_view text);

  friend bool operator==(const GLParameter&, const GLParameter&) = default;

 private:
  std::vector<Atom> atoms_;
  HalfInt twist_;
  bool orbit_ = false;
};

/// Equality of atoms and twist, optionally modulo the omega twist.
bool same_parameter(const GLParameter& x, const GLParameter& y, bool modulo_omega);

struct ComplexAtom {
  HalfInt d;
  int n = 1;
  friend bool operator==(const ComplexAtom&, const ComplexAtom&) = default;
};

class ComplexParameter {
 public:
  ComplexParameter() = default;
  /// Sorts by d descending, then n descending.
  explicit ComplexParameter(std::vector<ComplexAtom> atoms);

  const std::vector<ComplexAtom>& atoms() const { return atoms_; }
  int dim() const;
  bool strictly_decreasing() const;
  /// Multiset {(d,n)} equals {(-d,n)}.
  bool selfdual() const;
  ComplexParameter conjugate() const;
  std::string to_string() const;
  static ComplexParameter parse(std::string_view text);

  friend bool operator==(const ComplexParameter&, const ComplexParameter&) = default;

 private:
  std::vector<ComplexAtom> atoms_;
};

struct CohomParameter {
  std::shared_ptr<const RootDatum> datum;
  std::vector<int> subset;
  HalfIntVector lambda;
  HalfIntVector chi_exponent;  // lambda + rho_check - rho_check_L
  HalfIntVector sl2_cochar;    // 2 rho_check_L
};

/// Validates every defining condition; throws InputError naming the first
/// one violated.
CohomParameter make_cohom_parameter(std::shared_ptr<const RootDatum> datum, std::vector<int> subset,
                                    HalfIntVector lambda);

struct InfinitesimalCharacter {
  HalfIntVector orbit_rep;
  bool integral = false;
  bool regular = false;
  friend bool operator==(const InfinitesimalCharacter& a, const InfinitesimalCharacter& b) {
    return a.orbit_rep == b.orbit_rep;
  }
};

/// Multiset of exponents of p, sorted decreasing, read against GL(dim).
InfinitesimalCharacter inf_char_gl(const GLParameter& p);
InfinitesimalCharacter inf_char_abstract(const CohomParameter& p);

/// Checks that lambda is a usable coefficient weight for the datum: right
/// length, dominant with integral simple pairings, fixed by iota o gamma up to
/// the center.
void check_weight(const RootDatum& d, const HalfIntVector& lambda);

/// One parameter per self-associate Levi subset compatible with lambda,
/// subsets ordered by size then lexicographically.
std::vector<CohomParameter> enumerate_cohomological(const RootDatum& d, const HalfIntVector& lambda);

GLParameter cohom_to_gl_parameter(const CohomParameter& p);
ComplexParameter cohom_to_complex_parameter(const CohomParameter& p);
std::variant<GLParameter, ComplexParameter> cohom_to_gl_atoms(const CohomParameter& p);

/// Global twist b of a GL-type parameter: (lambda_i + lambda_{n+1-i}) / 2.
HalfInt gl_twist(const HalfIntVector& lambda);

/// Brute-force search over atom decompositions of the target exponent set,
/// cross-checked against the Levi-subset enumeration.
std::vector<GLParameter> enumerate_gl_real(int n, const HalfIntVector& lambda);

HalfIntVector speh_coefficient_weight(int d, int m);
GLParameter tempered_companion(const GLParameter& p);
CohomParameter tempered_parameter(const RootDatum& d, const HalfIntVector& lambda);

enum class SelfDualType { Symplectic, Orthogonal, Mixed, NotSelfdual };
std::string to_string(SelfDualType t);

struct SelfDualInfo {
  SelfDualType type = SelfDualType::NotSelfdual;
  int det = 0;  // exponent of omega_R
};

SelfDualInfo classify_selfdual(const GLParameter& p);
std::string det_string(int det);

struct Route {
  std::string family;   // "Sp(4,R)", "SO(p,q), p+q=5", ...
  GLParameter routed;   // twisted by omega when the determinant needed it
  bool twisted = false;
  int det = 0;
};

Route route_selfdual(const GLParameter& p);

struct Dichotomy {
  int case_number = 0;
  // Case 1
  std::optional<GLParameter> source;  // SO(2n-1)-valued preimage
  int disc = 0;
  bool basechange_cohomological = false;
  // Case 2
  std::optional<HalfIntVector> mu;
  int det = 0;
  bool textual_parity_agrees = true;
};

Dichotomy so_even_dichotomy(const GLParameter& p);

struct ComplexEntry {
  std::vector<int> subset;
  std::vector<int> blocks;
  ComplexParameter param;
  HalfIntVector delta_exponent;  // 2(rho - rho_L)
};

/// Every standard parabolic of GL(n) whose Levi roots pair to zero with
/// lambda; d_i is the block average of lambda + rho_check.
std::vector<ComplexEntry> enumerate_complex_cohomological(int n, const HalfIntVector& lambda);

struct Relevance {
  bool relevant = false;
  int ones = 0;
  int gap = 0;
};

Relevance uprq_relevance(const ComplexParameter& p, int A, int B);

/// Sign multiset comparison at (-1,-1); requires integral lambda and an
/// integral twist.
bool verify_central_value(const CohomParameter& p);
bool verify_central_value(const GLParameter& p, const RootDatum& d);
bool verify_central_value(const ComplexParameter& p);
bool central_value_applicable(const CohomParameter& p);

/// Composition of the A-type Levi subset (block sizes in order).
std::vector<int> compositions_blocks(int n, const std::vector<int>& subset);

/// Largest dominant lambda with lambda + rho_check matching the exponent
/// multiset of the standard representation, or nullopt when irregular or
/// non-integral.
std::optional<HalfIntVector> weight_from_exponents(const RootDatum& d, std::vector<HalfInt> exponents);

/// Exponent multiset of p in the standard representation.
std::vector<HalfInt> gl_exponents(const GLParameter& p, bool include_twist);

/// p lies in the cohomological enumeration of the datum at its own
/// infinitesimal character.
bool is_cohomological_for(const RootDatum& d, const GLParameter& p);
bool is_cohomological_complex(const ComplexParameter& p);

}  // namespace cohoparam
