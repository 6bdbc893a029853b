#include <doctest.h>

#include "cohoparam/errors.hpp"
#include "cohoparam/rootdata.hpp"

using namespace cohoparam;

using Matrix = std::vector<std::vector<int>>;

TEST_SUITE("rootdata") {
  TEST_CASE("cartan matrices") {
    CHECK(standard_cartan_matrix(CartanType::A, 3) == Matrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
    CHECK(standard_cartan_matrix(CartanType::B, 2) == Matrix{{2, -1}, {-2, 2}});
    CHECK(standard_cartan_matrix(CartanType::C, 2) == Matrix{{2, -2}, {-1, 2}});
    for (auto [t, r] : {std::pair{CartanType::A, 4}, {CartanType::B, 3}, {CartanType::C, 4}, {CartanType::D, 4}}) {
      Flavor f = t == CartanType::A ? Flavor::GL : (t == CartanType::C ? Flavor::Sp : Flavor::SO);
      CHECK(simple_datum(t, r, f).cartan_matrix() == standard_cartan_matrix(t, r));
    }
  }

  TEST_CASE("rho check in epsilon coordinates") {
    CHECK(simple_datum(CartanType::B, 3, Flavor::SO).rho_check == HalfIntVector::parse("3,2,1"));
    CHECK(simple_datum(CartanType::C, 3, Flavor::Sp).rho_check == HalfIntVector::parse("5/2,3/2,1/2"));
    CHECK(simple_datum(CartanType::D, 4, Flavor::SO).rho_check == HalfIntVector::parse("3,2,1,0"));
    CHECK(simple_datum(CartanType::A, 2, Flavor::GL).rho_check == HalfIntVector::parse("1,0,-1"));
  }

  TEST_CASE("rho check pairs to one with every simple root") {
    for (auto [t, r] : {std::pair{CartanType::A, 5}, {CartanType::B, 4}, {CartanType::C, 4}, {CartanType::D, 5}}) {
      Flavor f = t == CartanType::A ? Flavor::GL : (t == CartanType::C ? Flavor::Sp : Flavor::SO);
      RootDatum d = simple_datum(t, r, f);
      for (const auto& a : d.simple_roots) CHECK(dot(d.rho_check, a) == Rational(1));
    }
  }

  TEST_CASE("dual data of the supported groups") {
    CHECK(build_classical_dual(GroupDescriptor::parse("Sp(4,R)")).kind == ParamKind::OrthogonalOdd);
    CHECK(build_classical_dual(GroupDescriptor::parse("SO(2,3)")).kind == ParamKind::Symplectic);
    CHECK(build_classical_dual(GroupDescriptor::parse("SO(2,2)")).kind == ParamKind::OrthogonalEven);
    CHECK(build_classical_dual(GroupDescriptor::parse("U(2,1)")).kind == ParamKind::Complex);
    CHECK(build_classical_dual(GroupDescriptor::parse("GL(4,R)")).kind == ParamKind::RealGL);
    // (p - q)/2 odd
    CHECK(build_classical_dual(GroupDescriptor::parse("SO(3,1)")).disc_nontrivial);
    CHECK_FALSE(build_classical_dual(GroupDescriptor::parse("SO(2,2)")).disc_nontrivial);
    CHECK_THROWS_AS(GroupDescriptor::parse("E8(R)"), InputError);
  }

  TEST_CASE("self-associate subsets of A3") {
    RootDatum d = simple_datum(CartanType::A, 3, Flavor::GL);
    CHECK(is_self_associate(StandardParabolic(d, {})));
    CHECK(is_self_associate(StandardParabolic(d, {1})));
    CHECK(is_self_associate(StandardParabolic(d, {0, 2})));
    CHECK_FALSE(is_self_associate(StandardParabolic(d, {0})));
    CHECK_FALSE(is_self_associate(StandardParabolic(d, {0, 1})));
  }

  TEST_CASE("principal sl2 coefficients") {
    // A2: a = (2, 2); B2 in epsilon coordinates: H = 2 rho_check = (4, 2)
    auto a2 = principal_sl2_coefficients(StandardParabolic(simple_datum(CartanType::A, 2, Flavor::GL), {0, 1}));
    CHECK(a2.a == std::vector<Rational>{2, 2});
    CHECK(a2.residual_max.is_zero());
    RootDatum b2 = simple_datum(CartanType::B, 2, Flavor::SO);
    auto c = principal_sl2_coefficients(StandardParabolic(b2, {0, 1}));
    HalfIntVector H = HalfIntVector::zero(2);
    for (std::size_t k = 0; k < c.subset.size(); ++k) {
      const auto& co = b2.simple_coroots[static_cast<std::size_t>(c.subset[k])];
      for (std::size_t i = 0; i < 2; ++i)
        H[i] += HalfInt::from_rational(c.a[k] * co[i].to_rational());
    }
    CHECK(H == 2 * b2.rho_check);
  }

  TEST_CASE("dominant representative") {
    RootDatum d = simple_datum(CartanType::C, 3, Flavor::Sp);
    auto [v, w] = d.dominant_representative(HalfIntVector::parse("-1,3,0"));
    CHECK(v == HalfIntVector::parse("3,1,0"));
    CHECK(w.act(HalfIntVector::parse("-1,3,0")) == v);
    CHECK(d.is_dominant(v));
    CHECK_FALSE(d.is_regular_dominant(v));
  }
}
