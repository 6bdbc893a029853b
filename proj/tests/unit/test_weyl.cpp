#include <doctest.h>

#include <set>

#include "cohoparam/errors.hpp"
#include "cohoparam/rootdata.hpp"
#include "cohoparam/weyl.hpp"

using namespace cohoparam;

namespace {

std::uint64_t fact(int n) { return n <= 1 ? 1 : static_cast<std::uint64_t>(n) * fact(n - 1); }

}  // namespace

TEST_SUITE("weyl") {
  TEST_CASE("signed permutation basics") {
    WeylElement w = WeylElement::from_images({2, -1, 3});
    CHECK(w.to_string() == "[2,-1,3]");
    CHECK((w * w.inverse()).is_identity());
    HalfIntVector v = HalfIntVector::parse("1,2,3");
    CHECK(w.act(v) == HalfIntVector::parse("-2,1,3"));
    CHECK((w * w).act(v) == w.act(w.act(v)));
    CHECK(w.sign_product() == -1);
    CHECK_FALSE(w.is_unsigned());
  }

  TEST_CASE("group orders against closed formulas") {
    for (int n = 1; n <= 4; ++n) {
      CHECK(full_weyl_group(simple_datum(CartanType::A, n, Flavor::GL)).order() == fact(n + 1));
      CHECK(full_weyl_group(simple_datum(CartanType::B, n, Flavor::SO)).order() == (fact(n) << n));
      CHECK(full_weyl_group(simple_datum(CartanType::C, n, Flavor::Sp)).order() == (fact(n) << n));
      if (n >= 2) CHECK(full_weyl_group(simple_datum(CartanType::D, n, Flavor::SO)).order() == (fact(n) << (n - 1)));
    }
    CHECK(weyl_group_order(simple_datum(CartanType::D, 5, Flavor::SO)) == 1920);
  }

  TEST_CASE("closure and membership") {
    auto W = full_weyl_group(simple_datum(CartanType::B, 3, Flavor::SO));
    std::set<WeylElement> all(W.elements().begin(), W.elements().end());
    CHECK(all.size() == W.order());
    for (const auto& a : W.elements()) {
      CHECK(W.contains(a.inverse()));
      CHECK(W.index_of(a) >= 0);
    }
    CHECK(std::is_sorted(W.elements().begin(), W.elements().end()));
    CHECK_THROWS_AS(WeylSubgroup::from_elements(2, {WeylElement::identity(2), WeylElement::from_images({-1, 2}),
                                                    WeylElement::from_images({2, 1})},
                                                "not closed"),
                    MathCheckError);
  }

  TEST_CASE("double cosets partition the ambient group") {
    RootDatum d = simple_datum(CartanType::A, 3, Flavor::GL);
    auto W = full_weyl_group(d);
    auto K = levi_weyl_group(d, {0});
    auto L = levi_weyl_group(d, {1, 2});
    auto dcs = double_cosets(K, L, W);
    std::size_t total = 0;
    for (const auto& dc : dcs) total += dc.size;
    CHECK(total == W.order());
    // S4 / (S1 x S3) is the 4 positions of e_1; swapping the first two leaves 3 orbits
    CHECK(dcs.size() == 3);
  }

  TEST_CASE("longest element") {
    RootDatum d = simple_datum(CartanType::C, 3, Flavor::Sp);
    CHECK(longest_element(d) == WeylElement::minus_identity(3));
    RootDatum a = simple_datum(CartanType::A, 2, Flavor::GL);
    CHECK(longest_element(a).act(a.rho) == -a.rho);
  }

  TEST_CASE("catalog data") {
    auto c = compact_weyl_catalog(GroupDescriptor::parse("U(2,1)"));
    CHECK(c.W.order() == 6);
    CHECK(c.K.order() == 2);
    auto s = compact_weyl_catalog(GroupDescriptor::parse("Sp(4,R)"));
    CHECK(s.W.order() == 8);
    CHECK(s.K.order() == 2);
  }
}
