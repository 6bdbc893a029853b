#include <doctest.h>

#include "cohoparam/cohomology.hpp"
#include "cohoparam/errors.hpp"

using namespace cohoparam;

TEST_SUITE("cohomology") {
  TEST_CASE("poincare polynomials") {
    CHECK(symmetric_space_poincare(SpaceTag::U, 2).to_string() == "1+t+t^3+t^4");
    CHECK(symmetric_space_poincare(SpaceTag::U_SO, 3).to_string() == "1+t+t^5+t^6");
    CHECK(symmetric_space_poincare(SpaceTag::U_SO, 2).to_string() == "1+t+t^2+t^3");
    CHECK(symmetric_space_poincare(SpaceTag::U_O, 2).to_string() == "1+t");
    CHECK(symmetric_space_poincare(SpaceTag::U_Sp, 4).to_string() == "1+t+t^5+t^6");
    CHECK_THROWS_AS(symmetric_space_poincare(SpaceTag::U_Sp, 3), InputError);
  }

  TEST_CASE("totals and palindromes") {
    for (int N = 0; N <= 8; ++N) {
      auto u = symmetric_space_poincare(SpaceTag::U, N);
      CHECK(u.total() == (std::uint64_t{1} << N));
      CHECK(u.palindromic());
      CHECK(u.degree() == N * N);
      auto uso = symmetric_space_poincare(SpaceTag::U_SO, N);
      int gens = N % 2 == 1 ? (N + 1) / 2 : (N == 0 ? 0 : N / 2 + 1);
      CHECK(uso.total() == (std::uint64_t{1} << gens));
      CHECK(uso.palindromic());
    }
  }

  TEST_CASE("levi cohomology") {
    CHECK(levi_cohomology({1, 2, 1}, KFlavor::O) ==
          symmetric_space_poincare(SpaceTag::U, 1) * symmetric_space_poincare(SpaceTag::U_O, 2));
    CHECK_THROWS_AS(levi_cohomology({1, 2}, KFlavor::O), InputError);
  }

  TEST_CASE("packet sums") {
    auto s = packet_cohomology_sum(GroupDescriptor::parse("GL(4,R)"), {0, 2}, KFlavor::SO);
    CHECK(s.value == 8);
    CHECK(s.packet_size == 2);
    auto t = packet_cohomology_sum(GroupDescriptor::parse("GL(5,R)"), {});
    CHECK(t.value == 8);
    CHECK(t.floor_text == 4u);
    CHECK(t.floor_text_discrepancy);
    auto u = packet_cohomology_sum(GroupDescriptor::parse("U(2,1)"), {});
    CHECK(u.value == 3);
    CHECK(u.levi_sum == 3u);
  }

  TEST_CASE("compact inner forms sum to 2^rank") {
    for (const char* g : {"U(3)", "U(4)", "Sp(2)", "Sp(3)", "SO(5)", "SO(6)", "SO(8)"}) {
      auto f = innerform_sum_compact(CompactDescriptor::parse(g));
      CHECK(f.sum == (std::uint64_t{1} << f.group.rank()));
      for (const auto& c : f.classes) CHECK(c.orbit_size * c.stabilizer_order == f.weyl_order);
    }
    auto u3 = innerform_sum_compact(CompactDescriptor::parse("U(3)"));
    CHECK(u3.classes.size() == 4);
  }

  TEST_CASE("quasi-split families") {
    auto f = innerform_sum_quasisplit(GroupDescriptor::parse("U(2,1)"));
    CHECK(f.index_sum == (std::uint64_t{1} << f.e));
    CHECK(f.betti_sum == (std::uint64_t{1} << (f.a + f.b + f.e)));
    CHECK_THROWS_AS(innerform_sum_quasisplit(GroupDescriptor::parse("SO(2,3)")), UnsupportedError);
  }
}
