#include <doctest.h>

#include <algorithm>

#include "cohoparam/errors.hpp"
#include "cohoparam/params.hpp"

using namespace cohoparam;

namespace {

std::vector<std::string> sorted_texts(const std::vector<GLParameter>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<GLParameter> enumerate(const std::string& g, const HalfIntVector& lambda) {
  std::vector<GLParameter> out;
  for (const auto& p : enumerate_cohomological(build_classical_dual(GroupDescriptor::parse(g)), lambda))
    out.push_back(cohom_to_gl_parameter(p));
  return out;
}

}  // namespace

TEST_SUITE("params") {
  TEST_CASE("atom and parameter round trips") {
    for (const char* t : {"s3[1]+w0[2]", "s4[1]+s2[1]+w0[1]", "w1[3]", "s2[1]*nu^1/2"})
      CHECK(GLParameter::parse(t).to_string() == t);
    CHECK(GLParameter::parse("w0[2]+s3[1]").to_string() == "s3[1]+w0[2]");
    CHECK(GLParameter::parse("s3[2]+w0[1]").dim() == 5);
    CHECK_THROWS_AS(GLParameter::parse("x3[1]"), InputError);
    CHECK_THROWS_AS(GLParameter::parse("s3[1]+s3[2]").validate_cohomological(), InputError);
    CHECK(ComplexParameter::parse("(1/2)[2]+(-1)[1]").to_string() == "(1/2)[2]+(-1)[1]");
  }

  TEST_CASE("GL(n,R) at trivial weight") {
    auto z = [](int n) { return HalfIntVector::zero(static_cast<std::size_t>(n)); };
    CHECK(sorted_texts(enumerate_gl_real(2, z(2))) == sorted({"s1[1]", "w0[2]"}));
    CHECK(sorted_texts(enumerate_gl_real(3, z(3))) == sorted({"s2[1]+w0[1]", "w0[3]"}));
    CHECK(sorted_texts(enumerate_gl_real(4, z(4))) == sorted({"s3[1]+s1[1]", "s3[1]+w0[2]", "s2[2]", "w0[4]"}));
    CHECK(sorted_texts(enumerate_gl_real(5, z(5))) ==
          sorted({"s4[1]+s2[1]+w0[1]", "s3[2]+w0[1]", "s4[1]+w0[3]", "w0[5]"}));
  }

  TEST_CASE("classical groups at trivial weight") {
    auto z = HalfIntVector::zero(2);
    CHECK(sorted_texts(enumerate("Sp(4,R)", z)) == sorted({"s4[1]+s2[1]+w0[1]", "s3[2]+w0[1]", "s4[1]+w1[3]", "w0[5]"}));
    CHECK(sorted_texts(enumerate("SO(2,3)", z)) == sorted({"s3[1]+s1[1]", "s2[2]", "s3[1]+w0[2]", "w0[4]"}));
  }

  TEST_CASE("twist of GL(2,R)") {
    auto ps = enumerate("GL(2,R)", HalfIntVector::parse("1,0"));
    CHECK(std::any_of(ps.begin(), ps.end(), [](const auto& p) { return p.to_string() == "s2[1]*nu^1/2"; }));
  }

  TEST_CASE("complex enumeration") {
    std::vector<std::string> got;
    for (const auto& e : enumerate_complex_cohomological(3, HalfIntVector::zero(3))) got.push_back(e.param.to_string());
    CHECK(sorted(got) == sorted({"(0)[3]", "(1)[1]+(0)[1]+(-1)[1]", "(1/2)[2]+(-1)[1]", "(1)[1]+(-1/2)[2]"}));
    for (int n = 1; n <= 7; ++n)
      CHECK(enumerate_complex_cohomological(n, HalfIntVector::zero(static_cast<std::size_t>(n))).size() ==
            (std::size_t{1} << (n - 1)));
  }

  TEST_CASE("infinitesimal characters") {
    CHECK(inf_char_gl(GLParameter::parse("s1[1]")).orbit_rep.to_string() == "(1/2, -1/2)");
    CHECK(inf_char_gl(GLParameter::parse("s2[2]")).orbit_rep.to_string() == "(3/2, 1/2, -1/2, -3/2)");
    CHECK(inf_char_gl(GLParameter::parse("w0[3]")).orbit_rep.to_string() == "(1, 0, -1)");
  }

  TEST_CASE("self-dual routing") {
    Route r = route_selfdual(GLParameter::parse("s4[1]+w0[3]"));
    CHECK(r.family == "Sp(4,R)");
    CHECK(r.routed.to_string() == "s4[1]+w1[3]");
    CHECK(classify_selfdual(GLParameter::parse("s3[1]+s1[1]")).type == SelfDualType::Symplectic);
    CHECK(classify_selfdual(GLParameter::parse("w0[5]")).type == SelfDualType::Orthogonal);
  }

  TEST_CASE("even orthogonal dichotomy") {
    Dichotomy dc = so_even_dichotomy(GLParameter::parse("s3[2]"));
    CHECK(dc.case_number == 2);
    REQUIRE(dc.mu);
    CHECK(*dc.mu == HalfIntVector::parse("1/2,1/2,-1/2,-1/2"));
    CHECK(dc.det == 0);
  }

  TEST_CASE("tempered companion") {
    CHECK(tempered_companion(GLParameter::parse("s2[2]")).to_string() == "s3[1]+s1[1]");
    CHECK(tempered_companion(GLParameter::parse("w0[4]")).to_string() == "s3[1]+s1[1]");
    CHECK(tempered_companion(GLParameter::parse("w0[3]")).to_string() == "s2[1]+w0[1]");
  }

  TEST_CASE("unitary relevance") {
    CHECK_FALSE(uprq_relevance(ComplexParameter::parse("(0)[3]"), 2, 1).relevant);
    CHECK(uprq_relevance(ComplexParameter::parse("(1)[1]+(0)[1]+(-1)[1]"), 2, 1).relevant);
  }

  TEST_CASE("central values") {
    RootDatum d = build_classical_dual(GroupDescriptor::parse("GL(4,R)"));
    for (const auto& p : enumerate_cohomological(d, HalfIntVector::zero(4)))
      if (central_value_applicable(p)) CHECK(verify_central_value(p));
  }

  TEST_CASE("composition blocks") {
    CHECK(compositions_blocks(4, {}) == std::vector<int>{1, 1, 1, 1});
    CHECK(compositions_blocks(4, {1}) == std::vector<int>{1, 2, 1});
    CHECK(compositions_blocks(4, {0, 2}) == std::vector<int>{2, 2});
  }

  TEST_CASE("weight checks") {
    RootDatum d = build_classical_dual(GroupDescriptor::parse("Sp(4,R)"));
    CHECK_THROWS_AS(check_weight(d, HalfIntVector::parse("0,1")), InputError);
    CHECK_THROWS_AS(check_weight(d, HalfIntVector::parse("1,0,0")), InputError);
    CHECK_NOTHROW(check_weight(d, HalfIntVector::parse("2,1")));
  }
}
