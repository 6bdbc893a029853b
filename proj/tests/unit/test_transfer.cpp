#include <doctest.h>

#include "cohoparam/errors.hpp"
#include "cohoparam/transfer.hpp"

using namespace cohoparam;

TEST_SUITE("transfer") {
  TEST_CASE("tags") {
    for (const char* t : {"sp-gl", "so-gl", "so-odd-in-so-even", "diag"}) CHECK(to_string(parse_embedding(t)) == t);
    CHECK_THROWS_AS(parse_embedding("gl-gl"), InputError);
  }

  TEST_CASE("push forward on cocharacters") {
    CHECK(push_forward(Embedding::SpGL, HalfIntVector::parse("2,1")) == HalfIntVector::parse("2,1,-1,-2"));
    CHECK(push_forward(Embedding::SOGL, HalfIntVector::parse("2,1")) == HalfIntVector::parse("2,1,0,-1,-2"));
    CHECK(push_forward(Embedding::SOOddInSOEven, HalfIntVector::parse("2,1")) == HalfIntVector::parse("2,1,0"));
    CHECK(push_forward(Embedding::Diag, HalfIntVector::parse("1,0")) == HalfIntVector::parse("1,0,1,0"));
  }

  TEST_CASE("rho transport holds for every tag and small n") {
    for (auto tag : {Embedding::SpGL, Embedding::SOGL, Embedding::Diag})
      for (int n = 1; n <= 5; ++n) CHECK_NOTHROW(check_rho_transport(embedding_data(tag, n)));
    for (int n = 2; n <= 5; ++n)
      for (int disc : {0, 1}) CHECK_NOTHROW(check_rho_transport(embedding_data(Embedding::SOOddInSOEven, n, disc)));
  }

  TEST_CASE("parameters") {
    auto sp = transfer_parameter(Embedding::SpGL, GLParameter::parse("s3[1]+s1[1]"));
    REQUIRE(sp.target);
    CHECK(sp.target->to_string() == "s3[1]+s1[1]");
    CHECK(sp.source_cohomological);
    CHECK(sp.target_cohomological);
    CHECK(sp.rho_ok);

    auto so = transfer_parameter(Embedding::SOGL, GLParameter::parse("s4[1]+w1[3]"));
    CHECK(so.target_cohomological);

    auto odd = transfer_parameter(Embedding::SOOddInSOEven, GLParameter::parse("s2[1]+w1[1]"), 0, 0);
    REQUIRE(odd.target);
    CHECK(odd.target->to_string() == "s2[1]+w0[1]+w1[1]");
    auto odd1 = transfer_parameter(Embedding::SOOddInSOEven, GLParameter::parse("s2[1]+w1[1]"), 0, 1);
    CHECK(odd1.target->to_string() == "s2[1]+w1[1]+w1[1]");

    auto diag = transfer_parameter(Embedding::Diag, GLParameter::parse("s2[2]"));
    REQUIRE(diag.target_w);
    CHECK(diag.target_w->to_string() == "(1)[2]+(-1)[2]");
  }

  TEST_CASE("rejections") {
    CHECK_THROWS_AS(transfer_parameter(Embedding::SpGL, GLParameter::parse("w0[3]")), InputError);
    CHECK_THROWS_AS(transfer_parameter(Embedding::Diag, GLParameter::parse("s2[1]*nu^1/2")), InputError);
  }
}
