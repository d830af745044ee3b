#include "doctest.h"
#include "xxzcorr/verify.hpp"

#include <sstream>

using namespace xxz;

TEST_CASE("Psi2 closed forms pass against the oracle") {
  const Psi2Report r = verify_psi2();
  CHECK(r.points == 30);
  CHECK(r.failures.empty());
}

TEST_CASE("Psi1 adjudication isolates the flagged terms") {
  const Psi1Report r = adjudicate_psi1();
  CHECK(r.points == 156);
  CHECK(r.oracle_within_bounds);
  REQUIRE(r.components.size() == 4);
  for (const auto& c : r.components) {
    CAPTURE(to_string(c.quantity));
    CHECK(c.max_corrected_delta < 1e-8);
    if (c.quantity == Quantity::CC) CHECK(c.verdict == Verdict::agrees);
    else CHECK(c.verdict == Verdict::explained);
  }
  CHECK(r.deviations_confined());
}

TEST_CASE("tightened tolerance surfaces failures") {
  VerifyOptions o;
  o.psi2_closed_tolerance = 1e-20;
  o.psi2_optimizer_tolerance = 1e-20;
  const Psi2Report r = verify_psi2(o);
  CHECK_FALSE(r.failures.empty());
}

TEST_CASE("report rendering") {
  VerifyReport r;
  r.psi2 = verify_psi2();
  r.psi1 = adjudicate_psi1();
  std::ostringstream text, json;
  write_report(text, r);
  write_report_json(json, r);
  CHECK(text.str().find("RESULT: PASS") != std::string::npos);
  CHECK(text.str().find("cos^2(2 mu t)") != std::string::npos);
  CHECK(json.str().find("\"passed\": true") != std::string::npos);
}
