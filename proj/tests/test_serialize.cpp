#include <doctest.h>

#include "tautring/pixton.hpp"
#include "tautring/serialize.hpp"

using namespace tautring;
using nlohmann::json;

TEST_CASE("classes round trip through JSON") {
  const auto data = RamificationData::from_a(1, 1, {2, -1, -1});
  for (int d = 0; d <= 3; ++d) {
    const TautClass x = pixton_class(data, d);
    CHECK(tautclass_from_json(json::parse(to_json(x).dump())) == x);
  }
  const MixedClass m = pixton_mixed(RamificationData::from_a(1, 0, {1, -1}));
  const MixedClass back = mixedclass_from_json(json::parse(to_json(m).dump()));
  for (int d = 0; d <= m.top_degree(); ++d) CHECK(back[d] == m[d]);
}

TEST_CASE("strata round trip through JSON") {
  for (const auto& s : generators(1, 3, 2)) CHECK(stratum_from_json(stratum_to_json(s)) == s);
}

TEST_CASE("non-canonical input is canonicalized") {
  const json a = {{"graph", "(0|1)[0-0]"}, {"psi", {{"h1", 1}}}};
  const json b = {{"graph", "(0|1)[0-0]"}, {"psi", {{"h0", 1}}}};
  CHECK(stratum_from_json(a) == stratum_from_json(b));
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(tautclass_from_json(json::object()), std::invalid_argument);
  CHECK_THROWS(stratum_from_json({{"graph", "(0|1,2)"}}));
  CHECK_THROWS(stratum_from_json({{"graph", "(1|1)"}, {"psi", {{"2", 1}}}}));
  CHECK_THROWS(stratum_from_json({{"graph", "(1|1)"}, {"psi", {{"1", -1}}}}));
  CHECK_THROWS(stratum_from_json({{"graph", "(1|1)"}, {"kappa", {{"0", {0}}}}}));
  const json wrong_degree = {{"g", 1}, {"n", 1}, {"degree", 0}, {"terms", {{{"graph", "(1|1)"}, {"psi", {{"1", 1}}}, {"coeff", "1"}}}}};
  CHECK_THROWS(tautclass_from_json(wrong_degree));
  const json bad_coeff = {{"g", 1}, {"n", 1}, {"degree", 1}, {"terms", {{{"graph", "(1|1)"}, {"psi", {{"1", 1}}}, {"coeff", "x"}}}}};
  CHECK_THROWS(tautclass_from_json(bad_coeff));
}
