#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "algdyn/algdyn.hpp"
#include "algdyn/io/codec.hpp"
#include "algdyn/io/document.hpp"
#include "algdyn/io/replay.hpp"
#include "algdyn/io/report.hpp"
#include "algdyn/io/text.hpp"

using namespace algdyn;
using nlohmann::json;

namespace {

json sample(const std::string& name) {
  std::ifstream in(std::string(ALGDYN_SAMPLES) + "/" + name);
  std::stringstream s;
  s << in.rdbuf();
  return json::parse(s.str());
}

action::CommutingAction load(const json& doc) {
  auto v = action::validate(io::parse_document(doc));
  if (!v.ok()) throw std::runtime_error("sample does not validate");
  return *v.action;
}

action::MatrixAction matrix(const std::string& name) { return std::get<action::MatrixAction>(load(sample(name))); }
action::LaurentCyclicAction laurent_sample(const std::string& name) {
  return std::get<action::LaurentCyclicAction>(load(sample(name)));
}

std::string pointer_of(const json& doc) {
  try {
    io::parse_document(doc);
  } catch (const io::SchemaError& e) {
    return e.where();
  }
  return "<none>";
}

// The replay must reject the report after `edit`.
template <class F>
void expect_tamper_detected(json rep, F&& edit, int line = __builtin_LINE()) {
  SCOPED_TRACE(line);
  ASSERT_TRUE(io::verify_report(rep).ok());
  edit(rep);
  const io::ReplayResult r = io::verify_report(json::parse(rep.dump()));
  EXPECT_FALSE(r.ok());
}

}  // namespace

TEST(Document, SchemaErrorsCarryPointers) {
  EXPECT_EQ(pointer_of(json::array()), "");
  EXPECT_EQ(pointer_of(json{{"r", 2}}), "");
  EXPECT_EQ(pointer_of(json{{"type", 3}}), "/type");
  EXPECT_EQ(pointer_of(json{{"type", "torus"}}), "/type");
  EXPECT_EQ(pointer_of(sample("bad_schema.json")), "/generators/0/1/1");
  EXPECT_EQ(pointer_of(json::parse(R"({"type":"toral","r":2,"generators":[[[1,0],[0]]]})")), "/generators/0/1");
  EXPECT_EQ(pointer_of(json::parse(R"({"type":"toral","r":2,"generators":[[[1,"1/0"],[0,1]]]})")), "/generators/0/0/1");
  EXPECT_EQ(pointer_of(json::parse(R"({"type":"laurent","p":2,"d":3,"g":[]})")), "/d");
  EXPECT_EQ(pointer_of(json::parse(R"({"type":"laurent","p":2,"d":2,"g":[{"exponents":[1],"coefficient":1}]})")),
            "/g/0/exponents");
  EXPECT_EQ(pointer_of(json::parse(R"({"type":"laurent","p":2,"d":1,"g":[{"exponents":[1]}]})")), "/g/0");
}

TEST(Document, RationalEntriesAndValidation) {
  const auto raw = io::parse_document(sample("solenoid.json"));
  const auto& m = std::get<action::RawMatrixAction>(raw);
  EXPECT_EQ(m.generators.at(0)(0, 0), Rational(3, 2));
  EXPECT_TRUE(action::validate(raw).ok());
  const auto bad = action::validate(io::parse_document(sample("noncommuting.json")));
  ASSERT_FALSE(bad.ok());
  EXPECT_EQ(bad.issues.at(0).label(), "NonCommuting{1,2}");
}

TEST(Codec, RoundTrips) {
  const RatMatrix m{{Rational(1, 2), -3}, {0, Rational(7, 5)}};
  EXPECT_EQ(io::decode_matrix(io::encode(m), ""), m);
  const RatPolynomial p({Rational(-1), Rational(1, 3), Rational(1)});
  EXPECT_EQ(io::decode_poly(io::encode(p), ""), p);
  const FpPoly f(7, {3, 0, 1});
  EXPECT_EQ(io::decode_fp_poly(io::encode(f), ""), f);
  const LaurentPoly g = LaurentPoly::from_terms(5, 2, {{Exponent{{-1, 2}}, 3}, {Exponent{{0, 0}}, 1}});
  EXPECT_EQ(io::decode_laurent(io::encode(g), ""), g);
  const auto s = RationalSubspace::span({RatVector{1, 2, 3}}, 3);
  EXPECT_EQ(io::decode_subspace(io::encode(s), 3, ""), s);
}

TEST(Reports, DeterministicAndReplayable) {
  std::vector<json> reports;
  for (int round = 0; round < 2; ++round) {
    std::vector<json> batch;
    batch.push_back(io::analyze_report(sample("fibonacci.json"), matrix("fibonacci.json")));
    batch.push_back(io::analyze_report(sample("identity.json"), matrix("identity.json")));
    batch.push_back(io::analyze_report(sample("solenoid.json"), matrix("solenoid.json")));
    batch.push_back(io::analyze_report(sample("ledrappier.json"), laurent_sample("ledrappier.json"), {}));
    batch.push_back(io::analyze_report(sample("cyclic_u2_u_1.json"), laurent_sample("cyclic_u2_u_1.json"), {}));
    batch.push_back(io::find_ergodic_report(sample("block_pair.json"), matrix("block_pair.json"), 64));
    batch.push_back(io::find_ergodic_report(sample("ledrappier.json"), laurent_sample("ledrappier.json"), 3, {}));
    batch.push_back(io::filtration_report(sample("block_pair.json"), matrix("block_pair.json")));
    batch.push_back(io::filtration_report(sample("fibonacci_and_identity.json"), matrix("fibonacci_and_identity.json")));
    batch.push_back(io::oracle_report(sample("rotation.json"), matrix("rotation.json"), 2, {}));
    batch.push_back(io::demo_report(3));
    if (round == 0) {
      reports = batch;
    } else {
      for (std::size_t i = 0; i < batch.size(); ++i) EXPECT_EQ(batch[i].dump(2), reports[i].dump(2)) << i;
    }
  }
  for (const auto& r : reports) {
    const io::ReplayResult rr = io::verify_report(json::parse(r.dump()));
    EXPECT_TRUE(rr.ok()) << r["command"] << ": " << (rr.failures.empty() ? "" : rr.failures.front());
    EXPECT_GT(rr.certificates, 0u) << r["command"];
    EXPECT_FALSE(io::render_text(r).empty());
  }
}

TEST(Reports, NotErgodicAndInvalidReplay) {
  const auto id = matrix("identity.json");
  try {
    io::find_ergodic_report(sample("identity.json"), id, 64);
    FAIL() << "identity group is not ergodic";
  } catch (const toral::NotErgodicGroup& e) {
    const json r = io::not_ergodic_report("find-ergodic", sample("identity.json"), io::encode(e.witness()));
    EXPECT_TRUE(io::verify_report(r).ok());
  }
  const auto bad = action::validate(io::parse_document(sample("noncommuting.json")));
  const json inv = io::invalid_report("analyze", sample("noncommuting.json"), bad.issues);
  EXPECT_TRUE(io::verify_report(inv).ok());
  // An invalid report for a valid input is itself invalid.
  json lie = io::invalid_report("analyze", sample("fibonacci.json"), bad.issues);
  EXPECT_FALSE(io::verify_report(lie).ok());
}

TEST(Replay, DetectsTamperedCertificates) {
  const json fib = io::analyze_report(sample("fibonacci.json"), matrix("fibonacci.json"));
  expect_tamper_detected(fib, [](json& r) { r["generators"][0]["ergodic"]["certificate"]["char_poly"]["coefficients"][0] = "5"; });
  expect_tamper_detected(fib, [](json& r) { r["generators"][0]["ergodic"]["verdict"] = "NotErgodic"; });
  expect_tamper_detected(fib, [](json& r) { r["generators"][0]["distal"]["verdict"] = "Distal"; });

  const json id = io::analyze_report(sample("identity.json"), matrix("identity.json"));
  expect_tamper_detected(id, [](json& r) { r["group"]["ergodic"]["verdict"] = "Ergodic"; });
  expect_tamper_detected(id, [](json& r) { r["group"]["ergodic"]["certificate"]["character"] = json::array({"0", "0"}); });

  const json rot = io::analyze_report(sample("rotation.json"), matrix("rotation.json"));
  expect_tamper_detected(rot, [](json& r) { r["generators"][0]["ergodic"]["certificate"]["period"] = "2"; });

  const json bp = io::find_ergodic_report(sample("block_pair.json"), matrix("block_pair.json"), 64);
  expect_tamper_detected(bp, [](json& r) { r["exponents"] = json::array({1, 0}); });

  const json filt = io::filtration_report(sample("block_pair.json"), matrix("block_pair.json"));
  expect_tamper_detected(filt, [](json& r) { r["dimensions"][1] = 3; });

  const json cyc = io::analyze_report(sample("cyclic_u2_u_1.json"), laurent_sample("cyclic_u2_u_1.json"), {});
  expect_tamper_detected(cyc, [](json& r) { r["directions"][0]["verdict"]["witness"]["k"] = 2; });

  const json led = io::find_ergodic_report(sample("ledrappier.json"), laurent_sample("ledrappier.json"), 3, {});
  expect_tamper_detected(led, [](json& r) { r["verdict"]["closure"]["transformed_content"]["coefficients"] = json::array({1, 1}); });

  const json demo = io::demo_report(4);
  expect_tamper_detected(demo, [](json& r) { r["chain"][0]["factors_in_box"] = 35; });
  expect_tamper_detected(demo, [](json& r) { r["factors"][0]["self_exponent"] = 1; });

  expect_tamper_detected(fib, [](json& r) { r["schema_version"] = 2; });
}
