// Acceptance run: one PASS/FAIL line per criterion, with wall time against
// the criterion's limit. Exit status is nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "algdyn/algdyn.hpp"
#include "algdyn/io/document.hpp"
#include "algdyn/io/replay.hpp"
#include "algdyn/io/report.hpp"
#include "../support/families.hpp"

using namespace algdyn;
namespace fx = algdyn::fixtures;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Tally {
  bool pass = true;
  std::size_t checks = 0;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && pass) first_failure = what;
    pass = pass && cond;
  }
  Outcome outcome(const std::string& summary) const {
    return {pass, pass ? summary : summary + "; first failure: " + first_failure};
  }
};

action::MatrixAction single(const IntMatrix& m) { return action::make_toral({m}); }

// The two ergodicity routes, recomputed here without the engine.
bool ergodic_by_gcd(const RatMatrix& b) {
  const RatPolynomial cp = char_poly(b);
  for (std::int64_t d : root_of_unity_orders(static_cast<std::int64_t>(b.rows())))
    if (poly_gcd(cp, to_rational(cyclotomic(d))).degree() > 0) return false;
  return true;
}

bool ergodic_by_det(const RatMatrix& b) {
  const Integer e = m_star(static_cast<std::int64_t>(b.rows()));
  return determinant(power(b, e) - RatMatrix::identity(b.rows())) != 0;
}

std::vector<std::int64_t> random_exponents(fx::Rng& rng, std::size_t n) {
  std::vector<std::int64_t> e(n);
  for (auto& x : e) x = fx::uniform(rng, -2, 2);
  return e;
}

std::vector<fx::Family> fuzzed_families(std::size_t count, std::uint64_t seed) {
  fx::Rng rng(seed);
  std::vector<fx::Family> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(fx::random_commuting_family(rng, 6, 3));
  return out;
}

json matrix_document(const std::vector<IntMatrix>& gens) {
  json g = json::array();
  for (const auto& m : gens) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_si());
      rows.push_back(row);
    }
    g.push_back(rows);
  }
  return {{"type", "toral"}, {"r", gens.front().rows()}, {"generators", g}};
}

// ---- criteria ----

Outcome single_element_verdicts() {
  Tally t;
  using toral::VerdictKind;
  t.expect(toral::is_ergodic_element(single(fx::fib()), {1}).kind == VerdictKind::Ergodic, "Fibonacci ergodic");
  t.expect(toral::is_ergodic_element(single(fx::shear()), {1}).kind == VerdictKind::NotErgodic, "shear not ergodic");
  t.expect(toral::is_distal_element(single(fx::shear()), {1}).kind == VerdictKind::Distal, "shear distal");
  t.expect(toral::is_ergodic_element(single(fx::rot()), {1}).kind == VerdictKind::NotErgodic, "rotation not ergodic");
  t.expect(toral::is_distal_element(single(fx::rot()), {1}).kind == VerdictKind::Distal, "rotation distal");
  return t.outcome("F Ergodic; shear NotErgodic+Distal; rotation NotErgodic+Distal");
}

Outcome block_pair_theorem() {
  Tally t;
  const IntMatrix i2 = IntMatrix::identity(2);
  const auto a = action::make_toral({fx::block_diag({fx::fib(), i2}), fx::block_diag({i2, fx::fib()})});
  t.expect(!toral::is_ergodic_element(a, {1, 0}).ergodic(), "generator 1 ergodic");
  t.expect(!toral::is_ergodic_element(a, {0, 1}).ergodic(), "generator 2 ergodic");
  t.expect(toral::is_ergodic_group(a).ergodic(), "group not ergodic");
  const toral::ErgodicElement e = toral::find_ergodic_exponents(a);
  bool positive = true;
  for (auto x : e.exponents) positive = positive && x > 0;
  t.expect(positive, "exponents not all positive");
  t.expect(ergodic_by_gcd(e.dual_element), "gcd route");
  t.expect(ergodic_by_det(e.dual_element), "determinant route");
  // Hyperbolic orbits are cut by coordinate size long before the visit cap;
  // 128 bits is ample for box-3 characters.
  oracle::OrbitOptions opts;
  opts.cap = 100000;
  opts.max_bits = 128;
  const auto element = action::make_toral({*to_integer(e.element)});
  const auto cv = oracle::cross_validate(element, 3, opts);
  t.expect(cv.ok() && cv.finite_orbits == 0, "oracle found a finite orbit");
  std::string ex;
  for (auto x : e.exponents) ex += (ex.empty() ? "" : ",") + std::to_string(x);
  return t.outcome("exponents (" + ex + "), both routes Ergodic, oracle " + std::to_string(cv.checked) +
                   " characters, 0 finite orbits");
}

Outcome two_route_fuzz(const std::vector<fx::Family>& fams) {
  Tally t;
  fx::Rng rng(404);
  std::size_t elements = 0;
  for (const auto& fam : fams) {
    const auto a = action::make_toral(fam.generators);
    const IntMatrix p = fx::random_unimodular(rng, a.dimension(), 3);
    const auto c = a.conjugated(to_rational(p));
    for (int s = 0; s < 5; ++s) {
      const auto e = random_exponents(rng, a.generator_count());
      const RatMatrix dual = a.dual_element(e);
      ++elements;
      const bool gcd_route = ergodic_by_gcd(dual);
      t.expect(gcd_route == ergodic_by_det(dual), "routes disagree on " + fam.shape);
      t.expect(gcd_route == ergodic_by_gcd(a.element(e)), "primal/dual differ on " + fam.shape);
      t.expect(gcd_route == ergodic_by_gcd(c.dual_element(e)), "conjugation changes verdict on " + fam.shape);
      bool engine = false;
      try {
        engine = toral::classify_ergodic(dual).ergodic();
      } catch (const InvariantViolation&) {
        t.expect(false, "engine routes disagree on " + fam.shape);
      }
      t.expect(engine == gcd_route, "engine differs on " + fam.shape);
    }
  }
  return t.outcome(std::to_string(fams.size()) + " families, " + std::to_string(elements) + " elements, 0 disagreements");
}

Outcome ergodic_distal_pairs() {
  Tally t;
  fx::Rng rng(4242);
  std::size_t checked = 0;
  for (int k = 0; k < 50; ++k) {
    const auto [alpha, beta] = fx::random_ergodic_distal_pair(rng);
    const auto a = action::make_toral({alpha, beta});
    t.expect(toral::is_ergodic_element(a, {1, 0}).ergodic(), "alpha not ergodic");
    t.expect(toral::is_distal_element(a, {0, 1}).distal(), "beta not distal");
    for (std::int64_t i = -5; i <= 5; ++i) {
      if (i == 0) continue;
      for (std::int64_t j = -5; j <= 5; ++j) {
        ++checked;
        // gcd route only; the determinant route is exercised by the fuzz above.
        t.expect(ergodic_by_gcd(a.dual_element({i, j})), "alpha^i beta^j not ergodic");
      }
    }
  }
  return t.outcome("50 pairs, " + std::to_string(checked) + " elements alpha^i beta^j Ergodic");
}

Outcome filtration_soundness(const std::vector<fx::Family>& fams) {
  Tally t;
  std::size_t replayed = 0;
  for (const auto& fam : fams) {
    const json doc = matrix_document(fam.generators);
    const auto a = action::make_toral(fam.generators);
    const json rep = io::filtration_report(doc, a);
    const io::ReplayResult rr = io::verify_report(json::parse(rep.dump()));
    replayed += rr.certificates;
    t.expect(rr.ok(), "stage certificate replay failed on " + fam.shape);
    const bool residual_zero = rep["residual_zero"].get<bool>();
    t.expect(residual_zero == toral::is_ergodic_group(a).ergodic(), "residual vs group verdict on " + fam.shape);
    for (const auto& v : rep["residual_distal"]) t.expect(v["verdict"] == "Distal", "not quasi-unipotent on residual");
  }
  return t.outcome(std::to_string(fams.size()) + " families, " + std::to_string(replayed) + " certificates replayed");
}

Outcome unipotent_families() {
  Tally t;
  fx::Rng rng(606);
  for (int k = 0; k < 100; ++k) {
    const auto fam = fx::random_unipotent_family(rng, 5, 3);
    const auto a = action::make_toral(fam.generators);
    t.expect(toral::is_distal_group(a).distal(), "not distal: " + fam.shape);
    t.expect(!toral::finite_orbit_subspace(a).is_zero(), "no finite orbit: " + fam.shape);
  }
  return t.outcome("100 unipotent families Distal with nonzero finite-orbit subspace");
}

Outcome oracle_cross_validation() {
  Tally t;
  fx::Rng rng(808);
  std::size_t chars = 0, finite = 0;
  oracle::OrbitOptions opts;
  opts.cap = 100000;
  for (int k = 0; k < 20; ++k) {
    const auto fam = fx::random_commuting_family(rng, 3, 2);
    const auto a = action::make_toral(fam.generators);
    const auto cv = oracle::cross_validate(a, 3, opts);
    chars += cv.checked;
    finite += cv.finite_orbits;
    t.expect(cv.ok(), "hard failure on " + fam.shape);
  }
  return t.outcome("20 actions (r <= 3), " + std::to_string(chars) + " characters, " + std::to_string(finite) +
                   " finite orbits, 0 hard failures");
}

Outcome laurent_engine() {
  Tally t;
  using laurent::BoundedKind;
  const auto cyc = action::make_laurent(LaurentPoly::from_terms(2, 1, {{Exponent{{2, 0}}, 1}, {Exponent{{1, 0}}, 1}, {Exponent{{0, 0}}, 1}}));
  const auto v = laurent::alpha_is_ergodic(cyc, Exponent{{1, 0}});
  t.expect(v.kind == BoundedKind::NotErgodic && v.witness && v.witness->k == 3, "cyclic witness K=3");
  if (v.witness) {
    const LaurentPoly lhs = LaurentPoly::binomial_minus_one(2, 1, Exponent{{1, 0}}, 3) * v.witness->element;
    const auto q = laurent_divides(cyc.presentation(), lhs);
    t.expect(q && *q * cyc.presentation() == lhs, "witness replay by exact division");
  }
  const auto led = action::make_laurent(LaurentPoly::from_terms(2, 2, {{Exponent{{0, 0}}, 1}, {Exponent{{1, 0}}, 1}, {Exponent{{0, 1}}, 1}}));
  t.expect(laurent::alpha_is_ergodic(led, Exponent{{1, 0}}).kind == BoundedKind::Ergodic, "alpha_(1,0)");
  t.expect(laurent::alpha_is_ergodic(led, Exponent{{0, 1}}).kind == BoundedKind::Ergodic, "alpha_(0,1)");
  t.expect(laurent::group_is_ergodic(led).kind == BoundedKind::Ergodic, "group");
  t.expect(laurent::find_ergodic_direction(led, 3).direction == Exponent{{1, 0}}, "direction");
  return t.outcome("u^2+u+1 NotErgodic K=3 replayed; Ledrappier axes and group exact Ergodic; direction (1,0)");
}

Outcome demo() {
  Tally t;
  const json rep = io::demo_report(4);
  t.expect(rep["factor_count"] == 80, "80 factors");
  t.expect(rep["identity_holds"] == true, "identity");
  t.expect(rep["chain_length"] == 4 && rep["chain_strict"] == true, "chain");
  const io::ReplayResult rr = io::verify_report(rep);
  t.expect(rr.ok(), "replay");
  return t.outcome("80 lattice points with j*i - i*j = 0, strict chain of length 4, " + std::to_string(rr.certificates) +
                   " certificates replayed");
}

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(ALGDYN_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome determinism() {
  Tally t;
  const std::string s = ALGDYN_SAMPLES;
  const std::vector<std::pair<std::string, int>> commands = {
      {"analyze " + s + "/fibonacci.json", 0},
      {"analyze " + s + "/identity.json", 0},
      {"analyze " + s + "/noncommuting.json", 2},
      {"analyze " + s + "/solenoid.json", 0},
      {"analyze " + s + "/ledrappier.json", 0},
      {"analyze " + s + "/cyclic_u2_u_1.json", 0},
      {"find-ergodic " + s + "/block_pair.json", 0},
      {"find-ergodic " + s + "/ledrappier.json", 0},
      {"find-ergodic " + s + "/laurent_product.json", 0},
      {"find-ergodic " + s + "/linear_times_ledrappier.json", 0},
      {"find-ergodic " + s + "/identity.json", 3},
      {"filtration " + s + "/block_pair.json", 0},
      {"filtration " + s + "/identity.json", 0},
      {"filtration " + s + "/fibonacci.json", 0},
      {"oracle-check " + s + "/fibonacci.json --norm-bound 3", 0},
      {"oracle-check " + s + "/ledrappier.json --norm-bound 2 --cap 64", 0},
      {"demo-e2 --box 4", 0},
      {"analyze " + s + "/fibonacci.json --format text", 0},
  };
  for (const auto& [args, code] : commands) {
    const Run a = run_cli(args + " --verify-report");
    const Run b = run_cli(args + " --verify-report");
    t.expect(a.code == code, "exit code of '" + args + "' was " + std::to_string(a.code));
    t.expect(b.code == a.code && a.out == b.out && !a.out.empty(), "output differs for '" + args + "'");
  }
  return t.outcome(std::to_string(commands.size()) + " commands byte-identical across runs, replay 0 failures");
}

}  // namespace

int main() {
  const auto fams = fuzzed_families(200, 2024);
  struct Criterion {
    int id;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, 1.0, single_element_verdicts},
      {2, 5.0, block_pair_theorem},
      {3, 60.0, [&] { return two_route_fuzz(fams); }},
      {4, 30.0, ergodic_distal_pairs},
      {5, 30.0, [&] { return filtration_soundness(fams); }},
      {6, 30.0, unipotent_families},
      {7, 120.0, oracle_cross_validation},
      {8, 5.0, laurent_engine},
      {9, 1.0, demo},
      {10, 0.0, determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit == 0.0 || secs < c.limit;
    const bool pass = o.pass && in_time;
    all = all && pass;
    char timing[64];
    if (c.limit == 0.0) {
      std::snprintf(timing, sizeof timing, "%.2f s", secs);
    } else {
      std::snprintf(timing, sizeof timing, "%.2f s < %.0f s", secs, c.limit);
    }
    std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << " (" << timing << (in_time ? "" : " EXCEEDED")
              << ") " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
