// algdyn: command-line front end for the algdyn library.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "algdyn/algdyn.hpp"
#include "algdyn/io/document.hpp"
#include "algdyn/io/replay.hpp"
#include "algdyn/io/report.hpp"
#include "algdyn/io/text.hpp"

namespace {

using nlohmann::json;
namespace io = algdyn::io;

enum Exit { kOk = 0, kIo = 1, kInvalid = 2, kNotErgodic = 3, kExhausted = 4, kReplayFailed = 5 };

struct Settings {
  std::string command;
  std::string file;
  std::string format = "json";
  bool verify = false;
  bool timing = false;
  std::int64_t cap = 100000;
  std::optional<std::int64_t> kmax;
  std::int64_t norm_bound = 3;
  std::int64_t max_exponent_sum = 64;
  std::int64_t search_box = 3;
  std::int64_t box = 4;
};

struct IoError {
  std::string message;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError{"cannot read '" + path + "'"};
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw io::SchemaError("byte " + std::to_string(e.byte), "malformed JSON");
  }
}

algdyn::laurent::LaurentOptions laurent_options(const Settings& s) {
  algdyn::laurent::LaurentOptions opt;
  opt.k_max = s.kmax;
  return opt;
}

struct Outcome {
  json report;
  int code = kOk;
};

Outcome run(const Settings& s) {
  using algdyn::action::LaurentCyclicAction;
  using algdyn::action::MatrixAction;
  if (s.command == "demo-e2") return {io::demo_report(s.box)};
  if (s.command == "verify") return {read_json(s.file)};

  const json input = read_json(s.file);
  const auto validated = algdyn::action::validate(io::parse_document(input));
  if (!validated.ok()) return {io::invalid_report(s.command, input, validated.issues), kInvalid};
  const auto& action = *validated.action;
  const auto* matrix = std::get_if<MatrixAction>(&action);
  const auto* laurent = std::get_if<LaurentCyclicAction>(&action);

  if (s.command == "analyze") {
    return {matrix ? io::analyze_report(input, *matrix) : io::analyze_report(input, *laurent, laurent_options(s))};
  }
  if (s.command == "find-ergodic") {
    try {
      if (matrix) return {io::find_ergodic_report(input, *matrix, s.max_exponent_sum)};
      return {io::find_ergodic_report(input, *laurent, s.search_box, laurent_options(s))};
    } catch (const algdyn::toral::NotErgodicGroup& e) {
      return {io::not_ergodic_report(s.command, input, io::encode(e.witness())), kNotErgodic};
    } catch (const algdyn::laurent::NotErgodicGroup& e) {
      return {io::not_ergodic_report(s.command, input, io::encode(e.witness(), laurent->variables())), kNotErgodic};
    } catch (const algdyn::toral::SearchExhausted& e) {
      json r = io::report_header(s.command, input);
      r["status"] = "exhausted";
      r["search"] = {{"max_exponent_sum", e.bound()}};
      return {r, kExhausted};
    } catch (const algdyn::laurent::Exhausted& e) {
      json r = io::report_header(s.command, input);
      r["status"] = "exhausted";
      r["search"] = {{"search_box", e.box()}};
      return {r, kExhausted};
    }
  }
  if (s.command == "filtration") {
    if (!matrix) throw algdyn::DomainError("filtration needs a toral or solenoid action");
    return {io::filtration_report(input, *matrix)};
  }
  if (s.command == "oracle-check") {
    if (laurent) return {io::oracle_report(input, *laurent, s.norm_bound, s.cap, laurent_options(s))};
    algdyn::oracle::OrbitOptions opts;
    opts.cap = static_cast<std::size_t>(s.cap);
    return {io::oracle_report(input, *matrix, s.norm_bound, opts)};
  }
  throw algdyn::DomainError("unknown command " + s.command);
}

void add_file(CLI::App* sub, Settings& s, const char* what = "action document (JSON)") {
  sub->add_option("file", s.file, what)->required();
}

}  // namespace

int main(int argc, char** argv) {
  Settings s;
  CLI::App app{"Ergodicity and distality of commuting algebraic actions"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", s.format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--verify-report", s.verify, "replay every certificate of the report before printing it");
  app.add_flag("--timing", s.timing, "print wall time to stderr");

  auto* analyze = app.add_subcommand("analyze", "verdicts for generators, the group and the largest ergodic subgroup");
  add_file(analyze, s);
  analyze->add_option("--kmax", s.kmax, "scan bound for Laurent actions");

  auto* find = app.add_subcommand("find-ergodic", "search for an ergodic element or direction");
  add_file(find, s);
  find->add_option("--max-exponent-sum", s.max_exponent_sum, "toral/solenoid search bound")->check(CLI::PositiveNumber);
  find->add_option("--kmax", s.kmax, "scan bound for Laurent actions");
  find->add_option("--search-box", s.search_box, "Laurent direction box |n|_inf")->check(CLI::PositiveNumber);

  auto* filt = app.add_subcommand("filtration", "ergodic-distal filtration of the dual space");
  add_file(filt, s);

  auto* oracle = app.add_subcommand("oracle-check", "brute-force orbit cross-check");
  add_file(oracle, s);
  oracle->add_option("--norm-bound", s.norm_bound, "sup-norm of characters (or directions) to check")->check(CLI::PositiveNumber);
  oracle->add_option("--cap", s.cap, "orbit size cap")->check(CLI::PositiveNumber);
  oracle->add_option("--kmax", s.kmax, "scan bound for Laurent actions");

  auto* demo = app.add_subcommand("demo-e2", "product example with no ergodic element");
  demo->add_option("--box", s.box, "lattice box half-width")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "replay the certificates of a saved JSON report");
  add_file(verify, s, "report (JSON)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInvalid;
  }
  s.command = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = run(s);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kIo;
  } catch (const io::SchemaError& e) {
    std::cerr << "error: " << s.file << ": " << e.what() << "\n";
    return kInvalid;
  } catch (const algdyn::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const algdyn::DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }

  if (s.command == "verify" || s.verify) {
    // Round-trip through text so the replay sees exactly what is printed.
    const io::ReplayResult rr = io::verify_report(json::parse(out.report.dump()));
    std::cerr << "verify-report: " << rr.certificates << " certificates replayed, " << rr.failures.size() << " failures\n";
    for (const auto& f : rr.failures) std::cerr << "  " << f << "\n";
    if (!rr.ok()) return kReplayFailed;
    if (s.command == "verify") return kOk;
  }

  if (s.format == "text") {
    std::cout << io::render_text(out.report);
  } else {
    std::cout << out.report.dump(2) << "\n";
  }
  for (const auto& issue : out.report.value("issues", json::array())) std::cerr << "invalid: " << issue["label"].get<std::string>() << "\n";
  if (s.timing) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    std::cerr << "wall time: " << dt.count() << " s\n";
  }
  return out.code;
}
