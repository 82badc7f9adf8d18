#include "noflip/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <ostream>

#include "noflip/analysis.hpp"
#include "noflip/enumerate.hpp"
#include "noflip/forcing.hpp"
#include "noflip/report.hpp"
#include "noflip/verify.hpp"

namespace noflip::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TossString parse_arg(const std::string& flag, const std::string& text) {
  try {
    return TossString::parse(text);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

int parse_threads(const std::string& text) {
  if (text == "auto") return 0;
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
    throw UsageError("--threads: expected a positive integer or 'auto', got '" + text + "'");
  }
  return value;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed,
                    const char* command) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageError(std::string("--format ") + format + " is not available for " + command);
}

// ---- simulate --------------------------------------------------------------

struct SimulateArgs {
  std::string alice, bob, format = "text";
  bool states = false;
};

int cmd_simulate(const SimulateArgs& args, std::ostream& out) {
  require_format(args.format, {"text", "json"}, "simulate");
  const TossString alice = parse_arg("--alice", args.alice);
  const TossString bob = parse_arg("--bob", args.bob);
  if (alice.length() != bob.length()) {
    throw UsageError("--bob: strings must have the same length");
  }
  if (alice == bob) throw UsageError("--bob: strings must be distinct");

  const PlayResult r = play(alice, bob);
  const auto predictions = analysis::predict_all(alice, bob);

  if (args.format == "json") {
    nlohmann::json j = report::trace_json(r);
    j["predictions"] = nlohmann::json::array();
    for (const auto& p : predictions) j["predictions"].push_back(report::prediction_json(p));
    out << j.dump() << '\n';
    return kOk;
  }
  out << describe(r.outcome) << '\n';
  out << "trace: " << r.trace.output() << (r.outcome.finite() ? "" : "...") << '\n';
  if (args.states) out << "states: " << report::states_text(r.trace.states) << '\n';
  for (const auto& p : predictions) out << "prediction: " << report::prediction_text(p) << '\n';
  return kOk;
}

// ---- force -----------------------------------------------------------------

struct ForceArgs {
  std::string role, goal, opponent, format = "text";
  int search_cap = forcing::ForceOptions{}.search_cap;
};

int cmd_force(const ForceArgs& args, std::ostream& out) {
  require_format(args.format, {"text", "json"}, "force");
  const Player role = args.role == "alice" ? Player::Alice : Player::Bob;
  const forcing::Goal goal = args.goal == "win"    ? forcing::Goal::Win
                             : args.goal == "loss" ? forcing::Goal::Loss
                                                   : forcing::Goal::InfiniteGame;
  const TossString opponent = parse_arg("--opponent", args.opponent);
  const auto r = forcing::force(role, goal, opponent, {args.search_cap});
  const int code = r.status == forcing::Status::UnknownByConstruction ? kUnknown : kOk;

  if (args.format == "json") {
    out << report::force_json(r).dump() << '\n';
    return code;
  }
  switch (r.status) {
    case forcing::Status::Impossible:
      out << "impossible (" << r.method << ")\n";
      break;
    case forcing::Status::UnknownByConstruction:
      out << "unknown: no construction applies and n exceeds the search cap ("
          << args.search_cap << ")\n";
      break;
    case forcing::Status::Constructed: {
      const PlayResult game = role == Player::Alice ? play(*r.constructed, opponent)
                                                    : play(opponent, *r.constructed);
      out << r.constructed->str() << '\n';
      out << "method: " << r.method << '\n';
      out << "outcome: " << describe(game.outcome) << '\n';
      out << "trace: " << game.trace.output() << (game.outcome.finite() ? "" : "...") << '\n';
      break;
    }
  }
  return code;
}

// ---- enumerate -------------------------------------------------------------

struct EnumerateArgs {
  int n = 0;
  std::string what = "census", format = "text", threads = "auto";
};

int cmd_enumerate(const EnumerateArgs& args, std::ostream& out) {
  const int cap = enumerate::sweep_cap();
  if (args.n < 1 || args.n > cap) {
    throw UsageError("--n: must be between 1 and " + std::to_string(cap));
  }
  const enumerate::SweepOptions opts{parse_threads(args.threads)};

  if (args.what == "census") {
    std::vector<enumerate::OutcomeCensus> rows;
    for (int n = 1; n <= args.n; ++n) rows.push_back(enumerate::census(n, opts));
    if (args.format == "csv") out << report::census_csv(rows);
    else if (args.format == "json") out << report::census_json(rows).dump() << '\n';
    else out << report::census_text(rows);
  } else if (args.what == "longest") {
    std::vector<enumerate::LengthStats> rows;
    for (int n = 1; n <= args.n; ++n) rows.push_back(enumerate::longest_finite(n, opts));
    if (args.format == "csv") out << report::longest_csv(rows);
    else if (args.format == "json") out << report::longest_json(rows).dump() << '\n';
    else out << report::longest_text(rows);
  } else {
    std::vector<std::pair<int, std::vector<TossString>>> rows;
    for (int n = 1; n <= args.n; ++n) rows.emplace_back(n, enumerate::no_loss_strings(n, opts));
    if (args.format == "csv") out << report::no_loss_csv(rows);
    else if (args.format == "json") out << report::no_loss_json(rows).dump() << '\n';
    else out << report::no_loss_text(rows);
  }
  return kOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  int n = 0;
  std::string suite, threads = "auto";
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const int cap = enumerate::sweep_cap();
  if (args.n < 1 || args.n > cap) {
    throw UsageError("--n: must be between 1 and " + std::to_string(cap));
  }
  const auto suite = enumerate::parse_suite(args.suite);
  if (!suite) throw UsageError("--suite: unknown suite '" + args.suite + "'");
  const auto report = enumerate::verify_suite(args.n, *suite, {parse_threads(args.threads)});
  out << "suite " << args.suite << " n=" << args.n << ": " << report.checked << " checked, "
      << report.violations.size() << " violations\n";
  for (const auto& v : report.violations) {
    err << v.subject << ": " << v.detail;
    if (!v.trace.empty()) err << " [" << v.trace << "]";
    err << '\n';
  }
  return report.ok() ? kOk : kViolations;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Engine, strategy constructions and exhaustive sweeps for the No-Flippancy game",
               "noflip"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Play one game and print its trace");
  simulate->add_option("--alice", sim.alice, "Alice's string (H/T)")->required();
  simulate->add_option("--bob", sim.bob, "Bob's string (H/T)")->required();
  simulate->add_flag("--states", sim.states, "Print the per-toss state triplets");
  simulate->add_option("--format", sim.format, "text|json")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  ForceArgs frc;
  auto* force = app.add_subcommand("force", "Construct a string that forces an outcome");
  force->add_option("--role", frc.role, "Player choosing second")
      ->required()
      ->check(CLI::IsMember({"alice", "bob"}));
  force->add_option("--goal", frc.goal, "Outcome the role is after")
      ->required()
      ->check(CLI::IsMember({"win", "loss", "infinite"}));
  force->add_option("--opponent", frc.opponent, "The announced string")->required();
  force->add_option("--search-cap", frc.search_cap, "Largest n for the exhaustive fallback")
      ->check(CLI::Range(1, TossString::kMaxLength));
  force->add_option("--format", frc.format, "text|json")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  EnumerateArgs en;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Exhaustive tables for n = 1..N");
  enumerate_cmd->add_option("--n", en.n, "Largest string length")->required();
  enumerate_cmd->add_option("--what", en.what, "census|longest|noloss")
      ->check(CLI::IsMember({"census", "longest", "noloss"}));
  enumerate_cmd->add_option("--format", en.format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  enumerate_cmd->add_option("--threads", en.threads, "Worker threads or 'auto'");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Run an exhaustive property suite");
  verify->add_option("--n", ver.n, "String length")->required();
  verify->add_option("--suite", ver.suite, "predicates|forcing|bound|symmetry")->required();
  verify->add_option("--threads", ver.threads, "Worker threads or 'auto'");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(sim, out);
    if (force->parsed()) return cmd_force(frc, out);
    if (enumerate_cmd->parsed()) return cmd_enumerate(en, out);
    if (verify->parsed()) return cmd_verify(ver, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace noflip::cli
