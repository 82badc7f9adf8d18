#include "noflip/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace noflip::report {

using nlohmann::json;

double round15(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

std::string census_csv(std::span<const enumerate::OutcomeCensus> rows) {
  std::ostringstream os;
  os << kCensusCsvHeader << '\n';
  for (const auto& c : rows) {
    os << c.n << ',' << c.total << ',' << c.bob_wins << ',' << c.alice_wins << ','
       << c.infinite << '\n';
  }
  return os.str();
}

json census_json(std::span<const enumerate::OutcomeCensus> rows) {
  json out = json::array();
  for (const auto& c : rows) {
    out.push_back({
        {"n", c.n},
        {"total", c.total},
        {"bob_wins", c.bob_wins},
        {"alice_wins", c.alice_wins},
        {"infinite", c.infinite},
        {"proportions",
         {{"bob_wins", round15(c.proportion(OutcomeKind::BobWins))},
          {"alice_wins", round15(c.proportion(OutcomeKind::AliceWins))},
          {"infinite", round15(c.proportion(OutcomeKind::Infinite))}}},
    });
  }
  return out;
}

std::string census_text(std::span<const enumerate::OutcomeCensus> rows) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%4s %10s %10s %10s %10s   %6s %6s %6s\n", "n", "total",
                "bob", "alice", "infinite", "bob", "alice", "inf");
  os << line;
  for (const auto& c : rows) {
    std::snprintf(line, sizeof line, "%4d %10llu %10llu %10llu %10llu   %6.3f %6.3f %6.3f\n",
                  c.n, static_cast<unsigned long long>(c.total),
                  static_cast<unsigned long long>(c.bob_wins),
                  static_cast<unsigned long long>(c.alice_wins),
                  static_cast<unsigned long long>(c.infinite),
                  c.proportion(OutcomeKind::BobWins), c.proportion(OutcomeKind::AliceWins),
                  c.proportion(OutcomeKind::Infinite));
    os << line;
  }
  return os.str();
}

std::string longest_csv(std::span<const enumerate::LengthStats> rows) {
  std::ostringstream os;
  os << "n,max_finite_tosses,witness_count,first_alice,first_bob\n";
  for (const auto& s : rows) {
    os << s.n << ',' << s.max_finite_tosses << ',' << s.argmax_pairs.size() << ',';
    if (!s.argmax_pairs.empty()) {
      os << s.argmax_pairs.front().first.str() << ',' << s.argmax_pairs.front().second.str();
    } else {
      os << ',';
    }
    os << '\n';
  }
  return os.str();
}

json longest_json(std::span<const enumerate::LengthStats> rows) {
  json out = json::array();
  for (const auto& s : rows) {
    json pairs = json::array();
    for (const auto& [a, b] : s.argmax_pairs) pairs.push_back({a.str(), b.str()});
    out.push_back({{"n", s.n}, {"max_finite_tosses", s.max_finite_tosses}, {"argmax_pairs", pairs}});
  }
  return out;
}

std::string longest_text(std::span<const enumerate::LengthStats> rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << (i ? "," : "") << rows[i].max_finite_tosses;
  }
  os << '\n';
  for (const auto& s : rows) {
    os << "n=" << s.n << ": " << s.max_finite_tosses << " tosses, " << s.argmax_pairs.size()
       << " pair(s)";
    if (!s.argmax_pairs.empty()) {
      os << ", first " << s.argmax_pairs.front().first.str() << " vs "
         << s.argmax_pairs.front().second.str();
    }
    os << '\n';
  }
  return os.str();
}

std::string no_loss_csv(const std::vector<std::pair<int, std::vector<TossString>>>& rows) {
  std::ostringstream os;
  os << "n,alice\n";
  for (const auto& [n, list] : rows) {
    for (const auto& s : list) os << n << ',' << s.str() << '\n';
  }
  return os.str();
}

json no_loss_json(const std::vector<std::pair<int, std::vector<TossString>>>& rows) {
  json out = json::array();
  for (const auto& [n, list] : rows) {
    json strings = json::array();
    for (const auto& s : list) strings.push_back(s.str());
    out.push_back({{"n", n}, {"strings", strings}});
  }
  return out;
}

std::string no_loss_text(const std::vector<std::pair<int, std::vector<TossString>>>& rows) {
  std::ostringstream os;
  for (const auto& [n, list] : rows) {
    os << "n=" << n << ":";
    if (list.empty()) os << " (none)";
    for (const auto& s : list) os << ' ' << s.str();
    os << '\n';
  }
  return os.str();
}

json outcome_json(const Outcome& o) {
  if (o.finite()) return {{"kind", to_string(o.kind)}, {"tosses", o.tosses}};
  return {{"kind", to_string(o.kind)}, {"entry", o.entry}, {"period", o.period}};
}

json trace_json(const PlayResult& r) {
  json states = json::array();
  for (const auto& s : r.trace.states) {
    states.push_back({s.a, s.b, std::string(1, to_char(s.turn)), s.k});
  }
  return {{"outcome", outcome_json(r.outcome)}, {"trace", r.trace.output()}, {"states", states}};
}

json prediction_json(const analysis::Prediction& p) {
  json j = {{"rule", analysis::to_string(p.rule)}, {"kind", to_string(p.kind)}};
  if (p.tosses) j["tosses"] = *p.tosses;
  return j;
}

std::string prediction_text(const analysis::Prediction& p) {
  std::string s = analysis::to_string(p.rule) + " -> " + to_string(p.kind);
  if (p.tosses) s += " at toss " + std::to_string(*p.tosses);
  return s;
}

json force_json(const forcing::ForceResult& r) {
  json j = {{"status", forcing::to_string(r.status)}, {"method", r.method}};
  if (r.constructed) j["string"] = r.constructed->str();
  if (r.verified_outcome) j["outcome"] = outcome_json(*r.verified_outcome);
  return j;
}

std::string states_text(const std::vector<GameState>& states) {
  std::string s;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i) s += ", ";
    s += to_string(states[i]);
  }
  return s;
}

}  // namespace noflip::report
