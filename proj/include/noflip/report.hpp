#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "noflip/analysis.hpp"
#include "noflip/enumerate.hpp"
#include "noflip/forcing.hpp"
#include "noflip/game.hpp"

namespace noflip::report {

inline constexpr char kCensusCsvHeader[] = "n,total,bob_wins,alice_wins,infinite";

// Rounds to 15 significant digits, so the JSON rendering carries at most 15.
double round15(double v);

std::string census_csv(std::span<const enumerate::OutcomeCensus> rows);
nlohmann::json census_json(std::span<const enumerate::OutcomeCensus> rows);
std::string census_text(std::span<const enumerate::OutcomeCensus> rows);

std::string longest_csv(std::span<const enumerate::LengthStats> rows);
nlohmann::json longest_json(std::span<const enumerate::LengthStats> rows);
std::string longest_text(std::span<const enumerate::LengthStats> rows);

std::string no_loss_csv(const std::vector<std::pair<int, std::vector<TossString>>>& rows);
nlohmann::json no_loss_json(const std::vector<std::pair<int, std::vector<TossString>>>& rows);
std::string no_loss_text(const std::vector<std::pair<int, std::vector<TossString>>>& rows);

// {outcome: {kind, tosses | entry + period}, trace: "HT..", states: [[a, b, "A"|"B", k], ..]}
nlohmann::json outcome_json(const Outcome& o);
nlohmann::json trace_json(const PlayResult& r);

nlohmann::json prediction_json(const analysis::Prediction& p);
std::string prediction_text(const analysis::Prediction& p);

nlohmann::json force_json(const forcing::ForceResult& r);

// "(0,0,A), (1,0,B), ..."
std::string states_text(const std::vector<GameState>& states);

}  // namespace noflip::report
