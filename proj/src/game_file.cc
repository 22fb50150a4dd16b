// Copyright 2026 The Berge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "berge/game_file.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

namespace berge {
namespace {

using json = nlohmann::json;

std::string Location(std::size_t row, std::size_t column) {
  return "payoffs[" + std::to_string(row) + "][" + std::to_string(column) +
         "]";
}

Rational ParseEntry(const json& entry, std::size_t row, std::size_t column) {
  if (entry.is_string()) {
    try {
      return ParseRational(entry.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw GameFileError(Location(row, column) + ": " + e.what());
    }
  }
  if (entry.is_number_integer()) {
    return ParseRational(entry.dump());
  }
  if (entry.is_number_float()) {
    throw GameFileError(Location(row, column) +
                        ": floating-point number; quote it as a string");
  }
  throw GameFileError(Location(row, column) + ": not a number");
}

}  // namespace

Game ParseGame(std::string_view text, int max_players) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GameFileError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) {
    throw GameFileError("malformed document: expected a JSON object");
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw GameFileError("n: missing or not an integer");
  }
  const long long n = doc["n"].get<long long>();
  const int cap = std::min(max_players, kHardMaxPlayers);
  if (n < 2 || n > cap) {
    throw GameFileError("n: " + std::to_string(n) + " outside [2, " +
                        std::to_string(cap) + "]");
  }

  std::vector<std::string> names;
  if (doc.contains("players")) {
    const json& players = doc["players"];
    if (!players.is_array() || players.size() != static_cast<std::size_t>(n)) {
      throw GameFileError("players: expected a list of " + std::to_string(n) +
                          " names");
    }
    for (std::size_t i = 0; i < players.size(); ++i) {
      if (!players[i].is_string()) {
        throw GameFileError("players[" + std::to_string(i) +
                            "]: not a string");
      }
      names.push_back(players[i].get<std::string>());
    }
  }

  if (!doc.contains("payoffs") || !doc["payoffs"].is_array()) {
    throw GameFileError("payoffs: missing or not a list");
  }
  const json& rows = doc["payoffs"];
  const std::size_t expected = std::size_t{1} << n;
  if (rows.size() != expected) {
    throw GameFileError("payoffs: expected " + std::to_string(expected) +
                        " profiles, got " + std::to_string(rows.size()));
  }
  std::vector<Rational> payoffs;
  payoffs.reserve(expected * n);
  for (std::size_t row = 0; row < rows.size(); ++row) {
    if (!rows[row].is_array() ||
        rows[row].size() != static_cast<std::size_t>(n)) {
      throw GameFileError("payoffs[" + std::to_string(row) + "]: expected " +
                          std::to_string(n) + " entries");
    }
    for (std::size_t column = 0; column < rows[row].size(); ++column) {
      payoffs.push_back(ParseEntry(rows[row][column], row, column));
    }
  }
  return Game(static_cast<int>(n), std::move(payoffs), std::move(names),
              max_players);
}

Game LoadGameFile(const std::string& path, int max_players) {
  std::ifstream in(path);
  if (!in) throw GameFileError(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseGame(buffer.str(), max_players);
  } catch (const GameFileError& e) {
    throw GameFileError(path + ": " + e.what());
  }
}

std::string WriteGame(const Game& game) {
  const int n = game.num_players();
  std::string out = "{\n  \"players\": [";
  for (int i = 0; i < n; ++i) {
    if (i > 0) out += ", ";
    out += json(game.player_names()[i]).dump();
  }
  out += "],\n  \"n\": " + std::to_string(n) + ",\n  \"payoffs\": [\n";
  for (std::uint64_t cell = 0; cell < game.num_profiles(); ++cell) {
    out += "    [";
    for (int i = 0; i < n; ++i) {
      if (i > 0) out += ", ";
      out += "\"" + game.Payoff(cell, i).get_str() + "\"";
    }
    out += cell + 1 < game.num_profiles() ? "],\n" : "]\n";
  }
  out += "  ]\n}\n";
  return out;
}

}  // namespace berge
