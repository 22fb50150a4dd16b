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

#ifndef BERGE_GAME_FILE_H_
#define BERGE_GAME_FILE_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "berge/game.h"

namespace berge {

// Malformed or inconsistent game document. The message names the offending
// location, e.g. "payoffs[3][1]: not an exact number: 'x'".
class GameFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads a JSON document
//
//   {"players": ["F", "S", "T"],          (optional)
//    "n": 3,
//    "payoffs": [["2", "2", "2"], ...]}   (2^n rows of n entries)
//
// Row k holds the payoffs of the profile with index k (player 0 is the most
// significant bit). Entries are strings holding an integer, a decimal or a
// fraction "a/b"; plain JSON integers are accepted too. Floating-point JSON
// numbers are rejected because they are not exact.
Game ParseGame(std::string_view text, int max_players = kDefaultMaxPlayers);

Game LoadGameFile(const std::string& path,
                  int max_players = kDefaultMaxPlayers);

// Inverse of ParseGame, one profile per line.
std::string WriteGame(const Game& game);

}  // namespace berge

#endif  // BERGE_GAME_FILE_H_
