// Copyright 2026 The hanabi-qd Authors
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

#include "hanabi_qd/trace.hpp"

namespace hanabi_qd {

void TraceRecorder::record(const Action& action, const GameState& after) {
  trace_.actions.push_back(action);
  trace_.snapshots.push_back({after.score(), after.info_tokens, after.lives});
}

GameState replay(const GameTrace& trace) {
  GameState state = trace.deck ? new_game_from_deck(*trace.deck) : new_game(trace.seed);
  for (size_t i = 0; i < trace.actions.size(); ++i) {
    apply_action(state, trace.actions[i]);
    if (i < trace.snapshots.size()) {
      const TurnSnapshot now{state.score(), state.info_tokens, state.lives};
      if (!(now == trace.snapshots[i]))
        throw GameError("replay diverged from recorded snapshot at turn " + std::to_string(i));
    }
  }
  return state;
}

nlohmann::json to_json(const GameTrace& trace) {
  nlohmann::json j;
  j["seed"] = trace.seed;
  if (trace.deck) {
    auto& deck = j["deck"] = nlohmann::json::array();
    for (const Card& c : *trace.deck) deck.push_back(to_string(c));
  }
  auto& actions = j["actions"] = nlohmann::json::array();
  for (const Action& a : trace.actions) actions.push_back(to_string(a));
  auto& snaps = j["snapshots"] = nlohmann::json::array();
  for (const TurnSnapshot& s : trace.snapshots)
    snaps.push_back({{"score", s.score}, {"info_tokens", s.info_tokens}, {"lives", s.lives}});
  return j;
}

GameTrace trace_from_json(const nlohmann::json& j) {
  GameTrace trace;
  trace.seed = j.at("seed").get<uint64_t>();
  if (j.contains("deck")) {
    std::vector<Card> deck;
    for (const auto& c : j.at("deck")) deck.push_back(parse_card(c.get<std::string>()));
    trace.deck = std::move(deck);
  }
  for (const auto& a : j.at("actions")) trace.actions.push_back(parse_action(a.get<std::string>()));
  if (j.contains("snapshots"))
    for (const auto& s : j.at("snapshots"))
      trace.snapshots.push_back({s.at("score").get<int>(), s.at("info_tokens").get<int>(), s.at("lives").get<int>()});
  return trace;
}

}  // namespace hanabi_qd
