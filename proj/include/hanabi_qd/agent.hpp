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

#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "hanabi_qd/game.hpp"
#include "hanabi_qd/rng.hpp"
#include "hanabi_qd/rules.hpp"

namespace hanabi_qd {

inline constexpr int kChromosomeLength = 15;

// Ordered rule ids. Duplicates and rules that never fire are allowed.
struct Chromosome {
  std::array<uint8_t, kChromosomeLength> genes{};

  bool operator==(const Chromosome&) const = default;
  auto operator<=>(const Chromosome&) const = default;
};

std::string to_string(const Chromosome& chromosome);  // "a,b,...,o"
Chromosome parse_chromosome(const std::string& text);
Chromosome random_chromosome(Rng& rng);

// First rule in gene order that proposes an action wins. If none fires:
// discard the oldest card when discarding is legal, otherwise hint the rank
// of the partner's oldest card.
Action decide(const Chromosome& chromosome, const PlayerView& view);
Action decide(const Chromosome& chromosome, RuleContext& context);
Action fallback_action(const PlayerView& view);

// Index of the gene that produced the decision, or -1 for the fallback.
int firing_gene(const Chromosome& chromosome, RuleContext& context);

struct VariationParams {
  double mutation_rate = 0.1;
  double crossover_rate = 0.5;
  double gene_from_first = 0.5;
};

Chromosome mutate(const Chromosome& chromosome, Rng& rng, const VariationParams& params = {});
Chromosome crossover(const Chromosome& a, const Chromosome& b, Rng& rng, const VariationParams& params = {});
// Optional uniform crossover with the mate, then mutation.
Chromosome make_offspring(const Chromosome& elite, const Chromosome& mate, Rng& rng,
                          const VariationParams& params = {});

}  // namespace hanabi_qd
