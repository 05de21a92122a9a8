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

#include "hanabi_qd/agent.hpp"

#include <sstream>
#include <stdexcept>

namespace hanabi_qd {

std::string to_string(const Chromosome& chromosome) {
  std::string out;
  for (int i = 0; i < kChromosomeLength; ++i) {
    if (i) out += ',';
    out += std::to_string(chromosome.genes[i]);
  }
  return out;
}

Chromosome parse_chromosome(const std::string& text) {
  Chromosome chromosome;
  std::istringstream in(text);
  std::string item;
  int n = 0;
  while (std::getline(in, item, ',')) {
    if (n >= kChromosomeLength) throw std::invalid_argument("chromosome has more than 15 genes");
    size_t used = 0;
    int gene = -1;
    try {
      gene = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad gene '" + item + "'");
    }
    if (used != item.size() || gene < 0 || gene >= kNumRules)
      throw std::invalid_argument("gene '" + item + "' is not a rule id in 0..134");
    chromosome.genes[n++] = static_cast<uint8_t>(gene);
  }
  if (n != kChromosomeLength) throw std::invalid_argument("chromosome needs exactly 15 genes");
  return chromosome;
}

Chromosome random_chromosome(Rng& rng) {
  Chromosome chromosome;
  for (auto& gene : chromosome.genes) gene = static_cast<uint8_t>(rng.below(kNumRules));
  return chromosome;
}

Action fallback_action(const PlayerView& view) {
  if (view.info_tokens < kMaxInfoTokens && view.own_size > 0) return Action::discard(0);
  return Action::hint_rank(view.partner_id(), view.partner.cards[0].rank);
}

int firing_gene(const Chromosome& chromosome, RuleContext& context) {
  const RuleCatalog& rules = catalog();
  for (int i = 0; i < kChromosomeLength; ++i)
    if (apply_rule(rules[chromosome.genes[i]], context)) return i;
  return -1;
}

Action decide(const Chromosome& chromosome, RuleContext& context) {
  const RuleCatalog& rules = catalog();
  for (uint8_t gene : chromosome.genes)
    if (auto action = apply_rule(rules[gene], context)) return *action;
  return fallback_action(context.view());
}

Action decide(const Chromosome& chromosome, const PlayerView& view) {
  RuleContext context(view);
  return decide(chromosome, context);
}

Chromosome mutate(const Chromosome& chromosome, Rng& rng, const VariationParams& params) {
  Chromosome child = chromosome;
  for (auto& gene : child.genes)
    if (rng.bernoulli(params.mutation_rate)) gene = static_cast<uint8_t>(rng.below(kNumRules));
  return child;
}

Chromosome crossover(const Chromosome& a, const Chromosome& b, Rng& rng, const VariationParams& params) {
  Chromosome child;
  for (int i = 0; i < kChromosomeLength; ++i)
    child.genes[i] = rng.bernoulli(params.gene_from_first) ? a.genes[i] : b.genes[i];
  return child;
}

Chromosome make_offspring(const Chromosome& elite, const Chromosome& mate, Rng& rng, const VariationParams& params) {
  Chromosome child = rng.bernoulli(params.crossover_rate) ? crossover(elite, mate, rng, params) : elite;
  return mutate(child, rng, params);
}

}  // namespace hanabi_qd
