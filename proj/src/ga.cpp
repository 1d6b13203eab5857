#include "roisim/ga.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace roisim {

void GaConfig::validate() const {
  if (population < 1) throw std::invalid_argument("population must be >= 1");
  if (genes < 1) throw std::invalid_argument("gene count must be >= 1");
  if (!(p_crossover >= 0.0 && p_crossover <= 1.0)) {
    throw std::invalid_argument("crossover probability must be in [0,1]");
  }
  if (!(p_mutation >= 0.0 && p_mutation <= 1.0)) {
    throw std::invalid_argument("mutation probability must be in [0,1]");
  }
  if (!(elitism >= 0.0 && elitism <= 0.5)) {
    throw std::invalid_argument("elitism fraction must be in [0, 0.5]");
  }
}

namespace {

double open_uniform(RngStream& rng, const QBounds& b) {
  // Endpoints are probability-zero; redraw to honor the open interval.
  double v;
  do {
    v = rng.uniform(b.q_min, b.q_max);
  } while (v == b.q_min || v == b.q_max);
  return v;
}

// Ranking by fitness, descending, ties toward the lower original index.
std::vector<std::size_t> rank_indices(const Population& pop) {
  std::vector<std::size_t> idx(pop.members.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return pop.members[a].fitness > pop.members[b].fitness;
  });
  return idx;
}

}  // namespace

Population init_population(const GaConfig& cfg, const QBounds& bounds,
                           RngStream& rng) {
  cfg.validate();
  bounds.validate();
  Population pop;
  pop.members.resize(static_cast<std::size_t>(cfg.population));
  for (auto& member : pop.members) {
    member.genes.resize(static_cast<std::size_t>(cfg.genes));
    for (auto& g : member.genes) g = open_uniform(rng, bounds);
    member.fitness = 0.0;
  }
  return pop;
}

void accumulate_fitness(Population& pop, double r, long t) {
  if (pop.members.empty()) return;
  const auto g = static_cast<long>(pop.members[0].genes.size());
  const auto k = static_cast<std::size_t>(t % g);
  for (auto& member : pop.members) {
    member.fitness += r * member.genes[k];
  }
  ++pop.steps_accumulated;
}

void evolve(Population& pop, const GaConfig& cfg, const QBounds& bounds,
            RngStream& rng) {
  if (pop.members.empty()) throw std::logic_error("empty population");
  const int genes = static_cast<int>(pop.members[0].genes.size());
  if (pop.steps_accumulated != genes) {
    throw std::logic_error("evolve called mid-generation: " +
                           std::to_string(pop.steps_accumulated) + " of " +
                           std::to_string(genes) + " fitness steps");
  }
  const std::size_t count = pop.members.size();
  const auto ranked = rank_indices(pop);
  pop.best_previous = pop.members[ranked[0]];

  const auto elite =
      static_cast<std::size_t>(std::floor(cfg.elitism * count));
  std::vector<Chromosome> next;
  next.reserve(count);
  for (std::size_t i = 0; i < elite && i < count; ++i) {
    next.push_back(pop.members[ranked[i]]);
  }

  auto tournament_winner = [&]() -> const Chromosome& {
    const auto a = static_cast<std::size_t>(rng.uniform_int(count));
    const auto b = static_cast<std::size_t>(rng.uniform_int(count));
    // Ties go to the first draw.
    return pop.members[b].fitness > pop.members[a].fitness ? pop.members[b]
                                                           : pop.members[a];
  };
  auto mutate = [&](Chromosome& c) {
    for (auto& g : c.genes) {
      if (rng.next_double() < cfg.p_mutation) g = open_uniform(rng, bounds);
    }
  };

  while (next.size() < count) {
    const Chromosome& parent1 = tournament_winner();
    const Chromosome& parent2 = tournament_winner();
    Chromosome child1 = parent1;
    Chromosome child2 = parent2;
    if (rng.next_double() < cfg.p_crossover && genes > 1) {
      const auto cut = static_cast<std::size_t>(
          1 + rng.uniform_int(static_cast<std::uint64_t>(genes - 1)));
      for (std::size_t k = cut; k < static_cast<std::size_t>(genes); ++k) {
        std::swap(child1.genes[k], child2.genes[k]);
      }
    }
    mutate(child1);
    child1.fitness = 0.0;
    next.push_back(std::move(child1));
    if (next.size() < count) {
      mutate(child2);
      child2.fitness = 0.0;
      next.push_back(std::move(child2));
    }
  }

  for (std::size_t i = 0; i < elite && i < count; ++i) next[i].fitness = 0.0;
  pop.members = std::move(next);
  pop.steps_accumulated = 0;
  ++pop.generation;
}

double ga_fraction(const Population& pop, long t, const QBounds& bounds) {
  if (t < 0) throw std::invalid_argument("time step must be >= 0");
  if (!pop.best_previous) return bounds.q_min;
  const auto g = static_cast<long>(pop.best_previous->genes.size());
  return pop.best_previous->genes[static_cast<std::size_t>(t % g)];
}

std::size_t best_index(const Population& pop) {
  if (pop.members.empty()) throw std::logic_error("empty population");
  std::size_t best = 0;
  for (std::size_t i = 1; i < pop.members.size(); ++i) {
    if (pop.members[i].fitness > pop.members[best].fitness) best = i;
  }
  return best;
}

}  // namespace roisim
