#pragma once

#include <optional>
#include <vector>

#include "roisim/policy.hpp"
#include "roisim/rng.hpp"

namespace roisim {

/// Knobs of the evolutionary strategy. `genes` equals the return period so
/// each gene is the fraction invested at one step of the cycle.
struct GaConfig {
  int population = 1000;     // chromosomes per generation
  int genes = 100;           // genes per chromosome (one per cycle step)
  double p_crossover = 0.7;  // per tournament pair
  double p_mutation = 0.01;  // per gene of each child
  double elitism = 0.3;      // fraction copied unchanged, in [0, 0.5]

  void validate() const;
};

struct Chromosome {
  std::vector<double> genes;  // each in (q_min, q_max)
  double fitness = 0.0;       // accumulated over the current generation
};

struct Population {
  std::vector<Chromosome> members;
  long generation = 0;
  int steps_accumulated = 0;  // fitness updates applied this generation
  std::optional<Chromosome> best_previous;  // top of the previous generation
};

/// Fresh population: every gene an independent uniform draw from the open
/// interval (q_min, q_max), all fitnesses zero, generation 0.
Population init_population(const GaConfig& cfg, const QBounds& bounds,
                           RngStream& rng);

/// Credits every chromosome with r * genes[t mod G]. Fitness is hypothetical
/// per-unit gain: it depends only on the shared return, not on any budget.
void accumulate_fitness(Population& pop, double r, long t);

/// Generation turnover. Requires a full generation of accumulated fitness
/// (G steps). The new population keeps the top floor(elitism * C)
/// chromosomes unchanged and fills the rest two at a time from tournaments
/// of size two (two independent uniformly drawn pairs, with replacement;
/// each pair's fitness winner is a parent). With probability p_crossover the
/// parents exchange tails at a cut uniform in {1, .., G-1}; every child gene
/// then mutates with probability p_mutation to a fresh uniform draw in
/// (q_min, q_max). Ranking ties break toward the lower original index. If an
/// odd number of slots remains, the final tournament contributes one child
/// and its sibling is discarded before mutation.
///
/// Draw order per tournament round, for replay: four pair indices, one
/// crossover decision, one cut point (only when crossing), then per gene of
/// child one and then child two a mutation decision followed (on mutation)
/// by the replacement value.
void evolve(Population& pop, const GaConfig& cfg, const QBounds& bounds,
            RngStream& rng);

/// Fraction invested at step t: gene t mod G of the previous generation's
/// best chromosome; q_min while no generation has completed.
double ga_fraction(const Population& pop, long t, const QBounds& bounds);

/// Index of the highest-fitness member (lowest index wins ties).
std::size_t best_index(const Population& pop);

}  // namespace roisim
