#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nomaee/optimizer.hpp"
#include "nomaee/tdma.hpp"

namespace nomaee {

enum class Strategy { Eepa, MaxSe, Tdma };
enum class SweepVariable { TotalPowerDbm, RMin, CaseLabel };

const char* strategy_name(Strategy s);
const char* sweep_variable_name(SweepVariable v);

/// One averaged experiment: a parameter sweep repeated over seeded channel
/// realizations. Channel draws depend only on (seed, trial index), so every
/// sweep value sees the same fading per trial and curves are paired.
struct ExperimentSpec {
  SweepVariable sweep_variable = SweepVariable::TotalPowerDbm;
  std::vector<double> sweep_values;  // dBm grid, rate grid, or 1-based case ids
  int trials = 10000;
  int users = 2;
  // Distance layouts. One entry unless sweeping CaseLabel, where sweep value j
  // selects distance_cases[j - 1].
  std::vector<std::vector<double>> distance_cases;
  std::vector<double> r_min;  // per-user floors (fixed unless sweeping RMin)
  std::vector<Strategy> strategies{Strategy::Eepa, Strategy::MaxSe,
                                   Strategy::Tdma};
  std::uint64_t seed = 1;
  double total_power_dbm = 30.0;  // fixed unless swept
  double noise_power_dbm = -70.0;
  double circuit_power_dbm = 30.0;
  double pathloss_exponent = 3.0;
  std::string label_suffix;  // appended to strategy names, e.g. " K=2"

  OptimizerConfig optimizer;
  TdmaConfig tdma;
};

/// Throws InvalidInputError on an inconsistent spec (empty grids, size
/// mismatches, out-of-range case ids).
void validate(const ExperimentSpec& spec);

/// One point of an averaged EE curve. Infeasible trials contribute ee = 0 to
/// the mean (they are counted, not dropped); feasible_fraction reports how
/// often the strategy could serve the rate floors at all.
struct SweepRecord {
  std::string strategy;
  double sweep_value = 0.0;
  double mean_ee = 0.0;
  double stderr_ee = 0.0;
  double feasible_fraction = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;

  bool operator==(const SweepRecord&) const = default;
};

struct StrategyOutcome {
  Strategy strategy;
  double ee = 0.0;
  bool feasible = false;
};

/// Evaluates every requested strategy on the channel drawn for (spec.seed,
/// trial_index) at the parameters selected by sweep_index.
std::vector<StrategyOutcome> run_trial(const ExperimentSpec& spec,
                                       std::size_t sweep_index,
                                       std::size_t trial_index);

/// Runs the whole sweep. Records are ordered strategy-major, then by sweep
/// value in the order given.
std::vector<SweepRecord> run_sweep(const ExperimentSpec& spec);

/// EE versus total power, rate floors of 1 bit/s/Hz, all users at 80 m.
/// One spec per user count; default grid 0..50 dBm step 2.
ExperimentSpec figure1_spec(std::uint64_t seed, int trials, int users);
std::vector<SweepRecord> sweep_figure1(std::uint64_t seed, int trials = 10000,
                                       const std::vector<int>& user_counts = {2, 3});

/// EE versus the common rate floor at 20 dBm budget (grid 0.25..6 step 0.25).
ExperimentSpec figure2_spec(std::uint64_t seed, int trials, int users);
std::vector<SweepRecord> sweep_figure2(std::uint64_t seed, int trials = 10000,
                                       const std::vector<int>& user_counts = {2, 3});

/// EE versus total power for four 3-user distance layouts, EE-optimal
/// strategy only. Fading draws are shared across cases per trial.
ExperimentSpec figure3_spec(std::uint64_t seed, int trials, int case_index);
std::vector<SweepRecord> sweep_figure3(std::uint64_t seed, int trials = 10000);

/// The four distance layouts of the location study.
const std::vector<std::vector<double>>& figure3_cases();

}  // namespace nomaee
