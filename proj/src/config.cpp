#include "roisim/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace roisim {

namespace {

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid number for " + key + ": '" + value +
                                "'");
  }
}

long parse_long(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid integer for " + key + ": '" + value +
                                "'");
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid seed for " + key + ": '" + value +
                                "'");
  }
}

}  // namespace

KeyValueConfig KeyValueConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file: " + path);
  KeyValueConfig config;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                  ": expected key=value");
    }
    config.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return config;
}

void KeyValueConfig::set(const std::string& key, const std::string& value) {
  values_[key] = value;
}

void KeyValueConfig::merge_environment(const std::string& prefix) {
  static const char* kKeys[] = {
      "strategies", "mode",      "sigma1", "sigma2", "period", "t_max",
      "trials",     "seed",      "q_min",  "q_max",  "ma_m",   "mls_m",
      "iur_gamma",  "ga_c",      "ga_pc",  "ga_pm",  "ga_s",   "q0",
      "out_dir",    "threads"};
  for (const char* key : kKeys) {
    std::string env_name = prefix;
    for (const char* p = key; *p; ++p) {
      env_name += static_cast<char>(std::toupper(*p));
    }
    if (const char* value = std::getenv(env_name.c_str())) {
      set(key, value);
    }
  }
}

std::optional<std::string> KeyValueConfig::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void Settings::apply(const KeyValueConfig& config) {
  for (const auto& [key, value] : config.entries()) {
    if (key == "strategies") {
      strategies = split_list(value);
      if (strategies.empty()) {
        throw std::invalid_argument("strategies: empty list");
      }
    } else if (key == "mode") {
      if (value != "rs" && value != "ra") {
        throw std::invalid_argument("mode must be rs or ra, got '" + value +
                                    "'");
      }
      mode = value;
    } else if (key == "sigma1") {
      sigma1 = parse_double(key, value);
    } else if (key == "sigma2") {
      sigma2 = parse_double(key, value);
    } else if (key == "period") {
      period = static_cast<int>(parse_long(key, value));
    } else if (key == "t_max") {
      t_max = parse_long(key, value);
    } else if (key == "trials") {
      trials = static_cast<int>(parse_long(key, value));
    } else if (key == "seed") {
      seed = parse_u64(key, value);
    } else if (key == "q_min") {
      q_min = parse_double(key, value);
    } else if (key == "q_max") {
      q_max = parse_double(key, value);
    } else if (key == "ma_m") {
      ma_m = static_cast<int>(parse_long(key, value));
    } else if (key == "mls_m") {
      mls_m = static_cast<int>(parse_long(key, value));
    } else if (key == "iur_gamma") {
      iur_gamma = parse_double(key, value);
    } else if (key == "ga_c") {
      ga_c = static_cast<int>(parse_long(key, value));
    } else if (key == "ga_pc") {
      ga_pc = parse_double(key, value);
    } else if (key == "ga_pm") {
      ga_pm = parse_double(key, value);
    } else if (key == "ga_s") {
      ga_s = parse_double(key, value);
    } else if (key == "q0") {
      q0 = parse_double(key, value);
    } else if (key == "out_dir") {
      out_dir = value;
    } else if (key == "threads") {
      threads = static_cast<int>(parse_long(key, value));
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
}

StrategySpec Settings::make_strategy(const std::string& token) const {
  const ActionMode action =
      mode == "ra" ? ActionMode::RiskAvoiding : ActionMode::RiskSeeking;
  if (token == "q0") return StrategySpec::constant(q0);
  if (token == "ma") return StrategySpec::moving_average(ma_m, action);
  if (token == "mls") return StrategySpec::least_squares(mls_m, action);
  if (token == "iur") return StrategySpec::incremental(iur_gamma, action);
  if (token == "ga") {
    GaConfig cfg;
    cfg.population = ga_c;
    cfg.genes = period;
    cfg.p_crossover = ga_pc;
    cfg.p_mutation = ga_pm;
    cfg.elitism = ga_s;
    return StrategySpec::genetic(cfg);
  }
  if (token == "sw") return StrategySpec::square_wave();
  throw std::invalid_argument("unknown strategy '" + token +
                              "' (expected q0, ma, mls, iur, ga or sw)");
}

std::vector<StrategySpec> Settings::make_strategies() const {
  std::vector<StrategySpec> specs;
  specs.reserve(strategies.size());
  for (const auto& token : strategies) specs.push_back(make_strategy(token));
  return specs;
}

ExperimentConfig Settings::make_experiment() const {
  ExperimentConfig config;
  config.strategies = make_strategies();
  config.returns = ReturnParams::periodic(period, sigma1, sigma2);
  config.t_max = t_max;
  config.n_trials = trials;
  config.master_seed = seed;
  config.bounds = bounds();
  config.n_threads = threads;
  return config;
}

std::map<std::string, std::string> Settings::echo() const {
  std::map<std::string, std::string> out;
  std::string joined;
  for (const auto& s : strategies) {
    if (!joined.empty()) joined += ',';
    joined += s;
  }
  out["strategies"] = joined;
  out["mode"] = mode;
  out["sigma1"] = std::to_string(sigma1);
  out["sigma2"] = std::to_string(sigma2);
  out["period"] = std::to_string(period);
  out["t_max"] = std::to_string(t_max);
  out["trials"] = std::to_string(trials);
  out["seed"] = std::to_string(seed);
  out["q_min"] = std::to_string(q_min);
  out["q_max"] = std::to_string(q_max);
  out["ma_m"] = std::to_string(ma_m);
  out["mls_m"] = std::to_string(mls_m);
  out["iur_gamma"] = std::to_string(iur_gamma);
  out["ga_c"] = std::to_string(ga_c);
  out["ga_pc"] = std::to_string(ga_pc);
  out["ga_pm"] = std::to_string(ga_pm);
  out["ga_s"] = std::to_string(ga_s);
  out["q0"] = std::to_string(q0);
  out["out_dir"] = out_dir;
  out["threads"] = std::to_string(threads);
  return out;
}

}  // namespace roisim
