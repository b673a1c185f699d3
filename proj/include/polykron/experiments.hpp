#ifndef POLYKRON_EXPERIMENTS_HPP
#define POLYKRON_EXPERIMENTS_HPP

#include <map>
#include <string>
#include <vector>

#include "polykron/graph.hpp"

namespace polykron {

struct ExperimentBounds {
  int max_n = 128;        // search cap while the experiment runs
  int nm_limit = 3;       // N, M grid bound for the prism factors
  int quad_m = 8;         // largest m for the quadrangulation factors
  int script_len = 3;     // longest transformation script
  long long budget = 2'000'000;
  std::string input_path;  // graph6 stream for ingest_classify
};

enum class InstanceStatus { pass, fail, budget };

struct InstanceRecord {
  std::string key;
  InstanceStatus status = InstanceStatus::pass;
  std::string note;
  std::map<std::string, std::string> data;
};

struct ExperimentReport {
  std::string name;
  ExperimentBounds bounds;
  std::vector<InstanceRecord> instances;
  bool pass = false;
  bool budget_hit = false;
  double wall_seconds = 0.0;

  int exit_code() const { return pass ? (budget_hit ? 3 : 0) : 1; }
};

const std::vector<std::string>& experiment_names();

ExperimentReport run_experiment(const std::string& name, const ExperimentBounds& bounds);

// Deterministic serialization; timing is excluded unless asked for, so that
// reports from identical inputs are byte-identical.
std::string serialize_report(const ExperimentReport& rep, bool include_timing = false);

struct CatalogEntry {
  std::string family;
  std::string params;
  std::string graph6;
  std::string provenance;  // paper-figure | derived-representative
};

const std::vector<CatalogEntry>& catalog();

}  // namespace polykron

#endif
