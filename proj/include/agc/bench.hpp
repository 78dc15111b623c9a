#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agc/report.hpp"
#include "agc/workloads.hpp"

namespace agc {

struct WorkloadSpec {
  std::string kind;           // "fib" | "nq" | "mx"
  std::uint64_t arg = 0;      // k | board size | matrix dim
  std::uint64_t threshold = 0;  // fib only; 0 means the default cutoff
  bool distributed = false;     // mx only: wider worker fan-out
};

std::string workload_label(const WorkloadSpec& w);
MutationTrace gen_workload(const WorkloadSpec& w);

// "fib:12", "fib:12:1", "nq:6", "mx:8", "dmx:8"
std::optional<WorkloadSpec> workload_from_string(std::string_view s);

struct SuiteSpec {
  std::vector<WorkloadSpec> workloads;
  std::vector<Method> methods;
  std::vector<Strategy> strategies;
  std::size_t gc_every = 5;
  std::uint64_t seed = 0;
};

struct BenchCell {
  std::string workload;
  Method method = Method::direct;
  Strategy strategy = Strategy::two_scan;
  GcReport report;
  bool ok = true;
  std::string note;
};

struct BenchResult {
  std::vector<BenchCell> cells;  // sorted by workload, method, strategy
  bool all_ok = true;
};

// Replays every workload twice per (method, strategy) cell: once without
// collection as the baseline and once with periodic collection. A cell fails
// on a safety violation, an actor-conservation mismatch, a back-pointer
// method disagreeing with the semantic oracle, or collection not costing
// more ops than the baseline while cycles ran. Dual-node disagreements are
// recorded in the note instead; they are expected on some shapes.
BenchResult run_suite(const SuiteSpec& suite);

nlohmann::json bench_json(const BenchResult& res);
std::string bench_table(const BenchResult& res);

}  // namespace agc
