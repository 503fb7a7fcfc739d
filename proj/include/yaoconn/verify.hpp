#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "yaoconn/point_set.hpp"

namespace yaoconn {

// Outcome of one named claim check. On failure, `witness` (when present)
// holds a point set reproducing the failure and `witness_metadata` the
// parameters that produced it, ready to be dumped to a point-set file.
struct ClaimResult {
  std::string name;
  bool pass = false;
  std::string detail;
  std::optional<PointSet> witness;
  std::map<std::string, std::string> witness_metadata;
};

// Knobs shared by the claim suites. `trials` and `n` drive the randomized
// radius-bound suites; `samples` drives the metric property suites.
struct SuiteOptions {
  int trials = 500;
  int n = 40;
  std::uint64_t seed = 20260817ull;
  long long samples = 100000;
  double cap = 4.0;
};

// Grid of y4-lb constructions: each is checked to disconnect Y_4 over its
// target disk graph and to reconnect at radius sqrt(2).
std::vector<ClaimResult> suite_y4_family(const SuiteOptions& opt);

// Randomized bound: connectivity radius for k=4 never exceeds sqrt(2),
// sampled over both instance models.
std::vector<ClaimResult> suite_y4_radius(const SuiteOptions& opt);

// Grid of y3-lb constructions: each is checked to disconnect Y_3 over its
// target disk graph (with the pq edge absent) and to reconnect at 2/sqrt(3).
std::vector<ClaimResult> suite_y3_family(const SuiteOptions& opt);

// Randomized bound: connectivity radius for k=3 never exceeds 2/sqrt(3).
std::vector<ClaimResult> suite_y3_radius(const SuiteOptions& opt);

// y2-lb constructions for growing d: Y_2 stays disconnected and the chain
// length tracks the derived minimum within +-1.
std::vector<ClaimResult> suite_y2_family(const SuiteOptions& opt);

// Metric property suites: rhombus-distance symmetry and Euclidean sandwich,
// strict rhombus contraction for admissible half-cone triples, and the
// Chebyshev sandwich d_inf <= |ab| <= sqrt(2) d_inf.
std::vector<ClaimResult> suite_lemmas(const SuiteOptions& opt);

// Dispatch by suite id: "1", "2", "3", "4", "y2", "lemmas", or "all".
// Throws std::invalid_argument for an unknown id.
std::vector<ClaimResult> run_suites(const std::string& which, const SuiteOptions& opt);

}  // namespace yaoconn
