#pragma once

#include "movcone/coxeter.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <utility>
#include <vector>

namespace movcone {

// Partitions of `total` into at most `max_parts` positive parts, each written
// in ascending order. Emitted in lexicographic order of the tuples
// zero-padded on the left to length max_parts, so (5), (1,4), (2,3),
// (1,1,3), (1,2,2) for total 5 and max_parts 3.
class PartitionStream {
public:
  PartitionStream(int total, int max_parts);
  std::optional<std::vector<int>> next();

private:
  bool advance();
  int total_;
  int max_parts_;
  int parts_ = 1;
  std::vector<int> current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<std::vector<int>> enumerate_partitions(int total, int max_parts);

struct SweepTask {
  int n = 2;
  int j_size = 2;
  std::vector<int> partition;  // ascending, positive, sums to j_size
  friend bool operator==(const SweepTask&, const SweepTask&) = default;
};

struct TaskVerdict {
  bool lorentzian = false;
  Inertia inertia;
};

// Signature of B_J through its block structure: the within-block zero-sum
// vectors contribute |J| - p positive directions, the rest is the p x p form
// on block indicator vectors.
TaskVerdict check_task(const SweepTask& t);
// Same verdict from the full |J| x |J| matrix.
TaskVerdict check_task_naive(const SweepTask& t);

// Tasks with a single block or with all parts equal to 1.
bool is_anchor(const SweepTask& t);

struct Counterexample {
  SweepTask task;
  Inertia inertia;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct SweepReport {
  std::pair<int, int> n_range;
  std::pair<int, int> j_range;
  std::uint64_t tasks = 0;
  std::uint64_t anchors = 0;
  std::vector<Counterexample> counterexamples;
  std::optional<double> seconds;
  bool complete = false;
};

struct SweepOptions {
  int n_min = 2;
  int n_max = 2;
  int j_min = 2;
  int j_max = 2;
  int threads = 1;
  std::optional<std::filesystem::path> checkpoint;
  // Counterexamples are appended here, with the full matrix, as soon as found.
  std::optional<std::filesystem::path> counterexample_log;
  // Stop after this many newly processed (n, jSize) cells; for testing resume.
  std::optional<int> max_cells;
};

// Checks every partition of every |J| in [j_min, j_max] into at most n parts
// for every n in [n_min, n_max]. Cells are visited with n outer and |J|
// inner; with a checkpoint path, progress is saved after each cell and an
// existing checkpoint for the same ranges is resumed.
SweepReport sweep(const SweepOptions& opts);

} // namespace movcone
