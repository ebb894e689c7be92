#pragma once

// Workloads and reporting for the naive-vs-Cayley benchmark.
//
// Every suite builds a left-nested chain of n monoid multiplications, once
// on the plain structure and once through its Cayley representation, and
// measures wall time together with the deterministic operation count from
// instrument::tick().

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/observation.hpp"

namespace cayley::bench {

/// Bad configuration: unknown suite or format, non-increasing sizes, etc.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Suite { dlist, codensity, freeap, prearrow };
enum class Variant { naive, cayley };
enum class Format { json, csv, table };

std::string_view name(Suite s) noexcept;
std::string_view name(Variant v) noexcept;
std::string_view name(Format f) noexcept;

/// "all" expands to every suite.
std::vector<Suite> parse_suites(std::string_view id);
Format parse_format(std::string_view id);

std::span<const Suite> all_suites() noexcept;

/// dlist: {1024, 2048, 4096, 8192}; tree-building suites: {128, 256, 512}.
std::vector<std::size_t> default_sizes(Suite s);

/// Upper bound on the nodes a single run may construct.
inline constexpr std::uint64_t kMaxNodes = std::uint64_t{1} << 24;

/// Nodes the naive variant constructs at size n (tree suites), or the cells
/// alive at once (dlist, where intermediate copies are released).
std::uint64_t node_estimate(Suite s, std::size_t n) noexcept;

struct BenchConfig {
  std::vector<Suite> suites;
  /// Empty means the per-suite defaults.
  std::vector<std::size_t> sizes;
  std::size_t repeats = 5;
  std::size_t warmup = 1;
  Format output = Format::table;
  std::uint64_t seed = 0;
};

/// Throws UsageError when the config is unusable.
void validate(const BenchConfig& config);

struct Cell {
  Suite suite;
  Variant variant;
  std::size_t size;
  std::uint64_t median_ns;
  std::uint64_t op_count;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Ratios between the two sizes of the largest doubling (n, 2n) present, or
/// the last two sizes when no doubling exists.
struct Growth {
  Suite suite;
  Variant variant;
  std::size_t from;
  std::size_t to;
  double time_ratio;
  double op_ratio;
  friend bool operator==(const Growth&, const Growth&) = default;
};

struct BenchReport {
  std::vector<Cell> cells;
  std::vector<Growth> growth;
  friend bool operator==(const BenchReport&, const BenchReport&) = default;

  const Cell* find(Suite s, Variant v, std::size_t n) const;
  const Growth* growth_of(Suite s, Variant v) const;
};

/// One measured run.
struct Outcome {
  Observation observation;
  std::uint64_t ops = 0;
  std::uint64_t ns = 0;
};

/// Builds and collapses the chain of size n. Throws UsageError when the
/// memory guard refuses n.
Outcome run_once(Suite s, Variant v, std::size_t n, std::uint64_t seed);

/// Compares naive and Cayley observations for every n in [1, max_n].
/// Returns a description of the first mismatch.
std::optional<std::string> check_agreement(Suite s, std::size_t max_n, std::uint64_t seed);

BenchReport run(const BenchConfig& config);

std::string emit(const BenchReport& report, Format format);

/// Inverse of emit(report, Format::json).
BenchReport report_from_json(std::string_view json);

}  // namespace cayley::bench
