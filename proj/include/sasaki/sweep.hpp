#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sasaki/join.hpp"

namespace sasaki {

/// Sturm-certified root counts for one parameter tuple.
struct SweepRow {
  JoinParams params;
  int q_pos_roots = 0;
  int f_pos_roots = 0;
  int g1_pos_roots = 0;
  int g2_pos_roots = 0;
  int excluded_points = 0;
  int h_critical_count = 0;   // distinct positive roots of Q * F
  int se_critical_count = 0;  // distinct positive roots of F * g1 * g2, minus excluded

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

SweepRow sweep_row(const JoinParams& p);

enum class SweepVariable { Genus, L2 };

std::string_view to_string(SweepVariable v);
std::optional<SweepVariable> parse_sweep_variable(std::string_view s);

struct SweepSpec {
  std::pair<std::int64_t, std::int64_t> l{1, 1};
  std::pair<std::int64_t, std::int64_t> w{1, 1};
  std::int64_t genus = 0;  // fixed genus when sweeping l2
  SweepVariable vary = SweepVariable::Genus;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;       // ascending in the varied parameter
  std::vector<std::string> skipped; // notices for tuples failing validation
};

/// Evaluates every tuple of the range on `threads` workers (0 = hardware
/// concurrency). Output order never depends on scheduling.
SweepResult run_sweep(const SweepSpec& spec, unsigned threads = 0);

/// Throws ValidationError when (l, w) are not coprime pairs or the genus
/// range is invalid.
std::vector<SweepRow> sweep_genus(std::pair<std::int64_t, std::int64_t> l, std::pair<std::int64_t, std::int64_t> w,
                                  std::int64_t g_lo, std::int64_t g_hi, unsigned threads = 0);

struct Transition {
  std::optional<std::int64_t> value;  // first parameter value satisfying the predicate
  bool monotone = true;               // predicate never reverts to false after value
  std::vector<SweepRow> rows;
};

/// Throws std::invalid_argument on an empty range.
Transition find_transition(const SweepSpec& spec, const std::function<bool(const SweepRow&)>& predicate,
                           unsigned threads = 0);

}  // namespace sasaki
