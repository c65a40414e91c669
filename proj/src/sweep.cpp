#include "sasaki/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "sasaki/roots.hpp"

namespace sasaki {

namespace {

int positive_root_count(const Poly& p) {
  auto [stripped, _] = gcd_and_squarefree(p).squarefree_part.strip_zero_roots();
  if (stripped.degree() <= 0) return 0;
  return sturm_count(stripped, 0, std::nullopt);
}

std::int64_t varied_value(const JoinParams& p, SweepVariable v) { return v == SweepVariable::Genus ? p.genus : p.l2; }

}  // namespace

SweepRow sweep_row(const JoinParams& p) {
  p.validate();
  const Poly Q = q_polynomial(p);
  const Poly F = f_polynomial(p);
  const Poly g1 = g1_polynomial(p);
  const Poly g2 = g2_polynomial(p);

  SweepRow row;
  row.params = p;
  row.q_pos_roots = positive_root_count(Q);
  row.f_pos_roots = positive_root_count(F);
  row.g1_pos_roots = positive_root_count(g1);
  row.g2_pos_roots = positive_root_count(g2);
  row.h_critical_count = positive_root_count(Q * F);

  // A g2 root at w2/w1 is dropped unless F or g1 also vanishes there.
  const Rational excluded_b(static_cast<long>(p.w2), static_cast<long>(p.w1));
  if (g2(excluded_b) == 0 && F(excluded_b) != 0 && g1(excluded_b) != 0) row.excluded_points = 1;
  row.se_critical_count = positive_root_count(F * g1 * g2) - row.excluded_points;
  return row;
}

std::string_view to_string(SweepVariable v) { return v == SweepVariable::Genus ? "genus" : "l2"; }

std::optional<SweepVariable> parse_sweep_variable(std::string_view s) {
  if (s == "genus") return SweepVariable::Genus;
  if (s == "l2") return SweepVariable::L2;
  return std::nullopt;
}

SweepResult run_sweep(const SweepSpec& spec, unsigned threads) {
  if (spec.lo > spec.hi) throw std::invalid_argument("empty sweep range");
  std::vector<JoinParams> tuples;
  SweepResult result;
  for (std::int64_t v = spec.lo; v <= spec.hi; ++v) {
    JoinParams p{spec.genus, spec.l.first, spec.l.second, spec.w.first, spec.w.second};
    if (spec.vary == SweepVariable::Genus) p.genus = v;
    else p.l2 = v;
    if (!p.is_valid()) {
      try {
        p.validate();
      } catch (const ValidationError& e) {
        result.skipped.push_back("skipping " + to_string(p) + ": " + e.what());
      }
      continue;
    }
    tuples.push_back(p);
  }

  result.rows.resize(tuples.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<size_t>(tuples.size(), 1)));
  std::atomic<size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (size_t i = next++; i < tuples.size(); i = next++) {
      try {
        result.rows[i] = sweep_row(tuples[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (error) std::rethrow_exception(error);
  std::sort(result.rows.begin(), result.rows.end(), [&](const SweepRow& a, const SweepRow& b) {
    return varied_value(a.params, spec.vary) < varied_value(b.params, spec.vary);
  });
  return result;
}

std::vector<SweepRow> sweep_genus(std::pair<std::int64_t, std::int64_t> l, std::pair<std::int64_t, std::int64_t> w,
                                  std::int64_t g_lo, std::int64_t g_hi, unsigned threads) {
  JoinParams{std::max<std::int64_t>(g_lo, 0), l.first, l.second, w.first, w.second}.validate();
  if (g_lo < 0 || g_lo > g_hi) throw ValidationError("genus range must satisfy 0 <= lo <= hi");
  return run_sweep({l, w, 0, SweepVariable::Genus, g_lo, g_hi}, threads).rows;
}

Transition find_transition(const SweepSpec& spec, const std::function<bool(const SweepRow&)>& predicate,
                           unsigned threads) {
  if (spec.lo > spec.hi) throw std::invalid_argument("empty parameter range");
  Transition t;
  t.rows = run_sweep(spec, threads).rows;
  bool seen = false;
  for (const auto& row : t.rows) {
    const bool ok = predicate(row);
    if (ok && !seen) {
      t.value = varied_value(row.params, spec.vary);
      seen = true;
    } else if (!ok && seen) {
      t.monotone = false;
    }
  }
  return t;
}

}  // namespace sasaki
