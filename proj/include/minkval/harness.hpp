#pragma once

// Randomized exact property checks for the operators in valuations.hpp and
// the identities they rest on. Every check is deterministic in its seed;
// trial t of check c draws from its own generator seeded by (seed, c, t),
// so a failing trial can be replayed alone.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "minkval/random.hpp"
#include "minkval/valuations.hpp"

namespace minkval::harness {

using Json = nlohmann::json;
using Direction = std::vector<Rational>;

struct PropertyReport {
  std::string check;
  std::uint64_t seed = 0;
  int trials = 0;
  int passed = 0;
  /// Index of the first failing trial.
  std::optional<int> failed_trial;
  /// Inputs and both sides of the first failure; null on success.
  Json witness;
  /// Free-form observations that are not pass/fail (e.g. which convention
  /// was rejected while pinning).
  Json notes;

  bool ok() const { return !failed_trial.has_value(); }
  /// One line of the summary: {check, seed, trial, trials, passed, status, witness?, notes?}.
  Json to_json() const;
};

/// Coefficients c_0..c_4 of h(Z(lambda K), w) = sum_k c_k lambda^k, one row
/// per direction, from exact evaluations at lambda = 1..5.
struct DecompositionTable {
  std::vector<Direction> directions;
  std::vector<std::array<Rational, 5>> coefficients;
};

DecompositionTable homogeneous_decomposition(const ValuationOp& op, const Polytope& k, const std::vector<Direction>& dirs);

// Single-instance checks. Each returns a report with trials = 1.
PropertyReport check_valuation_additivity(const ValuationOp& op, const Polytope& p, const Covector& xi, const Rational& c,
                                          const std::vector<Direction>& dirs);
/// Contravariant ops: h(Z(gK), w) = h(ZK, g^{-1} w). Covariant ops:
/// h(Z(gK), xi) = h(ZK, g^* xi). Throws SingularMatrixError for singular g.
PropertyReport check_equivariance(const ValuationOp& op, const Polytope& k, const ComplexMatrix2& g,
                                  const std::vector<Direction>& dirs);
/// h(Pi_N(gK), u) = t^power h(Pi_N K, g^{-1} u) for g = t g0.
PropertyReport check_scaled_pi_n(const Polytope& n, const Polytope& k, const Rational& t, const ComplexMatrix2& g0,
                                 const std::vector<Direction>& dirs, int power);
/// Area measure of [0, a e1, b i e1, gamma e1 + e2] in the 3-space with
/// basis (e1, i e1, e2) against the closed-form atoms.
PropertyReport verify_simplex_area(const Rational& a, const Rational& b, const Complex& gamma);
/// The closed-form atoms, in coordinates (e1, i e1, e2).
std::vector<Covector> simplex_area_atoms(const Rational& a, const Rational& b, const Complex& gamma);

// Randomized checks.
PropertyReport check_degenerate_vanishing(OpKind kind, int trials, std::uint64_t seed);
PropertyReport check_e_plane_identity(int trials, std::uint64_t seed);
/// op(M + t) = op(M) on random probes, plus a separation probe between M
/// and a non-translate M2: some (K, w) with differing supports must turn
/// up. The probe is a heuristic consequence of uniqueness, not a proof.
PropertyReport check_uniqueness_translates(OpKind kind, const Polytope& m, const Polytope& m2, int trials, std::uint64_t seed);

struct SuiteOptions {
  std::uint64_t seed = 42;
  int trials = 100;
  /// Run only the check with this id.
  std::optional<std::string> only;
  /// Evaluate the dtilde_m integral with the rejected convention. Used to
  /// test that the suite notices.
  bool flip_conjugation = false;
};

struct SuiteSummary {
  std::vector<PropertyReport> reports;
  bool ok() const;
};

/// Ids of the checks run_suite knows, in run order.
const std::vector<std::string>& suite_checks();
/// Throws Error for an unknown `only`.
SuiteSummary run_suite(const SuiteOptions& options);
/// One JSON record per line.
void write_summary(const SuiteSummary& summary, std::ostream& out);

// Helpers shared with the acceptance runner.
struct TrialOutcome {
  bool ok = true;
  Json witness;
};
/// Runs `trial` for t = 0..trials-1, each with its own generator, and stops
/// at the first failure. Exceptions count as failures.
PropertyReport run_trials(const std::string& check, std::uint64_t seed, int trials,
                          const std::function<TrialOutcome(Generator&, int)>& trial);
std::uint64_t trial_seed(std::uint64_t seed, const std::string& check, int trial);
Polytope random_body(Generator& gen);
std::vector<Direction> random_directions(Generator& gen, int count);
Json body_json(const Polytope& p);
/// ValuationOps of all six kinds with random planar parameters.
std::vector<ValuationOp> random_ops(Generator& gen);

}  // namespace minkval::harness
