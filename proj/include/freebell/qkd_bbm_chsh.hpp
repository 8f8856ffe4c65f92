#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "freebell/quantum_model.hpp"
#include "freebell/rng.hpp"

namespace freebell::qkd {

/// One of the 8 joint measurement settings: Alice's index i in {1,2},
/// Bob's index j in {1,2,3,4}.
struct JointSetting {
  int alice;
  int bob;

  friend constexpr bool operator==(JointSetting, JointSetting) = default;
};

enum class SettingRole {
  key,      // (1,1), (2,2): perfectly anti-correlated, used for the key
  test,     // (1,3), (1,4), (2,3), (2,4): enter the CHSH expression
  discard,  // (1,2), (2,1): orthogonal directions, results discarded
};

/// The 8 joint settings in a fixed order: (1,1), (1,2), ..., (2,4).
inline constexpr std::array<JointSetting, 8> kAllSettings{
    JointSetting{1, 1}, JointSetting{1, 2}, JointSetting{1, 3}, JointSetting{1, 4},
    JointSetting{2, 1}, JointSetting{2, 2}, JointSetting{2, 3}, JointSetting{2, 4}};

constexpr int setting_index(JointSetting s) { return (s.alice - 1) * 4 + (s.bob - 1); }
SettingRole setting_role(JointSetting s);
std::string setting_name(JointSetting s);  // "11", "12", ..., "24"

constexpr quantum::Angle alice_angle(JointSetting s) {
  return quantum::kGeometry.alpha[static_cast<std::size_t>(s.alice - 1)];
}
constexpr quantum::Angle bob_angle(JointSetting s) {
  return quantum::kGeometry.beta[static_cast<std::size_t>(s.bob - 1)];
}

/// Eve's per-run prediction of the joint setting: the favored setting will
/// occur with probability q, each of the other 7 with (1-q)/7.
/// q = 1/8 means no knowledge, q = 1 perfect knowledge.
class KnowledgeModel {
 public:
  explicit KnowledgeModel(double q);
  double q() const { return q_; }

 private:
  double q_;
};

/// The product state Eve substitutes for the singlet when she favors
/// setting (i,j): |alpha_i>|beta_j + pi> or |alpha_i + pi>|beta_j> by a fair
/// coin, so that both local outcomes stay totally random. For the favored
/// setting (1,4) — the CHSH term carrying the minus sign — she instead sends
/// |alpha_1>|beta_4> or |alpha_1 + pi>|beta_4 + pi>, minimizing the
/// anti-correlation there.
quantum::ProductPair eve_attack_state(JointSetting favored, bool heads);

/// Uniform draw over the 8 joint settings.
JointSetting sample_favored(rng::SplitMix64& gen);

/// The setting actually realized: `favored` with probability q, otherwise
/// uniform over the remaining 7.
JointSetting sample_actual(JointSetting favored, const KnowledgeModel& model,
                           rng::SplitMix64& gen);

/// Independent local measurements of the product state at the given joint
/// setting; returns (X, Y) with values +1 or -1.
std::pair<int, int> measure_pair(const quantum::ProductPair& pair, JointSetting setting,
                                 rng::SplitMix64& gen);

/// Anti-correlation probability P(X = -Y | ij) in the subensemble of runs
/// measured at `setting`, as the knowledge-weighted average over Eve's 8
/// possible guesses of the coin-averaged product-state anti-correlation.
double analytic_anticorrelation(JointSetting setting, double q);

/// The CHSH expression of the four test subensembles,
///   S(q) = 3q + (1-q)/7 (5 + 4 cos^2(pi/8)),
/// affine in q with S(1/8) ~ 1.4268 and S(1) = 3.
double analytic_chsh(double q);

/// Mathematical counterpart P(X_i = -Y_j): the value of the subensemble
/// probability at q = 1/8, where the parties receive an equally weighted
/// classical mixture of product states.
double math_counterpart(JointSetting setting);

/// Delta_13 + Delta_23 + Delta_24 - Delta_14 with
/// Delta_ij = analytic_anticorrelation(ij, q) - math_counterpart(ij).
/// Satisfies analytic_chsh(q) - delta_chsh_qkd(q) = analytic_chsh(1/8).
double delta_chsh_qkd(double q);

/// Aggregated record of a simulated protocol session: outcome counts per
/// joint setting, reproducible bit-exactly from (q, runs, seed).
struct RunLedger {
  double q = 0.0;
  std::uint64_t runs = 0;
  std::uint64_t seed = 0;
  /// counts[setting_index][x][y], outcome index 0 = +1, 1 = -1.
  std::array<std::array<std::array<std::uint64_t, 2>, 2>, 8> counts{};

  std::uint64_t setting_total(JointSetting s) const;
  std::uint64_t anticorrelated(JointSetting s) const;
  std::uint64_t correlated(JointSetting s) const;
  std::uint64_t alice_plus_total() const;

  /// Stable JSON form: counts keyed by setting and outcome pair, plus
  /// q, runs, seed, and the artifact version.
  std::string to_json() const;

  friend bool operator==(const RunLedger&, const RunLedger&) = default;
};

/// Runs the full pipeline (favored guess -> attack state -> actual setting
/// -> measurement) `runs` times. Per-run random streams are derived from
/// (seed, run index), so the ledger is identical for every worker count.
/// `workers = 0` picks a thread count automatically.
RunLedger run_simulation(double q, std::uint64_t runs, std::uint64_t seed,
                         unsigned workers = 0);

struct FrequencyEstimate {
  std::uint64_t n = 0;     // subensemble size
  double freq = 0.0;       // observed relative frequency
  double stderr_ = 0.0;    // sqrt(f(1-f)/n)
};

struct SimulationStatistics {
  /// Anti-correlation frequency per joint setting, indexed like kAllSettings.
  std::array<FrequencyEstimate, 8> anticorrelation;
  double s_hat = 0.0;  // CHSH estimate from the four test subensembles
  double s_se = 0.0;
  double d_hat = 0.0;  // correlation (error) frequency pooled over key subensembles
  double d_se = 0.0;
  FrequencyEstimate alice_plus;  // marginal frequency of X = +1 over all runs
};

/// Frequencies and standard errors from a ledger. Every test and key
/// subensemble must be non-empty; the error message names the missing
/// setting otherwise.
SimulationStatistics estimate_statistics(const RunLedger& ledger);

}  // namespace freebell::qkd
