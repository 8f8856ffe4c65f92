#pragma once

#include <array>
#include <cstddef>

namespace freebell::lhv {

/// Dichotomic measurement outcome, +1 or -1.
using Outcome = int;

/// One deterministic local-realistic assignment of the four potential
/// outcomes {X1, X2, Y1, Y2}, each +1 or -1.
struct LhvQuadruple {
  Outcome x1;
  Outcome x2;
  Outcome y1;
  Outcome y2;

  /// The signed indicator combination
  ///   1{X1=Y1} + 1{X1=Y2} + 1{X2=Y1} - 1{X2=Y2},
  /// which equals 0 or 2 for every quadruple.
  constexpr int chsh_indicator() const {
    return (x1 == y1) + (x1 == y2) + (x2 == y1) - (x2 == y2);
  }

  friend constexpr bool operator==(const LhvQuadruple&, const LhvQuadruple&) = default;
};

inline constexpr std::size_t kQuadrupleCount = 16;

/// All 16 quadruples, lexicographic in (x1, x2, y1, y2) with -1 before +1.
std::array<LhvQuadruple, kQuadrupleCount> enumerate_quadruples();

/// Probability distribution over the 16 quadruples (the ensemble of many
/// thought repetitions). Weights must be non-negative and sum to 1 within
/// 1e-12; out-of-tolerance input is rejected rather than renormalized.
class QuadrupleDistribution {
 public:
  explicit QuadrupleDistribution(const std::array<double, kQuadrupleCount>& weights);

  static QuadrupleDistribution uniform();
  static QuadrupleDistribution point_mass(std::size_t index);

  double weight(std::size_t index) const { return weights_[index]; }
  const std::array<double, kQuadrupleCount>& weights() const { return weights_; }

 private:
  std::array<double, kQuadrupleCount> weights_;
};

/// Measured conditional coincidence probabilities P(X=Y|kl), k,l in {1,2}.
/// Entries must lie in [0,1].
class CondProbTable {
 public:
  /// Entries in row-major order p11, p12, p21, p22.
  CondProbTable(double p11, double p12, double p21, double p22);

  /// 1-based access, k = Alice's setting, l = Bob's.
  double p(int k, int l) const { return p_[k - 1][l - 1]; }

 private:
  std::array<std::array<double, 2>, 2> p_;
};

/// Per-setting lack-of-freedom measures Delta_kl = measured - mathematical.
struct DeltaTable {
  std::array<std::array<double, 2>, 2> d{};
  double delta(int k, int l) const { return d[k - 1][l - 1]; }
};

/// Expectation of the signed indicator combination under `dist`:
///   S_CHSH = P(X1=Y1) + P(X1=Y2) + P(X2=Y1) - P(X2=Y2).
/// Lies in [0, 2] for every distribution.
double chsh_math_value(const QuadrupleDistribution& dist);

/// The measured CHSH combination S_Delta = p11 + p12 + p21 - p22.
double chsh_measured_value(const CondProbTable& table);

struct DeltaChshResult {
  DeltaTable table;
  double delta_chsh;  // Delta_11 + Delta_12 + Delta_21 - Delta_22
};

/// Entrywise difference of a measured table and its mathematical
/// counterpart, plus the signed combination Delta_CHSH. Satisfies
/// chsh_measured_value(measured) = chsh_measured_value(math) + Delta_CHSH
/// exactly.
DeltaChshResult delta_chsh(const CondProbTable& measured, const CondProbTable& math);

/// How the per-setting conspiracy is assumed to be structured when solving
/// for the minimal lack of freedom.
enum class MinimalDeltaMode {
  aggregate,       // bound on Delta_CHSH itself
  uniform_signed,  // |Delta_kl| = Delta with Delta_11 = Delta_12 = Delta_21 = -Delta_22
  all_positive,    // all Delta_kl = Delta > 0
};

/// Minimal lack of freedom needed for a local-realistic account of a
/// measured CHSH value `s_target` in [0, 3]:
///   aggregate      -> max(s_target - 2, 0)
///   uniform_signed -> that / 4
///   all_positive   -> that / 2
double minimal_delta(MinimalDeltaMode mode, double s_target);

/// The setting-aware source model that reaches the logical bound S_Delta = 3:
/// whenever both parties measure their second setting the source sends an
/// anti-coinciding pair, otherwise a coinciding one.
struct ConspiracyModel {
  CondProbTable measured;  // (1, 1, 1, 0)
  /// Deterministic quadruple played for each joint setting (11, 12, 21, 22).
  std::array<LhvQuadruple, 4> strategy;
  /// Marginal quadruple distribution when the four settings occur uniformly.
  QuadrupleDistribution uniform_play;
};

ConspiracyModel conspiracy_model_extremal();

/// Correlation function of dichotomic variables from a coincidence
/// probability: E = 2p - 1.
double correlation_from_prob(double p);

}  // namespace freebell::lhv
