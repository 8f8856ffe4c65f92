#include "freebell/lhv_core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace freebell::lhv {

namespace {

constexpr double kNormTolerance = 1e-12;

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0,1], got " +
                                std::to_string(p));
  }
}

}  // namespace

std::array<LhvQuadruple, kQuadrupleCount> enumerate_quadruples() {
  std::array<LhvQuadruple, kQuadrupleCount> out{};
  std::size_t idx = 0;
  for (Outcome x1 : {-1, +1})
    for (Outcome x2 : {-1, +1})
      for (Outcome y1 : {-1, +1})
        for (Outcome y2 : {-1, +1}) out[idx++] = LhvQuadruple{x1, x2, y1, y2};
  return out;
}

QuadrupleDistribution::QuadrupleDistribution(
    const std::array<double, kQuadrupleCount>& weights)
    : weights_{weights} {
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0)) {
      throw std::invalid_argument("quadruple weights must be non-negative");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kNormTolerance) {
    throw std::invalid_argument("quadruple weights must sum to 1 within 1e-12, got " +
                                std::to_string(sum));
  }
}

QuadrupleDistribution QuadrupleDistribution::uniform() {
  std::array<double, kQuadrupleCount> w{};
  w.fill(1.0 / static_cast<double>(kQuadrupleCount));
  return QuadrupleDistribution{w};
}

QuadrupleDistribution QuadrupleDistribution::point_mass(std::size_t index) {
  if (index >= kQuadrupleCount) {
    throw std::invalid_argument("point mass index out of range");
  }
  std::array<double, kQuadrupleCount> w{};
  w[index] = 1.0;
  return QuadrupleDistribution{w};
}

CondProbTable::CondProbTable(double p11, double p12, double p21, double p22)
    : p_{{{p11, p12}, {p21, p22}}} {
  check_probability(p11, "p11");
  check_probability(p12, "p12");
  check_probability(p21, "p21");
  check_probability(p22, "p22");
}

double chsh_math_value(const QuadrupleDistribution& dist) {
  const auto quadruples = enumerate_quadruples();
  double s = 0.0;
  for (std::size_t i = 0; i < kQuadrupleCount; ++i) {
    s += dist.weight(i) * static_cast<double>(quadruples[i].chsh_indicator());
  }
  return s;
}

double chsh_measured_value(const CondProbTable& table) {
  return table.p(1, 1) + table.p(1, 2) + table.p(2, 1) - table.p(2, 2);
}

DeltaChshResult delta_chsh(const CondProbTable& measured, const CondProbTable& math) {
  DeltaChshResult out{};
  for (int k = 1; k <= 2; ++k) {
    for (int l = 1; l <= 2; ++l) {
      out.table.d[k - 1][l - 1] = measured.p(k, l) - math.p(k, l);
    }
  }
  out.delta_chsh = out.table.delta(1, 1) + out.table.delta(1, 2) +
                   out.table.delta(2, 1) - out.table.delta(2, 2);
  return out;
}

double minimal_delta(MinimalDeltaMode mode, double s_target) {
  if (!(s_target >= 0.0 && s_target <= 3.0)) {
    throw std::invalid_argument("s_target must lie in [0,3], got " +
                                std::to_string(s_target));
  }
  const double aggregate = std::max(s_target - 2.0, 0.0);
  switch (mode) {
    case MinimalDeltaMode::aggregate:
      return aggregate;
    case MinimalDeltaMode::uniform_signed:
      // Delta_11 = Delta_12 = Delta_21 = -Delta_22 = Delta: four terms add up.
      return aggregate / 4.0;
    case MinimalDeltaMode::all_positive:
      // the Delta_22 term cancels one of the three positive contributions
      return aggregate / 2.0;
  }
  throw std::invalid_argument("unknown minimal-delta mode");
}

ConspiracyModel conspiracy_model_extremal() {
  // Coinciding pair for (1,1), (1,2), (2,1); anti-coinciding for (2,2).
  const LhvQuadruple coincide{+1, +1, +1, +1};
  const LhvQuadruple anticoincide{+1, +1, +1, -1};

  std::array<double, kQuadrupleCount> weights{};
  const auto quadruples = enumerate_quadruples();
  for (std::size_t i = 0; i < kQuadrupleCount; ++i) {
    if (quadruples[i] == coincide) weights[i] += 3.0 / 4.0;
    if (quadruples[i] == anticoincide) weights[i] += 1.0 / 4.0;
  }

  return ConspiracyModel{
      CondProbTable{1.0, 1.0, 1.0, 0.0},
      {coincide, coincide, coincide, anticoincide},
      QuadrupleDistribution{weights},
  };
}

double correlation_from_prob(double p) {
  check_probability(p, "p");
  return 2.0 * p - 1.0;
}

}  // namespace freebell::lhv
