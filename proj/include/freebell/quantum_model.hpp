#pragma once

#include <array>
#include <numbers>

namespace freebell::quantum {

/// Azimuthal direction in the x-y plane, stored as an integer multiple of
/// pi/4 (an "eighth" of a turn), normalized to {0,...,7}.
///
/// Every direction used by the protocol — measurement settings, attack
/// states, and their +pi flips — lives on this grid, so all half-angle
/// probabilities below take one of five exact tabulated values and no
/// trigonometric rounding enters any identity.
class Angle {
 public:
  constexpr Angle() = default;
  constexpr explicit Angle(int eighths) : eighths_{normalize(eighths)} {}

  constexpr int eighths() const { return eighths_; }
  constexpr double radians() const {
    return static_cast<double>(eighths_) * std::numbers::pi / 4.0;
  }

  /// Direction rotated by `eighths` multiples of pi/4.
  constexpr Angle rotated(int eighths) const { return Angle{eighths_ + eighths}; }
  /// The opposite direction (rotation by pi).
  constexpr Angle antipode() const { return Angle{eighths_ + 4}; }

  /// Separation a - b on the grid, normalized to {0,...,7}.
  friend constexpr Angle operator-(Angle a, Angle b) {
    return Angle{a.eighths_ - b.eighths_};
  }

  friend constexpr bool operator==(Angle, Angle) = default;

 private:
  static constexpr int normalize(int e) {
    int r = e % 8;
    return r < 0 ? r + 8 : r;
  }
  int eighths_ = 0;
};

/// Pure product state sent by Eve: one in-plane direction per particle.
struct ProductPair {
  Angle phi_a;  // state direction of the particle sent to Alice
  Angle phi_b;  // state direction of the particle sent to Bob
};

/// Measurement directions of the BBM-CHSH protocol.
///
/// Alice: alpha_1 = 0, alpha_2 = pi/2.
/// Bob:   beta_1 = 0, beta_2 = pi/2 (the key settings, identical to Alice's),
///        beta_3 = pi/4, beta_4 = 3pi/4 (the CHSH test settings).
struct SettingGeometry {
  std::array<Angle, 2> alpha{Angle{0}, Angle{2}};
  std::array<Angle, 4> beta{Angle{0}, Angle{2}, Angle{1}, Angle{3}};
};

inline constexpr SettingGeometry kGeometry{};

inline constexpr double kSqrt2 = std::numbers::sqrt2;
/// cos^2(pi/8) = (2 + sqrt 2)/4, the singlet anti-correlation at pi/4.
inline constexpr double kCosSqPi8 = (2.0 + kSqrt2) / 4.0;
/// sin^2(pi/8) = (2 - sqrt 2)/4.
inline constexpr double kSinSqPi8 = (2.0 - kSqrt2) / 4.0;
/// Tsirelson value of the probability-form CHSH expression, 1 + sqrt 2.
inline constexpr double kQuantumChsh = 1.0 + kSqrt2;

/// P(outcome +1) when a spin prepared along `state` is analyzed along
/// `analyzer`: cos^2 of half the angular separation.
constexpr double up_probability(Angle analyzer, Angle state) {
  // cos^2(d * pi/8) for d = 0..7, exact on the grid
  constexpr std::array<double, 8> half_angle_cos_sq{
      1.0, kCosSqPi8, 0.5, kSinSqPi8, 0.0, kSinSqPi8, 0.5, kCosSqPi8};
  return half_angle_cos_sq[(analyzer - state).eighths()];
}

/// Singlet-state anti-correlation probability P(X = -Y) for analyzers at
/// azimuths `a` (Alice) and `b` (Bob); equal to cos^2((a-b)/2).
constexpr double singlet_anticorrelation(Angle a, Angle b) {
  return up_probability(a, b);
}

/// Anti-correlation probability when the two particles are in the product
/// state `pair` and measured independently along (a, b).
constexpr double product_anticorrelation(const ProductPair& pair, Angle a, Angle b) {
  const double u = up_probability(a, pair.phi_a);
  const double v = up_probability(b, pair.phi_b);
  return u * (1.0 - v) + (1.0 - u) * v;
}

}  // namespace freebell::quantum
