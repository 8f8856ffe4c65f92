#pragma once

#include <cstdint>
#include <optional>
#include <span>

namespace freebell::mermin {

/// Largest party count accepted by the brute-force enumerator (2^(2n)
/// assignments are visited).
inline constexpr int kBruteForceCap = 12;

/// Sign coefficient s(k_1,...,k_N) of the N-party Mermin expression for one
/// vector of local settings, each k_j in {1,2}.
///
/// The coefficient is sin(c pi/2) evaluated exactly from c mod 4, where c is
/// the number of parties measuring their second setting. With this phase the
/// closed-form bound lhv_bound(n) is the exact deterministic maximum of the
/// expression for every n (verified by brute_force_bound); counting the
/// settings from 1 instead would flip the sign of the expression for
/// n = 2 mod 4 and break that equality.
int sign_coefficient(std::span<const int> settings);

/// Same coefficient with the settings encoded as a bitmask: bit j set means
/// party j+1 measures its second setting.
int sign_coefficient_mask(std::uint32_t mask);

/// Local-realistic bound of the Mermin expression,
///   B(N) = 1/2 [2^floor(N/2) + 2^(N/2) sin(N pi/4)].
/// Both terms are dyadic integers (case analysis on N mod 8), so the result
/// is exact in double precision.
double lhv_bound(int n);

/// Maximal quantum value, attained by the N-party GHZ state:
///   M_QM = 1/2 [2^(N-1) + 2^(N/2) sin(N pi/4)].
double quantum_max(int n);

/// Minimal Delta_Merm that still allows a local-realistic account of the
/// quantum value: M_QM(n) - B(n) = 2^(n-2) - 2^floor((n-2)/2).
double min_delta_merm(int n);

/// Per-setting lack of freedom Delta_N = 1/2 - 1/2^floor((N+1)/2) under the
/// sign-adapted uniform choice; satisfies 2^(N-1) Delta_N = min_delta_merm(N)
/// exactly. Saturates at 1/2 as N grows.
double per_setting_delta(int n);

/// 2^(n/2) sin(n pi/4) as an exact integer; equals the sum of
/// sign_coefficient over all 2^n setting vectors.
std::int64_t coefficient_sum(int n);

/// The Mermin expression Sum_k s(k) P(prod X = 1 | k) for measured
/// correlation probabilities. `probs` has 2^n entries in [0,1] indexed by
/// the setting bitmask (party 1 = least significant bit).
double mermin_measured_value(int n, std::span<const double> probs);

/// Sum_k s(k) Delta_k for per-setting lack-of-freedom measures, indexed like
/// mermin_measured_value. Entries must lie in [-1, 1].
double delta_merm_from_deltas(int n, std::span<const double> deltas);

struct BruteForceResult {
  double max_value;
  double min_value;
};

/// Exhaustive maximum and minimum of the Mermin expression over all 2^(2n)
/// deterministic assignments of the 2n potential outcomes. Independent
/// oracle for lhv_bound; n is capped at kBruteForceCap. `workers = 0` picks
/// a thread count automatically; the result is identical for any worker
/// count (max/min reductions commute).
BruteForceResult brute_force_bound(int n, unsigned workers = 0);

/// Per-setting |Delta| required to explain the quantum value when every
/// Delta_k carries the same positive value: min_delta_merm(n) / |sum of
/// coefficients|. Empty when the coefficients cancel exactly (n = 0 mod 4),
/// where no such explanation exists at all.
std::optional<double> all_positive_required_delta(int n);

/// Smallest n at which the all-positive requirement leaves [-1, 1] for every
/// larger n as well (scan up to `limit`).
int all_positive_breakdown_threshold(int limit = 64);

}  // namespace freebell::mermin
