#pragma once

#include <string>
#include <string_view>

namespace freebell::security {

/// Binary Shannon entropy H(p) = -p lg p - (1-p) lg(1-p), base 2, with the
/// boundary convention 0 lg 0 = 0.
double shannon_entropy(double p);

/// Bit error rate in the key subensembles,
///   D(q) = (1-q)/7 (5/2 + 2 sin^2(pi/8)) ~ 0.4 (1-q).
double error_rate(double q);

/// I_AB(q) = 1 - H(D(q)).
double mutual_info_ab(double q);

/// Eve's maximal information for error rate d under an optimal attack
/// without setting knowledge: 1 - H(1/2 + sqrt(d - d^2)).
double optimal_eve_info(double d);

/// Actual Alice-Eve information, I_AE(q) = 3/7 + 4q/7.
double mutual_info_ae(double q);

/// Actual Bob-Eve information,
///   I_BE(q) = 1 - (1-q)/7 (2 + 4 H(cos^2(pi/8))) ~ 0.371 + 0.629 q.
double mutual_info_be(double q);

struct Thresholds {
  double q_cl;  // S(q_cl) = 2, the classical bound
  double q_qm;  // S(q_qm) = 1 + sqrt 2, the Tsirelson bound
  double q_0;   // D(q_0) = d_0, where I_AB crosses tilde-I_BE
  double d_0;   // critical error rate 1/2 (1 - 1/sqrt 2)
};

/// All three knowledge thresholds plus the critical error rate, by exact
/// affine inversion of S(q) and D(q).
Thresholds thresholds();

/// Csiszar-Korner criterion: secret-key extraction by error correction and
/// privacy amplification is possible iff i_ab > min(i_ae, i_be).
bool csiszar_korner_extractable(double i_ab, double i_ae, double i_be);

enum class SecurityRegion {
  no_violation_abort,    // q <= q_cl: CHSH not violated, parties abort
  violation_but_abort,   // q_cl < q <= q_0: S > 2 yet I_AB <= tilde-I_BE
  insecure_undetected,   // q > q_0: error rate looks fine, key is compromised
};

struct Verdict {
  SecurityRegion region;
  /// Set when q > q_qm: the unmitigated attack would push S beyond
  /// 1 + sqrt 2 and give Eve away.
  bool supra_quantum;

  friend bool operator==(Verdict, Verdict) = default;
};

Verdict security_verdict(double q);

std::string_view region_name(SecurityRegion region);
/// Region name, with "+SUPRA_QUANTUM_FLAG" appended when flagged.
std::string verdict_label(Verdict verdict);

/// Whether S(q) > 2 + Delta_CHSH(q). False for every q in this model: the
/// adapted bound is never broken, matching the impossibility of key
/// extraction.
bool adapted_bound_violated(double q);

/// One sample of every curve of the security analysis at knowledge level q.
struct SecurityCurves {
  double q;
  double s;           // CHSH expression S(q)
  double d;           // bit error rate D(q)
  double i_ab;
  double i_ae;
  double i_be;
  double i_be_tilde;  // optimal no-knowledge attack at the same error rate
  double delta_chsh;  // lack-of-freedom combination Delta_CHSH(q)
};

SecurityCurves security_curves(double q);

}  // namespace freebell::security
