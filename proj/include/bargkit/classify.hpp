#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "bargkit/hermite.hpp"

namespace bargkit {

enum class Membership { member, non_member, borderline };

// One rung of the decay ladder.  Test-side spaces in increasing order:
//   S0 (finite expansions) < Sigma(s) < S(s) for s < 1/2 < HFlat0 < HFlat
//   < Sigma(1/2) < S(1/2) < Sigma(s) < S(s) for s > 1/2,
// followed by the mirrored dual-side spaces, ending at DualS0 (everything).
struct SpaceLabel {
  enum class Kind {
    S0,
    Sigma,
    S,
    HFlat0,
    HFlat,
    DualS,
    DualSigma,
    DualHFlat,
    DualHFlat0,
    DualS0
  };
  Kind kind = Kind::S0;
  double s = 0.0;
  std::string name() const;
};

struct DecayFit {
  enum class Model { stretched_exp, factorial, factorial_growth, finite };
  Model model = Model::finite;
  double s = 0.0;         // stretched model parameter
  double rate = 0.0;      // decay rate r, or log R for the factorial models
  double R = 0.0;         // e^{rate} for the factorial models
  double logC = 0.0;
  double residual = 0.0;
  int window_lo = 0;
  int window_hi = 0;
};

// Least-squares fit of the shell maxima against each candidate decay model
// over the tail window [ceil(k*/2), k*]; returns the model with the smallest
// residual.  Requires at least 8 populated shells in the window unless the
// expansion has a finite tail.
DecayFit fit_decay(const HermiteExpansion& e, const std::vector<double>& s_grid = {0.25, 0.5, 1.0,
                                                                                   2.0});

struct ClassificationReport {
  std::vector<std::pair<SpaceLabel, Membership>> verdicts;  // ladder order
  DecayFit fit;
  int cutoff = 0;
  int last_significant_shell = -1;
  bool finite_tail = false;
  double tol = 0.05;
  std::string caveat;
};

// Statistical classification from windowed slopes of per-shell coefficient
// statistics.  Verdicts are forced monotone along the ladder: once one rung
// is a member, so is every larger rung.
ClassificationReport classify(const HermiteExpansion& e, double tol = 0.05,
                              const std::vector<double>& s_grid = {0.25, 0.5, 1.0, 2.0});

// A Gaussian e^{-<Ax,x>/2 + <L,x>} belongs to the flat space exactly when
// every eigenvalue of A equals 1 (checked to 1e-10); Re A must be positive
// definite.
struct GaussianMembershipReport {
  bool member = false;
  std::vector<Complex> eigenvalues;
};
GaussianMembershipReport gaussian_membership(const Eigen::MatrixXcd& A, const Eigen::VectorXcd& L);

// Forward half of the seminorm/decay equivalence: with C the Pilipovic
// seminorm, every coefficient must satisfy
//   |c_a| <= 4^s C e^{-s ((2|a|+d)/h)^{1/(2s)}}.
struct ForwardEquivReport {
  bool holds = false;
  double seminorm = 0.0;
  double worst_slack = 0.0;  // min over a of (log bound - log |c_a|)
};
ForwardEquivReport equiv_forward_check(const HermiteExpansion& e, double h, double s,
                                       int N_sup = 60);

// Backward half: with C fitted as the smallest constant such that
// |c_a| <= C e^{-|a|^{1/(2s)}/h}, the ratios ||H^N e|| / (b^N (N!)^{2s}) with
// b = 3 (4 s h)^{2s} must stay below C (1 + 2 s h^{2sd} Gamma(2sd)) and peak
// at small N.
struct BackwardEquivReport {
  bool holds = false;
  bool bounded = false;
  int maximizer = 0;
  double max_log_ratio = 0.0;
  double log_allowed = 0.0;
};
BackwardEquivReport equiv_backward_check(const HermiteExpansion& e, double h, double s,
                                         int N_sup = 60);

}  // namespace bargkit
