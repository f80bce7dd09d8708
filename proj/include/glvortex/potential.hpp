#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace glv {

enum class PotentialKind { Quadratic, Huber, CustomSampled };

// One sample row of a tabulated potential: argument, value, derivative.
struct PotentialSample {
  double t;
  double W;
  double dW;
};

// Convex potential W on (-inf, 1] with W(0) = 0 and W > 0 away from 0.
//
// Quadratic:      W(t) = t^2 / 2, so the density term W(1 - |u|^2) / (2 eps^2)
//                 is the classical (1 - |u|^2)^2 / (4 eps^2).
// Huber(delta):   W(t) = t^2 / 2 for |t| <= delta, delta |t| - delta^2 / 2
//                 otherwise. C^1 and convex but not strictly convex.
// CustomSampled:  piecewise-linear interpolation of (t, W, W') rows;
//                 evaluation outside the tabulated range is an error.
struct PotentialSpec {
  PotentialKind kind = PotentialKind::Quadratic;
  double delta = 0.0;                    // Huber only
  std::vector<PotentialSample> samples;  // CustomSampled only, sorted by t
  std::string selector = "quadratic";    // round-trips through configs

  static PotentialSpec quadratic();
  static PotentialSpec huber(double delta);
  static PotentialSpec custom(std::vector<PotentialSample> rows);
};

// W(t). Requires t <= 1 (and t within the tabulated range for custom kinds).
double eval_W(const PotentialSpec& p, double t);

// W'(t), continuous across the Huber kink.
double eval_dW(const PotentialSpec& p, double t);

struct AdmissibilityReport {
  bool zero_at_origin = true;
  bool positive = true;
  bool secant_convex = true;
  bool dW_monotone = true;

  double worst_positivity_t = 0.0;
  double worst_positivity_W = 0.0;
  std::array<double, 3> worst_secant_triple{0.0, 0.0, 0.0};
  double worst_secant_violation = 0.0;  // positive when the secant test fails
  double worst_monotone_t = 0.0;
  double worst_monotone_drop = 0.0;

  bool pass() const {
    return zero_at_origin && positive && secant_convex && dW_monotone;
  }
};

// Samples t over [-T, 1] (clamped to the tabulated range for custom kinds)
// and reports each hypothesis separately: W(0) = 0, positivity away from 0,
// secant convexity over consecutive triples, and monotone W'. Violations are
// reported, never thrown. Requires n_samples >= 3.
AdmissibilityReport check_admissible(const PotentialSpec& p, int n_samples,
                                     std::uint64_t seed, double T = 3.0);

// Parses "quadratic" | "huber:<delta>" | "file:<path>".
PotentialSpec parse_potential(const std::string& selector);

// Loads a CSV with header "t,W,dW", one sample per row, t strictly increasing.
PotentialSpec load_potential_csv(const std::string& path);

}  // namespace glv
