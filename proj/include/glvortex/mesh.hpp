#pragma once

#include <span>
#include <vector>

namespace glv {

// Graded grid on [0, 1]: r_i = (i/n)^grading, r_0 = 0 and r_n = 1 exactly.
struct RadialMesh {
  std::vector<double> r;
  double grading = 1.0;

  int n() const { return static_cast<int>(r.size()) - 1; }
};

// Requires n >= 16 and grading >= 1. grading = 1 is the uniform mesh.
RadialMesh build_mesh(int n, double grading);

// Surface measure |S^{N-1}| = 2 pi^{N/2} / Gamma(N/2), with Gamma evaluated
// by the half-integer recursion Gamma(1) = 1, Gamma(1/2) = sqrt(pi),
// Gamma(x+1) = x Gamma(x). Requires N >= 2.
double sphere_area(int N);

// |S^{N-1}| * integral over (0,1) of g(r) r^{N-1} dr by the composite
// trapezoid rule on the mesh. The sample at r = 0 is ignored: the weight
// r^{N-1} vanishes there, and callers may pass integrands defined only on
// (0, 1] whose product with r^{N-1} extends continuously by zero.
double integrate_radial(const RadialMesh& mesh, std::span<const double> samples, int N);

// Per-(mesh, N) quadrature data shared by the profile solver, the quadratic
// forms and the sector operators.
//
// S_i is the exact integral of r^{N-1} over [r_i, r_{i+1}] and gmean_i its
// mean value S_i / h_i. The interior lumped mass is
//
//     m_j = r_j (gmean_j - gmean_{j-1}) / (N - 1),
//
// which is the unique second-order lumping for which the conservative
// three-point scheme annihilates every linear profile exactly, in floating
// point as well as in exact arithmetic. hardy_j = m_j / r_j^2 is the matching
// r^{N-3} mass.
struct RadialWeights {
  int N = 0;
  std::vector<double> h;      // size n, h_i = r_{i+1} - r_i
  std::vector<double> S;      // size n
  std::vector<double> gmean;  // size n
  std::vector<double> gamma;  // size n+1, interior j: gmean_j - gmean_{j-1}
  std::vector<double> m;      // size n+1, interior lumped r^{N-1} mass
  std::vector<double> hardy;  // size n+1, interior lumped r^{N-3} mass
  double m0 = 0.0;            // half-cell mass at r = 0 (vanishingly small)
  double mn = 0.0;            // half-cell mass at r = 1
};

RadialWeights make_weights(const RadialMesh& mesh, int N);

}  // namespace glv
