#pragma once

// Theorem-level upper bounds for the first stability eigenvalue, equality-case
// classification, strong-stability corollaries, and the verification driver
// that compares every applicable bound against a computed spectrum.

#include <string>
#include <utility>
#include <vector>

#include "cmcstab/spectrum.hpp"
#include "cmcstab/surface.hpp"

namespace cmcstab {

enum class TheoremId {
  T1_1_i,
  T1_1_ii,
  C1_2_i,
  C1_2_ii,
  S2R_i,
  S2R_ii,
  S2S1_i,
  S2S1_ii,
  H2R_i,
  H2R_ii,
  NIL_i,
  NIL_ii,
  SB_A_i,
  SB_A_ii,
  SB_B_i,
  SB_B_ii,
  SL2_i,
  SL2_ii,
};
std::string to_string(TheoremId id);

enum class EqualityCase {
  none,
  totally_umbilic_min_ricci,
  hopf_torus,
  horizontal_slice,
  clifford_torus,
};
std::string to_string(EqualityCase e);

struct BoundReport {
  TheoremId theorem_id{};
  double bound_value = 0.0;
  double lambda1 = 0.0;
  double margin = 0.0;  // bound - lambda1, expected >= -tol_verify
  bool strict = false;  // theorem asserts strict inequality
  EqualityCase equality_case = EqualityCase::none;
};

// Theorem bounds for a space with sectional curvature >= c:
// (i) -2(H^2+c); (ii) -4(H^2+c) - 8 pi (g-1)/Area.
std::pair<double, double> bound_theorem_1_1(double c, double H, int g, double area);

struct HomogeneousBound {
  TheoremId id{};
  double bound = 0.0;
  bool strict = false;
};

// Per-space bounds for the bundle geometries E(kappa,tau); the Berger sphere
// dispatches on the sign of kappa - 4 tau^2.
std::vector<HomogeneousBound> bound_homogeneous(const AmbientSpace& space, double H, int g,
                                                double area);

struct SpaceFormClassification {
  bool totally_umbilic = false;
  TheoremId id{};       // C1_2_i (umbilic, exact prediction) or C1_2_ii (bound)
  double value = 0.0;   // predicted lambda_1 (umbilic) or upper bound
};
SpaceFormClassification bound_space_form(double c, double H, bool is_totally_umbilic);

struct CorollaryCheck {
  std::string name;
  bool applicable = false;
  bool consistent = true;
  std::string detail;
};
std::vector<CorollaryCheck> stability_corollaries(const AmbientSpace& space, double H, int g,
                                                  double area, double lambda1);

struct VerifyOptions {
  double tol_eq = 1e-3;      // relative equality-detection tolerance
  double tol_verify = 0.02;  // relative margin tolerance (hard failure below)
};

struct VerifyResult {
  std::vector<BoundReport> reports;
  std::vector<CorollaryCheck> corollaries;
  bool pass = true;               // no margin below -tol_verify, corollaries consistent
  double near_vertical_fraction = 0.0;  // area fraction with <N,xi>^2 > 1 - 1e-3 (tau != 0)
  bool near_vertical_warning = false;   // fraction exceeds 10%
};

VerifyResult verify(const GeometryMesh& mesh, const SpectrumResult& spec,
                    const VerifyOptions& opt = {});

std::string reports_to_csv(const std::vector<BoundReport>& reports);
std::string verify_to_json(const VerifyResult& result);

}  // namespace cmcstab
