#include "cmcstab/bounds.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "cmcstab/errors.hpp"

namespace cmcstab {

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T1_1_i: return "T1_1_i";
    case TheoremId::T1_1_ii: return "T1_1_ii";
    case TheoremId::C1_2_i: return "C1_2_i";
    case TheoremId::C1_2_ii: return "C1_2_ii";
    case TheoremId::S2R_i: return "S2R_i";
    case TheoremId::S2R_ii: return "S2R_ii";
    case TheoremId::S2S1_i: return "S2S1_i";
    case TheoremId::S2S1_ii: return "S2S1_ii";
    case TheoremId::H2R_i: return "H2R_i";
    case TheoremId::H2R_ii: return "H2R_ii";
    case TheoremId::NIL_i: return "NIL_i";
    case TheoremId::NIL_ii: return "NIL_ii";
    case TheoremId::SB_A_i: return "SB_A_i";
    case TheoremId::SB_A_ii: return "SB_A_ii";
    case TheoremId::SB_B_i: return "SB_B_i";
    case TheoremId::SB_B_ii: return "SB_B_ii";
    case TheoremId::SL2_i: return "SL2_i";
    case TheoremId::SL2_ii: return "SL2_ii";
  }
  return "?";
}

std::string to_string(EqualityCase e) {
  switch (e) {
    case EqualityCase::none: return "none";
    case EqualityCase::totally_umbilic_min_ricci: return "totally_umbilic_min_ricci";
    case EqualityCase::hopf_torus: return "hopf_torus";
    case EqualityCase::horizontal_slice: return "horizontal_slice";
    case EqualityCase::clifford_torus: return "clifford_torus";
  }
  return "?";
}

std::pair<double, double> bound_theorem_1_1(double c, double H, int g, double area) {
  if (!(area > 0.0)) throw Error("bound_theorem_1_1: area must be positive");
  double b_i = -2.0 * (H * H + c);
  double b_ii = -4.0 * (H * H + c) - 8.0 * M_PI * (g - 1) / area;
  return {b_i, b_ii};
}

std::vector<HomogeneousBound> bound_homogeneous(const AmbientSpace& space, double H, int g,
                                                double area) {
  if (!space.is_ekt())
    throw UnsupportedSpace("bound_homogeneous: space-form ambient has its own bounds");
  if (!(area > 0.0)) throw Error("bound_homogeneous: area must be positive");
  const double k = space.kappa, t2 = space.tau * space.tau, H2 = H * H;
  const double topo = 8.0 * M_PI * (g - 1) / area;
  std::vector<HomogeneousBound> out;
  switch (space.kind) {
    case SpaceKind::ProductS2R:
      out.push_back({TheoremId::S2R_i, -2.0 * H2, false});
      out.push_back({TheoremId::S2R_ii, -4.0 * H2 - k - topo, true});
      break;
    case SpaceKind::ProductS2S1:
      out.push_back({TheoremId::S2S1_i, -2.0 * H2, false});
      out.push_back({TheoremId::S2S1_ii, -4.0 * H2 - k - topo, false});
      break;
    case SpaceKind::ProductH2R:
      out.push_back({TheoremId::H2R_i, -2.0 * H2 - k, true});
      out.push_back({TheoremId::H2R_ii, -4.0 * H2 - 2.0 * k - topo, true});
      break;
    case SpaceKind::Heisenberg:
      out.push_back({TheoremId::NIL_i, -2.0 * (H2 - t2), true});
      out.push_back({TheoremId::NIL_ii, -4.0 * (H2 - t2) - topo, true});
      break;
    case SpaceKind::BergerSphere:
      if (k - 4.0 * t2 > 0.0) {
        out.push_back({TheoremId::SB_A_i, -2.0 * (H2 + t2), true});
        out.push_back({TheoremId::SB_A_ii, -4.0 * H2 - k - topo, false});
      } else {
        out.push_back({TheoremId::SB_B_i, -2.0 * H2 - k + 2.0 * t2, true});
        out.push_back({TheoremId::SB_B_ii, -4.0 * H2 - 2.0 * k + 4.0 * t2 - topo, true});
      }
      break;
    case SpaceKind::Sl2Universal:
      out.push_back({TheoremId::SL2_i, -2.0 * H2 - k + 2.0 * t2, true});
      out.push_back({TheoremId::SL2_ii, -4.0 * H2 - 2.0 * k + 4.0 * t2 - topo, true});
      break;
    case SpaceKind::SpaceForm:
      break;  // unreachable, handled above
  }
  return out;
}

SpaceFormClassification bound_space_form(double c, double H, bool is_totally_umbilic) {
  SpaceFormClassification r;
  r.totally_umbilic = is_totally_umbilic;
  if (is_totally_umbilic) {
    r.id = TheoremId::C1_2_i;
    r.value = -2.0 * (H * H + c);  // exact prediction for umbilic surfaces
  } else {
    r.id = TheoremId::C1_2_ii;
    r.value = -4.0 * (H * H + c);
  }
  return r;
}

namespace {

constexpr double kStabilityTol = 1e-6;

void push_check(std::vector<CorollaryCheck>& out, const std::string& name, bool applicable,
                bool consistent, const std::string& detail) {
  out.push_back({name, applicable, !applicable || consistent, detail});
}

}  // namespace

std::vector<CorollaryCheck> stability_corollaries(const AmbientSpace& space, double H, int g,
                                                  double area, double lambda1) {
  std::vector<CorollaryCheck> out;
  const bool stable = lambda1 >= -kStabilityTol;  // includes the marginal case
  const double H2 = H * H;
  const double c = sectional_lower_bound(space);
  std::ostringstream os;
  os << "lambda1=" << lambda1 << " H^2+c=" << H2 + c;

  // Corollary to Theorem 1.1: applies to any ambient with sectional >= c.
  push_check(out, "th1_3_i", H2 + c > kStabilityTol, !stable, os.str());
  push_check(out, "th1_3_ii", stable && std::abs(H2 + c) <= kStabilityTol, g == 0 || g == 1,
             "genus=" + std::to_string(g));
  push_check(out, "th1_3_iii", stable && H2 + c < -kStabilityTol,
             area * std::abs(H2 + c) >= 2.0 * M_PI * (g - 1) - 1e-9, "area bound");

  switch (space.kind) {
    case SpaceKind::ProductS2R:
      // only strongly stable surfaces are horizontal slices (H = 0, lambda1 = 0)
      push_check(out, "s2r_slices_only", stable, std::abs(H) <= kStabilityTol,
                 "stable surface must be minimal (a slice)");
      break;
    case SpaceKind::ProductH2R: {
      double thresh = -space.kappa / 2.0;
      push_check(out, "h2r_i", H2 >= thresh - kStabilityTol, !stable, "no stable with H^2>=-k/2");
      push_check(out, "h2r_ii", stable && H2 < thresh,
                 area * std::abs(2.0 * H2 + space.kappa) > 4.0 * M_PI * (g - 1) - 1e-9,
                 "area bound");
      break;
    }
    case SpaceKind::Heisenberg: {
      double t2 = space.tau * space.tau;
      push_check(out, "nil_i", H2 >= t2 - kStabilityTol, !stable, "no stable with H^2>=tau^2");
      push_check(out, "nil_ii", stable && H2 < t2,
                 area * std::abs(H2 - t2) > 2.0 * M_PI * (g - 1) - 1e-9, "area bound");
      break;
    }
    case SpaceKind::Sl2Universal: {
      double thresh = space.tau * space.tau - space.kappa / 2.0;
      push_check(out, "sl2_i", H2 >= thresh - kStabilityTol, !stable,
                 "no stable with H^2>=tau^2-k/2");
      push_check(out, "sl2_ii", stable && H2 < thresh,
                 area * std::abs(H2 - thresh) > 2.0 * M_PI * (g - 1) - 1e-9, "area bound");
      break;
    }
    case SpaceKind::BergerSphere:
      push_check(out, "berger_no_stable", true, !stable,
                 "no strongly stable surfaces in Berger spheres");
      break;
    default:
      break;
  }
  return out;
}

namespace {

struct MeshExtremes {
  double max_phi2 = 0.0;
  double max_abs_nxi = 0.0;
  double min_nxi2 = 1.0;
  double max_abs_K = 0.0;
  double max_ric_dev_2c = 0.0;  // max |Ric(N,N) - 2c|, c = sectional lower bound
};

MeshExtremes extremes(const GeometryMesh& mesh) {
  MeshExtremes e;
  double c = sectional_lower_bound(mesh.space);
  for (const auto& v : mesh.vertex) {
    e.max_phi2 = std::max(e.max_phi2, std::abs(v.phi_norm2));
    e.max_abs_nxi = std::max(e.max_abs_nxi, std::abs(v.nxi));
    e.min_nxi2 = std::min(e.min_nxi2, v.nxi * v.nxi);
    e.max_abs_K = std::max(e.max_abs_K, std::abs(v.K));
    double ric = v.q - v.A_norm2;
    e.max_ric_dev_2c = std::max(e.max_ric_dev_2c, std::abs(ric - 2.0 * c));
  }
  return e;
}

EqualityCase classify(TheoremId id, const GeometryMesh& mesh, const MeshExtremes& e,
                      double tol_eq) {
  switch (id) {
    case TheoremId::T1_1_i:
    case TheoremId::C1_2_i:
      if (e.max_phi2 < 1e-6 && e.max_ric_dev_2c < 1e-4)
        return EqualityCase::totally_umbilic_min_ricci;
      return EqualityCase::none;
    case TheoremId::T1_1_ii:
      // equality needs genus 1 and constant ambient-tangent curvature, which
      // in a space form reduces to the flat-torus test below
      if (mesh.space.kind != SpaceKind::SpaceForm) return EqualityCase::none;
      [[fallthrough]];
    case TheoremId::C1_2_ii:
      if (mesh.genus == 1 && e.max_abs_K < tol_eq) return EqualityCase::clifford_torus;
      return EqualityCase::none;
    case TheoremId::S2R_i:
    case TheoremId::S2S1_i:
      if (e.min_nxi2 > 1.0 - 1e-6) return EqualityCase::horizontal_slice;
      return EqualityCase::none;
    case TheoremId::S2S1_ii:
    case TheoremId::SB_A_ii:
      if (e.max_abs_nxi < 1e-6 && mesh.genus == 1) return EqualityCase::hopf_torus;
      return EqualityCase::none;
    default:
      return EqualityCase::none;
  }
}

BoundReport make_report(TheoremId id, double bound, bool strict, double lambda1,
                        const GeometryMesh& mesh, const MeshExtremes& e,
                        const VerifyOptions& opt) {
  BoundReport r;
  r.theorem_id = id;
  r.bound_value = bound;
  r.lambda1 = lambda1;
  r.margin = bound - lambda1;
  r.strict = strict;
  if (!strict && std::abs(r.margin) < opt.tol_eq * (std::abs(bound) + 1.0))
    r.equality_case = classify(id, mesh, e, opt.tol_eq);
  return r;
}

}  // namespace

VerifyResult verify(const GeometryMesh& mesh, const SpectrumResult& spec,
                    const VerifyOptions& opt) {
  CmcStats st = cmc_stats(mesh);
  if (st.max_abs_dev > 1e-6 * (1.0 + std::abs(st.mean_H)))
    throw NonConstantH("verify requires a CMC mesh, max H deviation " +
                       std::to_string(st.max_abs_dev));
  const double H = st.mean_H;
  const double lambda1 = spec.lambda1();
  const MeshExtremes e = extremes(mesh);

  VerifyResult out;
  auto [b_i, b_ii] = bound_theorem_1_1(sectional_lower_bound(mesh.space), H, mesh.genus, mesh.area);
  out.reports.push_back(
      make_report(TheoremId::T1_1_i, b_i, false, lambda1, mesh, e, opt));
  out.reports.push_back(
      make_report(TheoremId::T1_1_ii, b_ii, false, lambda1, mesh, e, opt));

  if (mesh.space.kind == SpaceKind::SpaceForm) {
    auto cls = bound_space_form(mesh.space.c, H, e.max_phi2 < 1e-6);
    out.reports.push_back(make_report(cls.id, cls.value, false, lambda1, mesh, e, opt));
  } else {
    for (const auto& hb : bound_homogeneous(mesh.space, H, mesh.genus, mesh.area))
      out.reports.push_back(make_report(hb.id, hb.bound, hb.strict, lambda1, mesh, e, opt));
  }

  out.corollaries = stability_corollaries(mesh.space, H, mesh.genus, mesh.area, lambda1);

  for (const auto& r : out.reports)
    if (r.margin < -opt.tol_verify * (std::abs(r.bound_value) + 1.0)) out.pass = false;
  for (const auto& c : out.corollaries)
    if (!c.consistent) out.pass = false;

  // diagnostic: the near-vertical set has empty interior when tau != 0
  if (mesh.space.is_ekt() && mesh.space.tau != 0.0) {
    Eigen::VectorXd mass = Eigen::VectorXd::Zero(mesh.vertex_count());
    for (int t = 0; t < mesh.triangle_count(); ++t)
      for (int k = 0; k < 3; ++k) mass[mesh.triangles[t][k]] += mesh.tri_areas[t] / 3.0;
    double near = 0.0;
    for (int i = 0; i < mesh.vertex_count(); ++i)
      if (mesh.vertex[i].nxi * mesh.vertex[i].nxi > 1.0 - 1e-3) near += mass[i];
    out.near_vertical_fraction = near / mesh.area;
    out.near_vertical_warning = out.near_vertical_fraction > 0.1;
  }
  return out;
}

std::string reports_to_csv(const std::vector<BoundReport>& reports) {
  std::ostringstream os;
  os << "theorem_id,bound,lambda1,margin,strict,equality_case\n";
  os.precision(15);
  for (const auto& r : reports)
    os << to_string(r.theorem_id) << ',' << r.bound_value << ',' << r.lambda1 << ',' << r.margin
       << ',' << (r.strict ? "true" : "false") << ',' << to_string(r.equality_case) << '\n';
  return os.str();
}

std::string verify_to_json(const VerifyResult& result) {
  nlohmann::json j;
  j["pass"] = result.pass;
  j["near_vertical_fraction"] = result.near_vertical_fraction;
  j["near_vertical_warning"] = result.near_vertical_warning;
  j["reports"] = nlohmann::json::array();
  for (const auto& r : result.reports)
    j["reports"].push_back({{"theorem_id", to_string(r.theorem_id)},
                            {"bound", r.bound_value},
                            {"lambda1", r.lambda1},
                            {"margin", r.margin},
                            {"strict", r.strict},
                            {"equality_case", to_string(r.equality_case)}});
  j["corollaries"] = nlohmann::json::array();
  for (const auto& c : result.corollaries)
    j["corollaries"].push_back({{"name", c.name},
                                {"applicable", c.applicable},
                                {"consistent", c.consistent},
                                {"detail", c.detail}});
  return j.dump(2);
}

}  // namespace cmcstab
