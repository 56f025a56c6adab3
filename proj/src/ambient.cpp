#include "cmcstab/ambient.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace cmcstab {

const char* to_string(SpaceKind k) {
  switch (k) {
    case SpaceKind::SpaceForm: return "SpaceForm";
    case SpaceKind::ProductS2R: return "ProductS2R";
    case SpaceKind::ProductS2S1: return "ProductS2S1";
    case SpaceKind::ProductH2R: return "ProductH2R";
    case SpaceKind::BergerSphere: return "BergerSphere";
    case SpaceKind::Heisenberg: return "Heisenberg";
    case SpaceKind::Sl2Universal: return "Sl2Universal";
  }
  return "?";
}

SpaceKind space_kind_from_string(const std::string& s) {
  if (s == "SpaceForm") return SpaceKind::SpaceForm;
  if (s == "ProductS2R") return SpaceKind::ProductS2R;
  if (s == "ProductS2S1") return SpaceKind::ProductS2S1;
  if (s == "ProductH2R") return SpaceKind::ProductH2R;
  if (s == "BergerSphere") return SpaceKind::BergerSphere;
  if (s == "Heisenberg") return SpaceKind::Heisenberg;
  if (s == "Sl2Universal") return SpaceKind::Sl2Universal;
  throw InvalidSpace("unknown space kind: " + s);
}

void AmbientSpace::validate() const {
  auto fail = [&](const std::string& msg) {
    throw InvalidSpace(std::string(to_string(kind)) + ": " + msg);
  };
  switch (kind) {
    case SpaceKind::SpaceForm:
      if (!std::isfinite(c)) fail("non-finite curvature c");
      break;
    case SpaceKind::ProductS2R:
      if (!(kappa > 0.0)) fail("requires kappa > 0");
      if (tau != 0.0) fail("requires tau = 0");
      break;
    case SpaceKind::ProductS2S1:
      if (!(kappa > 0.0)) fail("requires kappa > 0");
      if (tau != 0.0) fail("requires tau = 0");
      if (!(circle_length > 0.0)) fail("requires circle_length > 0");
      break;
    case SpaceKind::ProductH2R:
      if (!(kappa < 0.0)) fail("requires kappa < 0");
      if (tau != 0.0) fail("requires tau = 0");
      break;
    case SpaceKind::BergerSphere:
      if (!(kappa > 0.0)) fail("requires kappa > 0");
      if (tau == 0.0) fail("requires tau != 0");
      break;
    case SpaceKind::Heisenberg:
      if (kappa != 0.0) fail("requires kappa = 0");
      if (tau == 0.0) fail("requires tau != 0");
      break;
    case SpaceKind::Sl2Universal:
      if (!(kappa < 0.0)) fail("requires kappa < 0");
      if (tau == 0.0) fail("requires tau != 0");
      break;
  }
  if (is_ekt() && kappa - 4.0 * tau * tau == 0.0)
    fail("kappa - 4 tau^2 must be nonzero (4-dimensional isometry group)");
}

AmbientSpace AmbientSpace::space_form(double c) {
  AmbientSpace sp{SpaceKind::SpaceForm, c, 0.0, 0.0, 0.0};
  sp.validate();
  return sp;
}
AmbientSpace AmbientSpace::product_s2r(double kappa) {
  AmbientSpace sp{SpaceKind::ProductS2R, 0.0, kappa, 0.0, 0.0};
  sp.validate();
  return sp;
}
AmbientSpace AmbientSpace::product_s2s1(double kappa, double circle_length) {
  AmbientSpace sp{SpaceKind::ProductS2S1, 0.0, kappa, 0.0, circle_length};
  sp.validate();
  return sp;
}
AmbientSpace AmbientSpace::product_h2r(double kappa) {
  AmbientSpace sp{SpaceKind::ProductH2R, 0.0, kappa, 0.0, 0.0};
  sp.validate();
  return sp;
}
AmbientSpace AmbientSpace::berger_sphere(double kappa, double tau) {
  AmbientSpace sp{SpaceKind::BergerSphere, 0.0, kappa, tau, 0.0};
  sp.validate();
  return sp;
}
AmbientSpace AmbientSpace::heisenberg(double tau) {
  AmbientSpace sp{SpaceKind::Heisenberg, 0.0, 0.0, tau, 0.0};
  sp.validate();
  return sp;
}
AmbientSpace AmbientSpace::sl2_universal(double kappa, double tau) {
  AmbientSpace sp{SpaceKind::Sl2Universal, 0.0, kappa, tau, 0.0};
  sp.validate();
  return sp;
}

bool in_chart(const AmbientSpace& sp, const Vec3d& p) {
  if (!(std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z))) return false;
  double denom = chart_denominator(sp, p);
  return denom > kChartGuard && denom < 1.0 / kChartGuard;
}

void require_in_chart(const AmbientSpace& sp, const Vec3d& p) {
  if (!in_chart(sp, p)) {
    std::ostringstream os;
    os << "point (" << p.x << ", " << p.y << ", " << p.z << ") outside chart of "
       << to_string(sp.kind);
    throw PointOutsideChart(os.str());
  }
}

namespace {

void require_same_base(const AmbientPoint& a, const AmbientPoint& b) {
  double scale = 1.0 + norm(a.coords) + norm(b.coords);
  if (a.chart_id != b.chart_id || norm(a.coords - b.coords) > 1e-12 * scale)
    throw MismatchedBasePoints("vectors based at different points");
}

void require_unit(const AmbientSpace& sp, const AmbientVector& X, double tol) {
  Mat3d g = metric_at(sp, X.base);
  double n2 = inner(g, X.components, X.components);
  if (std::abs(n2 - 1.0) > tol)
    throw NotUnitVector("expected unit vector, |X|^2 = " + std::to_string(n2));
}

}  // namespace

Mat3d metric_at(const AmbientSpace& sp, const AmbientPoint& p) {
  require_in_chart(sp, p.coords);
  return metric_t(sp, p.coords);
}

Christoffel3<double> christoffel_at(const AmbientSpace& sp, const AmbientPoint& p) {
  require_in_chart(sp, p.coords);
  return christoffel_t(sp, p.coords);
}

double curvature_4tensor(const AmbientSpace& sp, const AmbientPoint& p, const AmbientVector& X,
                         const AmbientVector& Y, const AmbientVector& Z, const AmbientVector& W) {
  require_in_chart(sp, p.coords);
  require_same_base(p, X.base);
  require_same_base(p, Y.base);
  require_same_base(p, Z.base);
  require_same_base(p, W.base);

  Mat3d g = metric_t(sp, p.coords);
  auto ip = [&](const AmbientVector& a, const AmbientVector& b) {
    return inner(g, a.components, b.components);
  };

  if (sp.kind == SpaceKind::SpaceForm)
    return sp.c * (ip(Y, Z) * ip(X, W) - ip(X, Z) * ip(Y, W));

  AmbientVector xi{p, killing_chart_direction()};
  double k = sp.kappa, t = sp.tau;
  double xxi = ip(X, xi), yxi = ip(Y, xi), zxi = ip(Z, xi), wxi = ip(W, xi);
  return (k - 3.0 * t * t) * (ip(Y, Z) * ip(X, W) - ip(X, Z) * ip(Y, W)) +
         (k - 4.0 * t * t) * (xxi * zxi * ip(Y, W) - yxi * zxi * ip(X, W) +
                              ip(X, Z) * yxi * wxi - ip(Y, Z) * xxi * wxi);
}

double ricci_quadratic(const AmbientSpace& sp, const AmbientVector& X) {
  require_in_chart(sp, X.base.coords);
  require_unit(sp, X, 1e-10);
  if (sp.kind == SpaceKind::SpaceForm) return 2.0 * sp.c;
  Mat3d g = metric_t(sp, X.base.coords);
  double xxi = inner(g, X.components, killing_chart_direction());
  return sp.kappa - 2.0 * sp.tau * sp.tau + xxi * xxi * (4.0 * sp.tau * sp.tau - sp.kappa);
}

double sectional(const AmbientSpace& sp, const AmbientVector& nu) {
  require_in_chart(sp, nu.base.coords);
  require_unit(sp, nu, 1e-10);
  if (sp.kind == SpaceKind::SpaceForm) return sp.c;
  Mat3d g = metric_t(sp, nu.base.coords);
  double nxi = inner(g, nu.components, killing_chart_direction());
  return sp.tau * sp.tau + nxi * nxi * (sp.kappa - 4.0 * sp.tau * sp.tau);
}

AmbientVector killing_at(const AmbientSpace& sp, const AmbientPoint& p) {
  if (sp.kind == SpaceKind::SpaceForm)
    throw NoKillingField("space forms carry no distinguished Killing field");
  require_in_chart(sp, p.coords);
  return {p, killing_chart_direction()};
}

AmbientVector vector_product(const AmbientSpace& sp, const AmbientVector& X,
                             const AmbientVector& Y) {
  require_same_base(X.base, Y.base);
  Mat3d g = metric_at(sp, X.base);
  double vol = std::sqrt(g.det());
  // covariant components vol * eps_abc X^a Y^b, then raise
  Vec3d cov = vol * cross(X.components, Y.components);
  Mat3d ginv = g.inverse();
  return {X.base, ginv * cov};
}

double sectional_lower_bound(const AmbientSpace& sp) {
  if (sp.kind == SpaceKind::SpaceForm) return sp.c;
  // K(nu) is affine in <nu,xi>^2 over [0,1]
  double t2 = sp.tau * sp.tau;
  return std::min(t2, sp.kappa - 3.0 * t2);
}

}  // namespace cmcstab
