#include "cmcstab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SparseCholesky>

#include <json.hpp>

#include "cmcstab/errors.hpp"

namespace cmcstab {

namespace {

// Local P1 stiffness of a triangle given by its three edge lengths
// (entry k = length of the edge opposite corner k) and its area:
// K[i][j] = -cot(angle at the corner opposite edge (i,j)) / 2.
std::array<std::array<double, 3>, 3> local_stiffness(const std::array<double, 3>& l, double area) {
  std::array<double, 3> cot;
  for (int k = 0; k < 3; ++k) {
    double a = l[(k + 1) % 3], b = l[(k + 2) % 3], c = l[k];
    cot[k] = (a * a + b * b - c * c) / (4.0 * area);
  }
  std::array<std::array<double, 3>, 3> K{};
  for (int k = 0; k < 3; ++k) {
    int i = (k + 1) % 3, j = (k + 2) % 3;
    K[i][j] = K[j][i] = -0.5 * cot[k];
  }
  for (int i = 0; i < 3; ++i) {
    K[i][i] = 0.0;
    for (int j = 0; j < 3; ++j)
      if (j != i) K[i][i] -= K[i][j];
  }
  return K;
}

void require_connected(const GeometryMesh& mesh) {
  int n = mesh.vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (const auto& t : mesh.triangles)
    for (int k = 0; k < 3; ++k) {
      adj[t[k]].push_back(t[(k + 1) % 3]);
      adj[t[(k + 1) % 3]].push_back(t[k]);
    }
  std::vector<char> seen(n, 0);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = 1;
  int count = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        bfs.push(w);
      }
  }
  if (count != n) throw DisconnectedMesh("mesh has more than one connected component");
}

Eigen::VectorXd apply_op(const DiscreteJacobi& op, const Eigen::VectorXd& x) {
  return op.L * x - op.Q.cwiseProduct(x);
}

}  // namespace

DiscreteJacobi assemble_jacobi(const GeometryMesh& mesh) {
  require_connected(mesh);
  int n = mesh.vertex_count();

  DiscreteJacobi op;
  op.area = mesh.area;
  op.M = Eigen::VectorXd::Zero(n);

  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(mesh.triangles.size() * 9);
  for (int t = 0; t < mesh.triangle_count(); ++t) {
    const auto& tri = mesh.triangles[t];
    double A = mesh.tri_areas[t];
    auto K = local_stiffness(mesh.edge_lengths[t], A);
    for (int i = 0; i < 3; ++i) {
      op.M[tri[i]] += A / 3.0;
      for (int j = 0; j < 3; ++j) trips.emplace_back(tri[i], tri[j], K[i][j]);
    }
  }
  op.L.resize(n, n);
  op.L.setFromTriplets(trips.begin(), trips.end());

  op.Q = Eigen::VectorXd::Zero(n);
  op.max_q = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    if (!(op.M[i] > 0.0))
      throw NegativeMassEntry("nonpositive lumped mass at vertex " + std::to_string(i));
    op.Q[i] = op.M[i] * mesh.vertex[i].q;
    op.max_q = std::max(op.max_q, mesh.vertex[i].q);
  }
  return op;
}

SpectrumResult lowest_eigenpairs(const DiscreteJacobi& op, const EigenOptions& opt) {
  if (opt.k < 1) throw Error("lowest_eigenpairs: k must be >= 1");
  if (!(opt.tol > 0.0)) throw Error("lowest_eigenpairs: tol must be > 0");
  const int n = static_cast<int>(op.M.size());
  const int m = std::min(n, opt.k + 5);
  if (m < opt.k) throw Error("lowest_eigenpairs: mesh smaller than requested k");

  // lambda_1 >= -max q (Rayleigh quotient with PSD stiffness), so this shift
  // keeps L - Q - shift*M positive definite.
  const double sigma = opt.shift.value_or(-op.max_q - 1.0);

  Eigen::SparseMatrix<double> K = op.L;
  for (int i = 0; i < n; ++i) K.coeffRef(i, i) -= op.Q[i] + sigma * op.M[i];
  K.makeCompressed();
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(K);
  if (solver.info() != Eigen::Success)
    throw SolverNoConvergence("shifted operator factorization failed (shift " +
                              std::to_string(sigma) + ")");

  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  Eigen::MatrixXd X(n, m);
  X.col(0).setOnes();
  for (int j = 1; j < m; ++j)
    for (int i = 0; i < n; ++i) X(i, j) = U(rng);

  SpectrumResult out;
  Eigen::VectorXd vals;
  double best_res = std::numeric_limits<double>::infinity();
  int it = 0;
  for (; it < opt.max_iter; ++it) {
    // M-orthonormalize the block
    Eigen::MatrixXd G = X.transpose() * op.M.asDiagonal() * X;
    Eigen::LLT<Eigen::MatrixXd> llt(G);
    if (llt.info() != Eigen::Success)
      throw SolverNoConvergence("block lost rank during orthonormalization");
    X = llt.matrixL().solve(X.transpose()).transpose();

    // Rayleigh-Ritz
    Eigen::MatrixXd AX(n, m);
    for (int j = 0; j < m; ++j) AX.col(j) = apply_op(op, X.col(j));
    Eigen::MatrixXd S = X.transpose() * AX;
    S = 0.5 * (S + S.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
    vals = es.eigenvalues();
    X = (X * es.eigenvectors()).eval();

    double worst = 0.0;
    for (int j = 0; j < opt.k; ++j) {
      Eigen::VectorXd r = apply_op(op, X.col(j)) - vals[j] * op.M.cwiseProduct(X.col(j));
      worst = std::max(worst, r.norm());
    }
    best_res = std::min(best_res, worst);
    if (worst < opt.tol) break;

    // inverse iteration step: X <- (L - Q - sigma M)^{-1} M X
    X = solver.solve((op.M.asDiagonal() * X).eval());
    if (solver.info() != Eigen::Success)
      throw SolverNoConvergence("shifted solve failed at iteration " + std::to_string(it));
  }
  if (it == opt.max_iter)
    throw SolverNoConvergence("no convergence in " + std::to_string(opt.max_iter) +
                              " iterations; best residual " + std::to_string(best_res));

  out.iterations = it + 1;
  out.eigenvalues.resize(opt.k);
  out.residuals.resize(opt.k);
  out.eigenfunctions.resize(n, opt.k);
  for (int j = 0; j < opt.k; ++j) {
    out.eigenvalues[j] = vals[j];
    out.eigenfunctions.col(j) = X.col(j);
    Eigen::VectorXd r = apply_op(op, X.col(j)) - vals[j] * op.M.cwiseProduct(X.col(j));
    out.residuals[j] = r.norm();
  }

  // first eigenfunction: orient by its largest-magnitude entry, then demand
  // a definite sign (simple first eigenvalue on a connected mesh)
  Eigen::VectorXd rho = out.eigenfunctions.col(0);
  int imax = 0;
  rho.cwiseAbs().maxCoeff(&imax);
  if (rho[imax] < 0.0) rho = -rho;
  out.eigenfunctions.col(0) = rho;
  double floor = -1e-8 * rho[imax];
  if (rho.minCoeff() < floor)
    throw IndefiniteFirstEigenfunction(
        "first eigenfunction changes sign; discretization too coarse");
  out.rho_positive = rho.minCoeff() > 0.0;
  return out;
}

double rayleigh_quotient(const DiscreteJacobi& op, const Eigen::VectorXd& f) {
  double denom = f.dot(op.M.cwiseProduct(f));
  if (!(denom > 0.0)) throw ZeroFunction("Rayleigh quotient of the zero function");
  return f.dot(apply_op(op, f)) / denom;
}

double alpha_invariant(const GeometryMesh& mesh, const Eigen::VectorXd& rho) {
  if (rho.size() != mesh.vertex_count())
    throw Error("alpha_invariant: vector size does not match mesh");
  for (int i = 0; i < rho.size(); ++i)
    if (!(rho[i] > 0.0))
      throw NonPositiveEigenfunction("alpha invariant needs a strictly positive function");

  double alpha = 0.0;
  for (int t = 0; t < mesh.triangle_count(); ++t) {
    const auto& tri = mesh.triangles[t];
    auto K = local_stiffness(mesh.edge_lengths[t], mesh.tri_areas[t]);
    double grad2 = 0.0;  // integral of |grad rho|^2 over the triangle
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) grad2 += K[i][j] * rho[tri[i]] * rho[tri[j]];
    double mean = (rho[tri[0]] + rho[tri[1]] + rho[tri[2]]) / 3.0;
    // grad2 is a PSD quadratic form up to rounding; clamp stray -1e-16 terms
    alpha += std::max(grad2, 0.0) / (mean * mean);
  }
  return alpha;
}

double lambda1_identity_residual(const GeometryMesh& mesh, const SpectrumResult& spec) {
  CmcStats st = cmc_stats(mesh);
  if (st.max_abs_dev > 1e-6 * (1.0 + std::abs(st.mean_H)))
    throw NonConstantH("first-eigenvalue identity requires constant H, max deviation " +
                       std::to_string(st.max_abs_dev));
  const double H = st.mean_H;
  Eigen::VectorXd rho = spec.eigenfunctions.col(0);
  double alpha = alpha_invariant(mesh, rho);

  // lumped vertex masses for the curvature integrals
  Eigen::VectorXd mass = Eigen::VectorXd::Zero(mesh.vertex_count());
  for (int t = 0; t < mesh.triangle_count(); ++t)
    for (int k = 0; k < 3; ++k) mass[mesh.triangles[t][k]] += mesh.tri_areas[t] / 3.0;

  double rhs;
  if (mesh.space.is_ekt()) {
    double int_nxi2 = 0.0;
    for (int i = 0; i < mesh.vertex_count(); ++i)
      int_nxi2 += mass[i] * mesh.vertex[i].nxi * mesh.vertex[i].nxi;
    double k4t = mesh.space.kappa - 4.0 * mesh.space.tau * mesh.space.tau;
    rhs = -4.0 * H * H - mesh.space.kappa -
          (alpha + 8.0 * M_PI * (mesh.genus - 1) + k4t * int_nxi2) / mesh.area;
  } else {
    // space form: 2 * ambient sectional + Ric(N,N) = 2c + 2c = 4c pointwise
    double integral = 4.0 * mesh.space.c * mesh.area;
    rhs = -4.0 * H * H - (alpha + 8.0 * M_PI * (mesh.genus - 1) + integral) / mesh.area;
  }
  return std::abs(spec.lambda1() - rhs);
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::stable: return "stable";
    case Stability::unstable: return "unstable";
    case Stability::marginal: return "marginal";
  }
  return "?";
}

Stability is_strongly_stable(const SpectrumResult& spec, double tol) {
  double l1 = spec.lambda1();
  if (l1 > tol) return Stability::stable;
  if (l1 < -tol) return Stability::unstable;
  return Stability::marginal;
}

std::string spectrum_to_json(const SpectrumResult& spec, bool include_eigenfunctions) {
  nlohmann::json j;
  j["lambda"] = spec.eigenvalues;
  j["alpha"] = spec.alpha;
  j["rho_positive"] = spec.rho_positive;
  j["residuals"] = spec.residuals;
  j["iterations"] = spec.iterations;
  j["convention"] = "Jf+lambda f=0";
  if (include_eigenfunctions) {
    std::vector<std::vector<double>> fs;
    for (int c = 0; c < spec.eigenfunctions.cols(); ++c) {
      auto col = spec.eigenfunctions.col(c);
      fs.emplace_back(col.begin(), col.end());
    }
    j["eigenfunctions"] = fs;
  }
  return j.dump(2);
}

}  // namespace cmcstab
