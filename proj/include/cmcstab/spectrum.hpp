#pragma once

// Discrete stability operator on a GeometryMesh: P1 cotangent stiffness,
// lumped mass, vertex-sampled potential, a deterministic shift-invert block
// eigensolver for the lowest eigenpairs, and the derived spectral
// quantities (Rayleigh quotient, alpha invariant, first-eigenvalue
// identity, strong-stability predicate).
//
// Sign convention (fixed project-wide): an eigenvalue lambda satisfies
// J f + lambda f = 0 with J = Delta + q, Delta the geometer's (negative
// semidefinite) Laplacian. Discretely: (L - Q) x = lambda M x with L the
// positive-semidefinite stiffness matrix.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "cmcstab/surface.hpp"

namespace cmcstab {

struct DiscreteJacobi {
  Eigen::SparseMatrix<double> L;  // stiffness, symmetric PSD, kernel = constants
  Eigen::VectorXd M;              // lumped (barycentric) vertex masses, diagonal
  Eigen::VectorXd Q;              // potential, Q_i = M_i * q_i
  double area = 0.0;
  double max_q = 0.0;             // max_i q_i; certifies lambda_1 >= -max_q
};

DiscreteJacobi assemble_jacobi(const GeometryMesh& mesh);

struct EigenOptions {
  int k = 5;               // number of lowest eigenpairs
  double tol = 1e-10;      // residual tolerance ||(L-Q)x - lambda M x|| / ||x||_M
  int max_iter = 500;
  std::optional<double> shift;  // default: -max_q - 1 (certified below lambda_1)
  std::uint64_t seed = 0x5eed5eedULL;
};

struct SpectrumResult {
  std::vector<double> eigenvalues;  // lambda_1 <= ... <= lambda_k
  Eigen::MatrixXd eigenfunctions;   // columns, M-orthonormal; column 0 = rho
  std::vector<double> residuals;
  double alpha = 0.0;               // filled by callers via alpha_invariant
  bool rho_positive = false;
  int iterations = 0;

  double lambda1() const { return eigenvalues.at(0); }
};

SpectrumResult lowest_eigenpairs(const DiscreteJacobi& op, const EigenOptions& opt = {});

double rayleigh_quotient(const DiscreteJacobi& op, const Eigen::VectorXd& f);

double alpha_invariant(const GeometryMesh& mesh, const Eigen::VectorXd& rho);

// |lambda_1 - RHS| of the closed first-eigenvalue identity for CMC surfaces;
// uses the homogeneous-space form when the ambient is a bundle E(kappa,tau)
// and the space-form version otherwise.
double lambda1_identity_residual(const GeometryMesh& mesh, const SpectrumResult& spec);

enum class Stability { stable, unstable, marginal };
std::string to_string(Stability s);

Stability is_strongly_stable(const SpectrumResult& spec, double tol = 1e-2);

// JSON document with the eigenvalue sign-convention string embedded.
std::string spectrum_to_json(const SpectrumResult& spec, bool include_eigenfunctions = false);

}  // namespace cmcstab
