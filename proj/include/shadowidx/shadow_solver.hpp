#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "shadowidx/shadow_geometry.hpp"

namespace sv {

struct solver_config {
  int starts = 64;
  double tol = 1e-8;
  int max_iters = 5000;
  std::uint64_t seed = 1729;
  double step_init = 0.5;
  double step_shrink = 0.5;
};

struct solver_result {
  sg::grassmann_frame frame;
  double residual = 0.0;
  long long evaluations = 0;
  bool converged = false;
  int starts_used = 0;
  std::string warning;
};

using objective_fn = std::function<Eigen::VectorXd(const sg::grassmann_frame&)>;

// orthonormalization (modified Gram-Schmidt) of a standard-normal matrix
sg::grassmann_frame random_frame(int dim, int n, std::mt19937_64& rng);

// multistart compass search over Gr(n, 2n): perturb one frame column along a
// complement direction, re-orthonormalize, accept on decrease (re-expanding
// the step), shrink on stall.  Descent decisions use the componentwise
// scaled norm ||f ./ scale|| so mixed-magnitude objectives stay conditioned,
// while termination, merging, and the reported residual always use the raw
// ||f||.  Starts are independent (own RNG stream per index) and merged by
// minimal residual with index tie-break, so the result does not depend on
// scheduling.  The winner is re-evaluated from scratch before reporting.
solver_result minimize_on_grassmannian(int dim, int n, const objective_fn& objective,
                                       const solver_config& cfg,
                                       const Eigen::VectorXd& scale = Eigen::VectorXd());

solver_result solve_equal_shadows(const sg::convex_body& c,
                                  const std::vector<sg::functional>& selection,
                                  const solver_config& cfg);

solver_result solve_sections(const sg::convex_body& c,
                             const std::vector<sg::functional>& selection,
                             const solver_config& cfg);

solver_result solve_inertia_split(const Eigen::MatrixXd& points,
                                  const solver_config& cfg);

}  // namespace sv
