#include "shadowidx/shadow_solver.hpp"

#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>

namespace sv {

namespace {

std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool mgs(Eigen::MatrixXd& m) {
  for (int j = 0; j < m.cols(); ++j) {
    for (int i = 0; i < j; ++i) m.col(j) -= m.col(i).dot(m.col(j)) * m.col(i);
    double nrm = m.col(j).norm();
    if (nrm < 1e-10) return false;
    m.col(j) /= nrm;
  }
  return true;
}

void check_config(const solver_config& cfg) {
  if (cfg.starts < 1)
    throw std::invalid_argument("solver_config: starts must be at least 1");
  if (!(cfg.tol > 0)) throw std::invalid_argument("solver_config: tol must be positive");
  if (cfg.max_iters < 1)
    throw std::invalid_argument("solver_config: max_iters must be at least 1");
  if (!(cfg.step_init > 0))
    throw std::invalid_argument("solver_config: step_init must be positive");
  if (!(cfg.step_shrink > 0) || cfg.step_shrink >= 1)
    throw std::invalid_argument("solver_config: step_shrink must lie in (0, 1)");
}

struct start_outcome {
  Eigen::MatrixXd frame;
  double residual = std::numeric_limits<double>::infinity();
  long long evals = 0;
};

start_outcome run_start(int dim, int n, const objective_fn& objective,
                        const solver_config& cfg, const Eigen::VectorXd& scale,
                        int index) {
  std::mt19937_64 rng(splitmix(cfg.seed ^ splitmix(0x5eed + std::uint64_t(index))));
  start_outcome out;
  // first = descent value (componentwise scaled), second = raw residual
  auto eval = [&](const Eigen::MatrixXd& cols) {
    ++out.evals;
    Eigen::VectorXd f = objective(sg::grassmann_frame{cols});
    double raw = f.norm();
    if (scale.size() == 0) return std::pair<double, double>(raw, raw);
    return std::pair<double, double>(f.cwiseQuotient(scale).norm(), raw);
  };

  Eigen::MatrixXd frame = random_frame(dim, n, rng).columns;
  auto [val, raw] = eval(frame);
  double step = cfg.step_init;
  int last_a = -1, last_b = -1;
  double last_sgn = 0;
  for (int iter = 0; iter < cfg.max_iters && raw >= cfg.tol && step > 1e-13; ++iter) {
    Eigen::MatrixXd comp = sg::complement_frame(sg::grassmann_frame{frame}).columns;

    // pattern move: retry the last successful direction before a full sweep,
    // which makes long valley-following runs cost one evaluation per step
    if (last_a >= 0) {
      Eigen::MatrixXd probe = frame;
      probe.col(last_b) += last_sgn * step * comp.col(last_a);
      if (mgs(probe)) {
        auto [v, vr] = eval(probe);
        if (v < val) {
          frame = probe;
          val = v;
          raw = vr;
          step = std::min(step / cfg.step_shrink, cfg.step_init);
          continue;
        }
      }
    }

    double best_val = val, best_raw = raw;
    Eigen::MatrixXd best_frame;
    int best_a = -1, best_b = -1;
    double best_sgn = 0;
    for (int a = 0; a < dim - n; ++a)
      for (int b = 0; b < n; ++b)
        for (double sgn : {1.0, -1.0}) {
          if (a == last_a && b == last_b && sgn == last_sgn) continue;
          Eigen::MatrixXd probe = frame;
          probe.col(b) += sgn * step * comp.col(a);
          if (!mgs(probe)) continue;
          auto [v, vr] = eval(probe);
          if (v < best_val) {
            best_val = v;
            best_raw = vr;
            best_frame = probe;
            best_a = a;
            best_b = b;
            best_sgn = sgn;
          }
        }
    if (best_val < val) {
      frame = best_frame;
      val = best_val;
      raw = best_raw;
      last_a = best_a;
      last_b = best_b;
      last_sgn = best_sgn;
      step = std::min(step / cfg.step_shrink, cfg.step_init);
    } else {
      step *= cfg.step_shrink;
    }
  }
  out.frame = frame;
  out.residual = raw;
  return out;
}

}  // namespace

sg::grassmann_frame random_frame(int dim, int n, std::mt19937_64& rng) {
  if (n < 1 || dim != 2 * n)
    throw std::invalid_argument("random_frame: need dim == 2n with n >= 1");
  std::normal_distribution<double> gauss;
  for (int attempt = 0; attempt < 64; ++attempt) {
    Eigen::MatrixXd m(dim, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < dim; ++i) m(i, j) = gauss(rng);
    if (mgs(m)) return sg::make_frame(m);
  }
  throw std::runtime_error("random_frame: degenerate sample stream");
}

solver_result minimize_on_grassmannian(int dim, int n, const objective_fn& objective,
                                       const solver_config& cfg,
                                       const Eigen::VectorXd& scale) {
  check_config(cfg);
  if (n < 1 || dim != 2 * n)
    throw std::invalid_argument("minimize_on_grassmannian: need dim == 2n with n >= 1");
  if (scale.size() != 0 && !(scale.minCoeff() > 0))
    throw std::invalid_argument("minimize_on_grassmannian: scale entries must be positive");

  std::vector<start_outcome> outcomes(cfg.starts);
  unsigned workers = std::thread::hardware_concurrency();
  if (workers <= 1 || cfg.starts == 1) {
    for (int i = 0; i < cfg.starts; ++i)
      outcomes[i] = run_start(dim, n, objective, cfg, scale, i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    unsigned count = std::min<unsigned>(workers, unsigned(cfg.starts));
    for (unsigned w = 0; w < count; ++w)
      pool.emplace_back([&] {
        for (int i; (i = next.fetch_add(1)) < cfg.starts;)
          outcomes[i] = run_start(dim, n, objective, cfg, scale, i);
      });
    for (auto& t : pool) t.join();
  }

  int best = 0;
  long long total_evals = 0;
  for (int i = 0; i < cfg.starts; ++i) {
    total_evals += outcomes[i].evals;
    if (outcomes[i].residual < outcomes[best].residual) best = i;
  }

  solver_result r;
  r.frame = sg::make_frame(outcomes[best].frame);
  r.residual = objective(r.frame).norm();
  r.evaluations = total_evals + 1;
  r.converged = r.residual < cfg.tol;
  r.starts_used = cfg.starts;
  return r;
}

namespace {

// rough magnitude of each functional for a body of circumscribed radius R,
// used only to condition the descent
Eigen::VectorXd functional_scales(const sg::convex_body& c,
                                  const std::vector<sg::functional>& selection) {
  double r = 1 + c.vertices.colwise().norm().maxCoeff();
  Eigen::VectorXd scale(selection.size());
  for (std::size_t i = 0; i < selection.size(); ++i)
    scale(i) = selection[i] == sg::functional::area ? r * r : r;
  return scale;
}

}  // namespace

solver_result solve_equal_shadows(const sg::convex_body& c,
                                  const std::vector<sg::functional>& selection,
                                  const solver_config& cfg) {
  if (c.dimension != 4)
    throw std::invalid_argument("solve_equal_shadows: implemented for bodies in R^4");
  if (selection.empty())
    throw std::invalid_argument("solve_equal_shadows: empty selection");
  auto objective = [&](const sg::grassmann_frame& f) {
    return sg::functional_vector(c, f, selection);
  };
  solver_result r =
      minimize_on_grassmannian(4, 2, objective, cfg, functional_scales(c, selection));
  if (selection.size() > 3)
    r.warning =
        "selection exceeds the 3 functionals guaranteed for planes in R^4; "
        "result is best-effort";
  return r;
}

solver_result solve_sections(const sg::convex_body& c,
                             const std::vector<sg::functional>& selection,
                             const solver_config& cfg) {
  if (c.dimension != 4)
    throw std::invalid_argument("solve_sections: implemented for bodies in R^4");
  if (selection.empty()) throw std::invalid_argument("solve_sections: empty selection");
  if (!sg::origin_interior(c))
    throw std::invalid_argument(
        "solve_sections: the origin must lie strictly inside the body");
  auto objective = [&](const sg::grassmann_frame& f) {
    return sg::section_vector(c, f, selection);
  };
  solver_result r =
      minimize_on_grassmannian(4, 2, objective, cfg, functional_scales(c, selection));
  if (selection.size() > 3)
    r.warning =
        "selection exceeds the 3 functionals guaranteed for planes in R^4; "
        "result is best-effort";
  return r;
}

solver_result solve_inertia_split(const Eigen::MatrixXd& points,
                                  const solver_config& cfg) {
  if (points.rows() != 4)
    throw std::invalid_argument("solve_inertia_split: implemented for clouds in R^4");
  if (points.cols() < 1)
    throw std::invalid_argument("solve_inertia_split: empty point cloud");
  if (!points.allFinite())
    throw std::invalid_argument("solve_inertia_split: non-finite coordinate");
  auto objective = [&](const sg::grassmann_frame& f) {
    Eigen::VectorXd a = sg::inertia_char_coeffs(points, f);
    Eigen::VectorXd b = sg::inertia_char_coeffs(points, sg::complement_frame(f));
    return Eigen::VectorXd(a - b);
  };
  // the two coefficients grow like tr(S) and tr(S)^2
  double tau = 1 + (points * points.transpose()).trace();
  Eigen::Vector2d scale(tau, tau * tau);
  return minimize_on_grassmannian(4, 2, objective, cfg, scale);
}

}  // namespace sv
