#include "shadowidx/shadow_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace sg {

namespace {

double cross(const Eigen::Vector2d& o, const Eigen::Vector2d& a,
             const Eigen::Vector2d& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

void require_planar(const convex_body& c, const grassmann_frame& f,
                    const char* what) {
  if (c.dimension != 4 || f.columns.rows() != 4 || f.columns.cols() != 2)
    throw std::invalid_argument(std::string(what) +
                                ": planar pipeline needs a body in R^4 and a 4x2 frame");
}

struct circle {
  Eigen::Vector2d center{0, 0};
  double r2 = -1;  // squared radius, negative = empty
  bool covers(const Eigen::Vector2d& p) const {
    return r2 >= 0 && (p - center).squaredNorm() <= r2 * (1 + 1e-10) + 1e-24;
  }
};

circle circle_two(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  circle c;
  c.center = (a + b) / 2;
  c.r2 = (a - c.center).squaredNorm();
  return c;
}

circle circle_three(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                    const Eigen::Vector2d& c) {
  Eigen::Matrix2d m;
  m.row(0) = 2 * (b - a).transpose();
  m.row(1) = 2 * (c - a).transpose();
  Eigen::Vector2d rhs(b.squaredNorm() - a.squaredNorm(),
                      c.squaredNorm() - a.squaredNorm());
  double det = m.determinant();
  double scale = m.cwiseAbs().maxCoeff();
  if (std::abs(det) <= 1e-14 * scale * scale + 1e-300) {
    // nearly collinear: widest pair circle
    circle best = circle_two(a, b);
    for (const auto& cand : {circle_two(a, c), circle_two(b, c)})
      if (cand.r2 > best.r2) best = cand;
    return best;
  }
  circle out;
  out.center = m.inverse() * rhs;
  out.r2 = (a - out.center).squaredNorm();
  return out;
}

// maximize cost^T x subject to a x = b, x >= 0 (dense two-phase simplex,
// Bland's rule)
struct lp_result {
  bool feasible = false;
  double value = 0;
};

lp_result simplex_max(Eigen::MatrixXd a, Eigen::VectorXd b,
                      const Eigen::VectorXd& cost) {
  const double eps = 1e-11;
  const int m = int(a.rows()), n = int(a.cols());
  for (int i = 0; i < m; ++i)
    if (b(i) < 0) {
      a.row(i) = -a.row(i);
      b(i) = -b(i);
    }
  // columns: [original n][artificial m][rhs]
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m + 1, n + m + 1);
  t.block(0, 0, m, n) = a;
  t.block(0, n, m, m).setIdentity();
  t.col(n + m).head(m) = b;
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  auto pivot = [&](int pr, int pc) {
    t.row(pr) /= t(pr, pc);
    for (int i = 0; i <= m; ++i)
      if (i != pr && t(i, pc) != 0.0) t.row(i) -= t(i, pc) * t.row(pr);
    basis[pr] = pc;
  };
  auto run = [&](int allowed_cols) -> bool {
    for (int guard = 0; guard < 10000; ++guard) {
      int enter = -1;
      for (int j = 0; j < allowed_cols; ++j)
        if (t(m, j) > eps) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      double best = 0;
      for (int i = 0; i < m; ++i) {
        if (t(i, enter) <= eps) continue;
        double ratio = t(i, n + m) / t(i, enter);
        if (leave < 0 || ratio < best - 1e-15 ||
            (std::abs(ratio - best) <= 1e-15 && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded
      pivot(leave, enter);
    }
    return false;
  };

  // phase 1: maximize -sum(artificials); reduced costs start as column sums
  for (int j = 0; j < n; ++j) t(m, j) = t.col(j).head(m).sum();
  t(m, n + m) = b.sum();  // tracks sum of artificials still in the basis
  run(n);
  if (t(m, n + m) > 1e-7) return {false, 0};
  // pivot any leftover artificial out of the basis where possible
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    for (int j = 0; j < n; ++j)
      if (std::abs(t(i, j)) > 1e-9) {
        pivot(i, j);
        break;
      }
  }

  // phase 2 reduced costs for the real objective
  t.row(m).setZero();
  for (int j = 0; j < n; ++j) t(m, j) = cost(j);
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) t.row(m) -= cost(basis[i]) * t.row(i);
  if (!run(n)) return {true, std::numeric_limits<double>::infinity()};
  double value = 0;
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) value += cost(basis[i]) * t(i, n + m);
  return {true, value};
}

}  // namespace

convex_body make_body(int dimension, const std::vector<std::vector<double>>& verts) {
  if (dimension < 2 || dimension % 2 != 0)
    throw std::invalid_argument("make_body: dimension must be a positive even count");
  if (int(verts.size()) < dimension + 1)
    throw std::invalid_argument("make_body: a proper body needs at least dim+1 vertices");
  convex_body c;
  c.dimension = dimension;
  c.vertices.resize(dimension, int(verts.size()));
  for (int j = 0; j < int(verts.size()); ++j) {
    if (int(verts[j].size()) != dimension)
      throw std::invalid_argument("make_body: vertex arity mismatch");
    for (int i = 0; i < dimension; ++i) {
      if (!std::isfinite(verts[j][i]))
        throw std::invalid_argument("make_body: non-finite coordinate");
      c.vertices(i, j) = verts[j][i];
    }
  }
  Eigen::MatrixXd diffs =
      c.vertices.rightCols(c.vertices.cols() - 1).colwise() - c.vertices.col(0);
  if (Eigen::FullPivLU<Eigen::MatrixXd>(diffs).rank() < dimension)
    throw std::invalid_argument("make_body: vertices do not affinely span the space");
  return c;
}

grassmann_frame make_frame(const Eigen::MatrixXd& columns) {
  if (columns.rows() != 2 * columns.cols() || columns.cols() < 1)
    throw std::invalid_argument("make_frame: expected a 2n x n column matrix");
  if (!columns.allFinite())
    throw std::invalid_argument("make_frame: non-finite entry");
  Eigen::MatrixXd gram = columns.transpose() * columns;
  gram -= Eigen::MatrixXd::Identity(columns.cols(), columns.cols());
  if (gram.cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("make_frame: columns are not orthonormal");
  return grassmann_frame{columns};
}

grassmann_frame complement_frame(const grassmann_frame& f) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(f.columns);
  Eigen::MatrixXd q = qr.householderQ();
  return make_frame(q.rightCols(f.columns.cols()));
}

projector projector_from_frame(const grassmann_frame& f) {
  make_frame(f.columns);  // re-validate: projectors demand a genuine frame
  return projector{f.columns * f.columns.transpose()};
}

Eigen::VectorXd k_map(const projector& a) {
  Eigen::VectorXd v = a.matrix.row(0).transpose();
  v(0) -= 0.5;
  return v;
}

functional functional_from_name(const std::string& name) {
  if (name == "area") return functional::area;
  if (name == "perimeter") return functional::perimeter;
  if (name == "circumradius") return functional::circumradius;
  throw std::invalid_argument("unknown functional: " + name);
}

std::string functional_name(functional f) {
  switch (f) {
    case functional::area: return "area";
    case functional::perimeter: return "perimeter";
    case functional::circumradius: return "circumradius";
  }
  throw std::invalid_argument("unknown functional value");
}

double shadow_values::of(functional f) const {
  switch (f) {
    case functional::area: return area;
    case functional::perimeter: return perimeter;
    case functional::circumradius: return circumradius;
  }
  throw std::invalid_argument("unknown functional value");
}

std::vector<Eigen::Vector2d> convex_hull(std::vector<Eigen::Vector2d> pts) {
  auto less = [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  };
  auto same = [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return a.x() == b.x() && a.y() == b.y();
  };
  std::sort(pts.begin(), pts.end(), less);
  pts.erase(std::unique(pts.begin(), pts.end(), same), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Eigen::Vector2d> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

double polygon_area(const std::vector<Eigen::Vector2d>& hull) {
  if (hull.size() < 3) return 0;
  double s = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& p = hull[i];
    const auto& q = hull[(i + 1) % hull.size()];
    s += p.x() * q.y() - q.x() * p.y();
  }
  return std::abs(s) / 2;
}

double polygon_perimeter(const std::vector<Eigen::Vector2d>& hull) {
  if (hull.size() < 2) return 0;
  if (hull.size() == 2) return 2 * (hull[1] - hull[0]).norm();
  double s = 0;
  for (std::size_t i = 0; i < hull.size(); ++i)
    s += (hull[(i + 1) % hull.size()] - hull[i]).norm();
  return s;
}

double min_enclosing_radius(const std::vector<Eigen::Vector2d>& pts) {
  if (pts.empty()) return 0;
  std::vector<Eigen::Vector2d> p = pts;
  // fixed-seed Fisher-Yates; cheaper than a full engine in this hot path and
  // the minimal circle is unique, so the order only affects running time
  std::uint64_t state = 0x5eed;
  for (std::size_t i = p.size(); i > 1; --i) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    std::swap(p[i - 1], p[(state >> 33) % i]);
  }
  circle c{p[0], 0};
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (c.covers(p[i])) continue;
    c = circle{p[i], 0};
    for (std::size_t j = 0; j < i; ++j) {
      if (c.covers(p[j])) continue;
      c = circle_two(p[i], p[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (c.covers(p[k])) continue;
        c = circle_three(p[i], p[j], p[k]);
      }
    }
  }
  return std::sqrt(std::max(0.0, c.r2));
}

namespace {

shadow_values values_of_points(const std::vector<Eigen::Vector2d>& pts) {
  auto hull = convex_hull(pts);
  shadow_values v;
  v.area = polygon_area(hull);
  v.perimeter = polygon_perimeter(hull);
  v.circumradius = min_enclosing_radius(hull);
  return v;
}

std::vector<Eigen::Vector2d> matrix_points(const Eigen::MatrixXd& m) {
  std::vector<Eigen::Vector2d> pts(m.cols());
  for (int j = 0; j < m.cols(); ++j) pts[j] = m.col(j);
  return pts;
}

}  // namespace

shadow_values shadow_functionals(const convex_body& c, const grassmann_frame& f) {
  require_planar(c, f, "shadow_functionals");
  return values_of_points(matrix_points(f.columns.transpose() * c.vertices));
}

Eigen::VectorXd functional_vector(const convex_body& c, const grassmann_frame& f,
                                  const std::vector<functional>& selection) {
  if (selection.empty())
    throw std::invalid_argument("functional_vector: empty selection");
  shadow_values a = shadow_functionals(c, f);
  shadow_values b = shadow_functionals(c, complement_frame(f));
  Eigen::VectorXd out(selection.size());
  for (std::size_t i = 0; i < selection.size(); ++i)
    out(i) = a.of(selection[i]) - b.of(selection[i]);
  return out;
}

bool origin_interior(const convex_body& c) {
  const int dim = c.dimension, m = int(c.vertices.cols());
  // lambda = nu + s*1 with nu >= 0: maximize s subject to the simplex and
  // zero-barycenter constraints
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim + 1, m + 1);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(dim + 1);
  a.row(0).head(m).setOnes();
  a(0, m) = m;
  b(0) = 1;
  a.block(1, 0, dim, m) = c.vertices;
  a.col(m).tail(dim) = c.vertices.rowwise().sum();
  Eigen::VectorXd cost = Eigen::VectorXd::Zero(m + 1);
  cost(m) = 1;
  auto r = simplex_max(a, b, cost);
  return r.feasible && r.value > 1e-9;
}

std::vector<Eigen::Vector2d> section_polygon(const convex_body& c,
                                             const grassmann_frame& f) {
  require_planar(c, f, "section_polygon");
  const int m = int(c.vertices.cols());
  Eigen::MatrixXd comp = complement_frame(f).columns.transpose() * c.vertices;
  Eigen::MatrixXd y = f.columns.transpose() * c.vertices;
  const double scale = comp.cwiseAbs().maxCoeff() + 1;
  const double tol = 1e-9 * scale;
  std::vector<Eigen::Vector2d> pts;

  for (int j = 0; j < m; ++j)
    if (comp.col(j).lpNorm<Eigen::Infinity>() <= tol) pts.push_back(y.col(j));

  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Eigen::Vector2d d = comp.col(i) - comp.col(j);
      double den = d.squaredNorm();
      if (den <= tol * tol) continue;
      double u = comp.col(j).dot(comp.col(j) - comp.col(i)) / den;
      if (u < -1e-9 || u > 1 + 1e-9) continue;
      if ((u * d + comp.col(j).eval()).norm() > tol) continue;
      pts.push_back(u * y.col(i) + (1 - u) * y.col(j));
    }

  Eigen::Vector3d e1(1, 0, 0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        Eigen::Matrix3d sys;
        sys.row(0).setOnes();
        sys.block<2, 1>(1, 0) = comp.col(i);
        sys.block<2, 1>(1, 1) = comp.col(j);
        sys.block<2, 1>(1, 2) = comp.col(k);
        Eigen::Vector3d lam = sys.fullPivLu().solve(e1);
        if ((sys * lam - e1).norm() > 1e-9) continue;
        if (lam.minCoeff() < -1e-9) continue;
        pts.push_back(lam(0) * y.col(i) + lam(1) * y.col(j) + lam(2) * y.col(k));
      }
  return convex_hull(pts);
}

shadow_values section_functionals(const convex_body& c, const grassmann_frame& f) {
  return values_of_points(section_polygon(c, f));
}

Eigen::VectorXd section_vector(const convex_body& c, const grassmann_frame& f,
                               const std::vector<functional>& selection) {
  if (selection.empty()) throw std::invalid_argument("section_vector: empty selection");
  shadow_values a = section_functionals(c, f);
  shadow_values b = section_functionals(c, complement_frame(f));
  Eigen::VectorXd out(selection.size());
  for (std::size_t i = 0; i < selection.size(); ++i)
    out(i) = a.of(selection[i]) - b.of(selection[i]);
  return out;
}

Eigen::VectorXd inertia_char_coeffs(const Eigen::MatrixXd& points,
                                    const grassmann_frame& f) {
  if (points.cols() < 1)
    throw std::invalid_argument("inertia_char_coeffs: empty point list");
  if (points.rows() != f.columns.rows())
    throw std::invalid_argument("inertia_char_coeffs: dimension mismatch");
  const int dim = int(points.rows()), n = dim / 2;
  Eigen::MatrixXd a = f.columns * f.columns.transpose();
  Eigen::MatrixXd inertia = a * (points * points.transpose()) * a;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(inertia);
  Eigen::VectorXd mu = es.eigenvalues();
  // elementary symmetric functions e_1..e_n of the spectrum
  std::vector<double> e(dim + 1, 0);
  e[0] = 1;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j >= 1; --j) e[j] += mu(i) * e[j - 1];
  Eigen::VectorXd out(n);
  for (int j = 1; j <= n; ++j) out(j - 1) = (j % 2 ? -1.0 : 1.0) * e[j];
  return out;
}

}  // namespace sg
