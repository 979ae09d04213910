#pragma once

// Convex-body and projector primitives: polytopes in R^{2n}, planar shadows
// and central sections with their functionals (n = 2 only), the sphere map k,
// and inertia characteristic coefficients.

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace sg {

struct convex_body {
  int dimension = 0;
  Eigen::MatrixXd vertices;  // dimension rows, one column per vertex
};

// validates: even dimension >= 2, at least dim+1 vertices affinely spanning
// the whole space, finite coordinates
convex_body make_body(int dimension, const std::vector<std::vector<double>>& verts);

struct grassmann_frame {
  Eigen::MatrixXd columns;  // 2n x n, orthonormal
};

// validates shape (rows = 2 cols) and orthonormality within 1e-12
grassmann_frame make_frame(const Eigen::MatrixXd& columns);
grassmann_frame complement_frame(const grassmann_frame& f);

struct projector {
  Eigen::MatrixXd matrix;
};

projector projector_from_frame(const grassmann_frame& f);

// (a11 - 1/2, a12, ..., a1,2n); never zero on genuine projectors
Eigen::VectorXd k_map(const projector& a);

enum class functional { area, perimeter, circumradius };
functional functional_from_name(const std::string& name);
std::string functional_name(functional f);

struct shadow_values {
  double area = 0;
  double perimeter = 0;
  double circumradius = 0;
  double of(functional f) const;
};

// planar helpers (dimension 4, n = 2 pipelines)
std::vector<Eigen::Vector2d> convex_hull(std::vector<Eigen::Vector2d> pts);
double polygon_area(const std::vector<Eigen::Vector2d>& hull);
double polygon_perimeter(const std::vector<Eigen::Vector2d>& hull);
// smallest enclosing circle radius, randomized incremental with a fixed
// internal shuffle seed so results are reproducible
double min_enclosing_radius(const std::vector<Eigen::Vector2d>& pts);

// orthogonal shadow of the body on the frame's 2-plane, in frame coordinates
shadow_values shadow_functionals(const convex_body& c, const grassmann_frame& f);

// difference vector alpha_i(shadow on V) - alpha_i(shadow on V-perp)
Eigen::VectorXd functional_vector(const convex_body& c, const grassmann_frame& f,
                                  const std::vector<functional>& selection);

// strict interiority of the origin, decided by a small exact-arithmetic-free
// two-phase simplex (maximal uniform vertex weight)
bool origin_interior(const convex_body& c);

// central section C intersect span(f), as a polygon in frame coordinates;
// vertices found by enumerating simplex supports of size <= 3
std::vector<Eigen::Vector2d> section_polygon(const convex_body& c,
                                             const grassmann_frame& f);
shadow_values section_functionals(const convex_body& c, const grassmann_frame& f);
Eigen::VectorXd section_vector(const convex_body& c, const grassmann_frame& f,
                               const std::vector<functional>& selection);

// characteristic coefficients a_{2n-1}..a_n of I_P = sum over x of (Px)(Px)^T;
// the lower coefficients vanish because rank I_P <= n
Eigen::VectorXd inertia_char_coeffs(const Eigen::MatrixXd& points,
                                    const grassmann_frame& f);

}  // namespace sg
