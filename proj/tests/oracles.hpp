#pragma once

// Independent reference implementations used only by tests. Everything here
// is deliberately naive: different algorithms and different data layouts than
// the library, so agreement is meaningful.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

// rank of a 0/1 matrix over F_2, plain int arithmetic, no bit packing
int rank_mod2(std::vector<std::vector<int>> m);

// exhaustive subset-sum membership test; rows.size() <= 20 or it will crawl
bool subset_membership_mod2(const std::vector<int>& target,
                            const std::vector<std::vector<int>>& rows);

// number of partitions of d with every part <= max_part
long long partition_count(int d, int max_part);

// coefficient of x^d in prod_g 1/(1 - x^{deg_g}) (monomial counting by
// generating function; repeated degrees allowed)
long long gf_monomial_count(const std::vector<int>& degrees, int d);

// partitions of j with at most n parts, each part <= k
long long partitions_in_box(int j, int n, int k);

// Pascal triangle mod 2, [a][b] for a,b <= max_n
std::vector<std::vector<int>> pascal_mod2(int max_n);

// exact binomial via Pascal recurrence, small arguments only
long long binom_exact(int n, int k);

// multiply two polynomials with integer coefficients (monomial = exponent
// vector), then reduce coefficients mod 2; returns the surviving monomials
std::vector<std::vector<int>> int_poly_mul_mod2(
    const std::vector<std::vector<int>>& p,
    const std::vector<std::vector<int>>& q);

// --- planar geometry oracles -------------------------------------------

struct pt2 {
  double x, y;
};

// gift-wrapping hull (independent of the library's monotone chain)
std::vector<pt2> jarvis_hull(std::vector<pt2> pts);

// Monte-Carlo area of the convex hull of pts
double mc_hull_area(const std::vector<pt2>& pts, int samples, std::uint64_t seed);

// perimeter of the hull via the Cauchy formula: integral of the width
double width_integral_perimeter(const std::vector<pt2>& pts, int directions);

// smallest enclosing circle radius by brute force over pairs and triples
double min_circle_bruteforce(const std::vector<pt2>& pts);

}  // namespace oracle
