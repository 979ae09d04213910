#pragma once

// Mod-2 cohomology of real Grassmannians G_n(R^{n+k}) presented as
// F_2[w_1..w_n, wb_1..wb_k] modulo the homogeneous components of
// (1 + w_1 + ... + w_n)(1 + wb_1 + ... + wb_k) - 1, plus the swap action
// w_i <-> wb_i available when n = k.

#include <vector>

#include "shadowidx/graded_monomials.hpp"

namespace gc {

struct grassmann_ring {
  int n = 0;
  int k = 0;
  gm::alphabet alpha;                    // w1..wn then wb1..wbk
  std::vector<gm::f2_poly> relations;    // degrees 1..n+k in that order
};

grassmann_ring make_ring(int n, int k);

// wb_1..wb_k expressed in w_1..w_n via wb_j = sum_{i=1..min(j,n)} w_i wb_{j-i};
// returned polynomials live in the n-letter alphabet w1..wn
std::vector<gm::f2_poly> dual_classes(int n, int k);

// dim_{F_2} H^j; 0 <= j <= n*k required
int graded_dimension(const grassmann_ring& r, int j);

// exchanges w_i <-> wb_i; defined only for n = k
gm::f2_poly swap_action(const gm::f2_poly& p, const grassmann_ring& r);

struct z2_decomposition {
  int degree = 0;
  int free_rank = 0;     // copies of F_2[Z/2]
  int trivial_rank = 0;  // trivial summands
};

// Z/2-module structure of H^j(G_n(R^{2n})) under the swap action
z2_decomposition z2_decompose(int n, int j);

// dim E_2^{i,j} of the Borel fibration spectral sequence:
// free+trivial at column i = 0, trivial for i >= 1
int borel_e2_dimension(int n, int i, int j);

}  // namespace gc
