#pragma once

// Minimal t-power membership in the kernel ideal spanned by the wreath-square
// Stiefel-Whitney classes, plus the relation and vanishing verification
// suites that reuse the same degree-slice machinery.

#include <cstddef>
#include <vector>

#include "shadowidx/f2_linalg.hpp"
#include "shadowidx/wreath_algebra.hpp"

namespace idx {

// degree-d graded piece of an ideal: rows are coordinates of gen * b over all
// generators and all basis elements b of complementary degree, deduplicated
struct degree_slice_matrix {
  int degree = 0;
  wr::slice_index index;
  f2::bit_matrix rows;
};

// generators must be homogeneous (zero generators are ignored)
degree_slice_matrix ideal_slice(const wr::wreath_context& ctx,
                                const std::vector<wr::wreath_element>& generators,
                                int d);

// membership of a degree-d element in the slice's row space
bool slice_contains(const degree_slice_matrix& slice, const wr::wreath_element& x);

// wreath-square components k = 1..2n; the oriented context starts at k = 2
std::vector<wr::wreath_element> kernel_generators(const wr::wreath_context& ctx);

struct slice_dim {
  int degree = 0;
  std::size_t basis_size = 0;
  std::size_t ideal_rank = 0;
};

struct index_certificate {
  int n = 0;
  bool oriented = false;
  int s = 0;                      // minimal d with t^d in the kernel ideal
  bool closed_form_only = false;  // oriented odd n skips the slice search
  bool witness_in = false;        // t^s lies in the degree-s slice
  bool witness_out = false;       // t^{s-1} misses its slice; true when s = 1
  std::vector<slice_dim> slice_dims;  // one entry per searched degree
};

// ascending membership search with hard cap 4n; a cap hit throws
// std::logic_error because the closed form guarantees s <= 2n
index_certificate index_power(int n, bool oriented);

// n = 2^a(2b+1): unoriented 2^{a+1}; oriented 3 when a = 1, else 2^{a+1}
int closed_form_power(int n, bool oriented);

// degree-k relation among the P/Q/t classes modulo the components below k;
// requires n even and 1 <= k <= 2^{a+1}-1
bool verify_prop_relations(int n, bool oriented, int k);

// t^{2^{a+1}} already lies in the ideal of the first 2^{a+1}-1 components
bool verify_t_vanishing(int n, bool oriented);

}  // namespace idx
