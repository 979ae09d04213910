#pragma once

// Exact arithmetic in H*(B(O(n) wr Z/2); F_2) and its SO variant, in the
// canonical basis {t^i.P(m)} u {Q(m1|m2), m1 < m2}. The multiplication law is
// hardcoded: P is multiplicative, Q is additive, t kills Q, and cross
// products expand tensor-wise:
//   (t^i P(m))(t^j P(m'))  = t^{i+j} P(m m')
//   P(m) Q(a|b)            = Q(ma|mb),   t^i P(m) Q(a|b) = 0 for i > 0
//   Q(a|b) Q(c|d)          = Q(ac|bd) + Q(ad|bc),  Q(x|x) = 0
// Also carries the wreath-square Stiefel-Whitney class formula and Lucas
// binomials.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "shadowidx/f2_linalg.hpp"
#include "shadowidx/graded_monomials.hpp"

namespace wr {

struct wreath_context {
  int n = 0;
  bool oriented = false;
  gm::alphabet alpha;  // w1..wn, or w2..wn when oriented (w1 = 0 on BSO(n))
};

wreath_context make_context(int n, bool oriented);

// monomial for w_i in the context alphabet; i = 0 gives the unit.
// valid only when the generator exists (see has_w)
gm::monomial w_monomial(const wreath_context& ctx, int i);
bool has_w(const wreath_context& ctx, int i);

struct t_term {
  int t_pow = 0;
  gm::monomial m;
  auto operator<=>(const t_term&) const = default;
};

struct q_term {
  gm::monomial a, b;  // stored with a < b in the canonical monomial order
  auto operator<=>(const q_term&) const = default;
};

struct wreath_element {
  std::vector<t_term> t_part;  // sorted, unique
  std::vector<q_term> q_part;  // sorted, unique
  bool is_zero() const { return t_part.empty() && q_part.empty(); }
  bool operator==(const wreath_element&) const = default;
};

wreath_element zero_element();
wreath_element unit_element(const wreath_context& ctx);  // P(1)
wreath_element t_power(const wreath_context& ctx, int i);  // t^i.P(1)
wreath_element p_term(const wreath_context& ctx, int t_pow, const gm::monomial& m);

// P applied to a full polynomial: P(sum m_i) = sum P(m_i) + sum_{i<j} Q(m_i|m_j)
wreath_element p_of(const gm::f2_poly& p, const wreath_context& ctx);
// canonical Q basis element; the zero element when m1 = m2
wreath_element q_of(const gm::monomial& m1, const gm::monomial& m2,
                    const wreath_context& ctx);

wreath_element add(const wreath_element& x, const wreath_element& y);
wreath_element multiply(const wreath_element& x, const wreath_element& y,
                        const wreath_context& ctx);

// -1 for zero, otherwise the common degree; throws if inhomogeneous
int homogeneous_degree(const wreath_element& x, const wreath_context& ctx);

// ordered basis of the degree-d graded piece: t entries first, then q pairs
struct basis_element {
  bool is_q = false;
  int t_pow = 0;       // t entry only
  gm::monomial m1, m2; // t entry uses m1; q entry uses both
};

std::vector<basis_element> degree_slice_basis(const wreath_context& ctx, int d);

// column lookup for a fixed degree slice
struct slice_index {
  std::vector<basis_element> basis;
  std::map<std::tuple<int, int, std::vector<std::uint8_t>, std::vector<std::uint8_t>>,
           std::size_t>
      pos;
};

slice_index make_slice_index(const wreath_context& ctx, int d);
f2::bit_vector coordinates(const wreath_element& x, const slice_index& si);

// C(a,b) mod 2 by the dyadic digit test
int binom_mod2(std::uint64_t a, std::uint64_t b);

// w_k of the wreath square of the universal rank-n bundle, component formula:
//   sum_{i=max(0,k-n)}^{floor((k-1)/2)} Q(w_i|w_{k-i})
// + sum_{i=max(0,k-n)}^{floor(k/2)}     C(n-i, k-2i) t^{k-2i} P(w_i)
// with w_0 = 1; the oriented context drops every term containing w_1
wreath_element wreath_sw_component(const wreath_context& ctx, int k);

// all components k = 1..2n computed by direct expansion of the total-class
// formula  sum_{0<=r<s<=n} Q(w_r|w_s) + sum_{0<=r<=n} P(w_r)(1+t)^{n-r};
// an independent computation route from wreath_sw_component
std::vector<wreath_element> wreath_total_sw(const wreath_context& ctx);

// text form: Q(m1|m2) and t^i.P(m) terms joined by '+', monomials as w1^a.w2^b
std::string to_string(const wreath_element& x, const wreath_context& ctx);

// --- oracle representation ------------------------------------------------
// Sheet i holds ordered tensor pairs living over t^i. Multiplication is
// naive and term-by-term; the only collapse rule is that off-diagonal pairs
// over t^{>0} die. Used to cross-check `multiply`.

struct tensor_rep {
  std::map<int, std::set<std::pair<gm::monomial, gm::monomial>>> sheets;
  bool operator==(const tensor_rep&) const = default;
};

tensor_rep tensor_expand(const wreath_element& x);
tensor_rep tensor_mul(const tensor_rep& x, const tensor_rep& y);

}  // namespace wr
