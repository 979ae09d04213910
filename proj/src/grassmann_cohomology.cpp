#include "shadowidx/grassmann_cohomology.hpp"

#include <map>
#include <stdexcept>

#include "shadowidx/f2_linalg.hpp"

namespace gc {

namespace {

gm::alphabet ring_alphabet(int n, int k) {
  std::vector<std::pair<std::string, int>> gens;
  for (int i = 1; i <= n; ++i) gens.push_back({"w" + std::to_string(i), i});
  for (int j = 1; j <= k; ++j) gens.push_back({"wb" + std::to_string(j), j});
  return gm::make_alphabet(gens);
}

// w_i * wb_j as a monomial of the full alphabet; i or j may be 0
gm::monomial pair_monomial(const grassmann_ring& r, int i, int j) {
  gm::monomial m = gm::unit_monomial(r.alpha);
  if (i > 0) m.exp[i - 1] = 1;
  if (j > 0) m.exp[r.n + j - 1] = 1;
  return m;
}

struct column_index {
  std::vector<gm::monomial> basis;
  std::map<gm::monomial, std::size_t> pos;
};

column_index degree_columns(const gm::alphabet& a, int d) {
  column_index ci;
  ci.basis = gm::enumerate_monomials(a, d);
  for (std::size_t c = 0; c < ci.basis.size(); ++c) ci.pos[ci.basis[c]] = c;
  return ci;
}

f2::bit_vector coords(const gm::f2_poly& p, const column_index& ci) {
  f2::bit_vector v(ci.basis.size());
  for (const auto& m : p.terms) {
    auto it = ci.pos.find(m);
    if (it == ci.pos.end())
      throw std::logic_error("monomial outside the degree slice");
    v.set(it->second);
  }
  return v;
}

// rows spanning the degree-j piece of the ideal the relations generate
f2::bit_matrix ideal_rows(const grassmann_ring& r, int j, const column_index& ci) {
  f2::bit_matrix m(0, ci.basis.size());
  for (const auto& rel : r.relations) {
    int d = -1;
    gm::is_homogeneous(rel, r.alpha, &d);
    if (d < 0 || d > j) continue;
    for (const auto& b : gm::enumerate_monomials(r.alpha, j - d)) {
      auto prod = gm::poly_mul(rel, gm::poly_of(b), r.alpha);
      m.append_row(coords(prod, ci));
    }
  }
  return m;
}

}  // namespace

grassmann_ring make_ring(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("make_ring: n, k >= 1 required");
  grassmann_ring r;
  r.n = n;
  r.k = k;
  r.alpha = ring_alphabet(n, k);
  for (int d = 1; d <= n + k; ++d) {
    std::vector<gm::monomial> terms;
    for (int i = std::max(0, d - k); i <= std::min(d, n); ++i)
      terms.push_back(pair_monomial(r, i, d - i));
    r.relations.push_back(gm::poly_of_terms(terms, r.alpha));
  }
  return r;
}

std::vector<gm::f2_poly> dual_classes(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("dual_classes: n, k >= 1 required");
  std::vector<std::pair<std::string, int>> gens;
  for (int i = 1; i <= n; ++i) gens.push_back({"w" + std::to_string(i), i});
  gm::alphabet a = gm::make_alphabet(gens);

  std::vector<gm::f2_poly> dual;  // dual[j-1] = wb_j
  for (int j = 1; j <= k; ++j) {
    gm::f2_poly acc = gm::poly_zero();
    for (int i = 1; i <= std::min(j, n); ++i) {
      gm::monomial wi = gm::unit_monomial(a);
      wi.exp[i - 1] = 1;
      const gm::f2_poly& prev =
          (j - i == 0) ? gm::poly_one(a) : dual[j - i - 1];
      acc = gm::poly_add(acc, gm::poly_mul(gm::poly_of(wi), prev, a), a);
    }
    dual.push_back(acc);
  }
  return dual;
}

int graded_dimension(const grassmann_ring& r, int j) {
  if (j < 0 || j > r.n * r.k)
    throw std::invalid_argument("graded_dimension: degree out of range");
  auto ci = degree_columns(r.alpha, j);
  auto rows = ideal_rows(r, j, ci);
  auto rr = f2::row_reduce(rows);
  return int(ci.basis.size() - rr.rank());
}

gm::f2_poly swap_action(const gm::f2_poly& p, const grassmann_ring& r) {
  if (r.n != r.k)
    throw std::invalid_argument("swap_action: defined only for n = k");
  std::vector<gm::monomial> out;
  for (const auto& m : p.terms) {
    gm::monomial s = m;
    for (int i = 0; i < r.n; ++i) std::swap(s.exp[i], s.exp[r.n + i]);
    out.push_back(s);
  }
  return gm::poly_of_terms(out, r.alpha);
}

z2_decomposition z2_decompose(int n, int j) {
  grassmann_ring r = make_ring(n, n);
  if (j < 0 || j > n * n)
    throw std::invalid_argument("z2_decompose: degree out of range");
  auto ci = degree_columns(r.alpha, j);
  auto rr = f2::row_reduce(ideal_rows(r, j, ci));

  // quotient basis: non-pivot columns, as coset normal forms
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < ci.basis.size(); ++c)
    if (rr.pivot_row[c] < 0) free_cols.push_back(c);
  const std::size_t q = free_cols.size();
  std::map<std::size_t, std::size_t> compress;
  for (std::size_t i = 0; i < q; ++i) compress[free_cols[i]] = i;

  // rows of (1 + omega) on the quotient basis
  f2::bit_matrix one_plus_omega(q, q);
  for (std::size_t i = 0; i < q; ++i) {
    const gm::monomial& m = ci.basis[free_cols[i]];
    auto swapped = swap_action(gm::poly_of(m), r);
    auto nf = f2::reduce_vector(rr, coords(swapped, ci));
    nf.flip(free_cols[i]);  // add the identity part
    for (std::size_t c = 0; c < ci.basis.size(); ++c) {
      if (nf.get(c)) {
        auto it = compress.find(c);
        if (it == compress.end())
          throw std::logic_error("normal form touched a pivot column");
        one_plus_omega.set(i, it->second);
      }
    }
  }

  z2_decomposition out;
  out.degree = j;
  out.free_rank = int(f2::row_reduce(one_plus_omega).rank());
  out.trivial_rank = int(q) - 2 * out.free_rank;
  if (out.trivial_rank < 0)
    throw std::logic_error("inconsistent module decomposition");
  return out;
}

int borel_e2_dimension(int n, int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("borel_e2_dimension: i, j >= 0");
  if (j > n * n) return 0;
  auto dec = z2_decompose(n, j);
  return i == 0 ? dec.free_rank + dec.trivial_rank : dec.trivial_rank;
}

}  // namespace gc
