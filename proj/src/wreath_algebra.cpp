#include "shadowidx/wreath_algebra.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>
#include <utility>

namespace wr {

namespace {

void sort_cancel(std::vector<t_term>& v) {
  std::sort(v.begin(), v.end());
  std::vector<t_term> out;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) % 2 != 0) out.push_back(v[i]);
    i = j;
  }
  v = std::move(out);
}

void sort_cancel(std::vector<q_term>& v) {
  std::sort(v.begin(), v.end());
  std::vector<q_term> out;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) % 2 != 0) out.push_back(v[i]);
    i = j;
  }
  v = std::move(out);
}

// push Q(a|b) in canonical orientation; drops the diagonal case
void push_q(std::vector<q_term>& v, const gm::monomial& a, const gm::monomial& b,
            const wreath_context& ctx) {
  int c = gm::compare(a, b, ctx.alpha);
  if (c == 0) return;
  if (c < 0)
    v.push_back(q_term{a, b});
  else
    v.push_back(q_term{b, a});
}

}  // namespace

wreath_context make_context(int n, bool oriented) {
  if (n < 1) throw std::invalid_argument("make_context: n >= 1 required");
  wreath_context ctx;
  ctx.n = n;
  ctx.oriented = oriented;
  std::vector<std::pair<std::string, int>> gens;
  for (int i = oriented ? 2 : 1; i <= n; ++i)
    gens.push_back({"w" + std::to_string(i), i});
  ctx.alpha = gm::make_alphabet(gens);
  return ctx;
}

bool has_w(const wreath_context& ctx, int i) {
  if (i == 0) return true;
  if (i > ctx.n) return false;
  return !(ctx.oriented && i == 1);
}

gm::monomial w_monomial(const wreath_context& ctx, int i) {
  if (!has_w(ctx, i)) throw std::invalid_argument("w_monomial: no such generator");
  gm::monomial m = gm::unit_monomial(ctx.alpha);
  if (i > 0) m.exp[ctx.oriented ? i - 2 : i - 1] = 1;
  return m;
}

wreath_element zero_element() { return wreath_element{}; }

wreath_element unit_element(const wreath_context& ctx) {
  return p_term(ctx, 0, gm::unit_monomial(ctx.alpha));
}

wreath_element t_power(const wreath_context& ctx, int i) {
  return p_term(ctx, i, gm::unit_monomial(ctx.alpha));
}

wreath_element p_term(const wreath_context& ctx, int t_pow, const gm::monomial& m) {
  if (t_pow < 0) throw std::invalid_argument("p_term: negative t power");
  if (m.exp.size() != ctx.alpha.size())
    throw std::invalid_argument("p_term: alphabet mismatch");
  wreath_element x;
  x.t_part.push_back(t_term{t_pow, m});
  return x;
}

wreath_element p_of(const gm::f2_poly& p, const wreath_context& ctx) {
  wreath_element x;
  for (const auto& m : p.terms) x.t_part.push_back(t_term{0, m});
  for (std::size_t i = 0; i < p.terms.size(); ++i)
    for (std::size_t j = i + 1; j < p.terms.size(); ++j)
      push_q(x.q_part, p.terms[i], p.terms[j], ctx);
  sort_cancel(x.t_part);
  sort_cancel(x.q_part);
  return x;
}

wreath_element q_of(const gm::monomial& m1, const gm::monomial& m2,
                    const wreath_context& ctx) {
  wreath_element x;
  push_q(x.q_part, m1, m2, ctx);
  return x;
}

wreath_element add(const wreath_element& x, const wreath_element& y) {
  wreath_element out = x;
  out.t_part.insert(out.t_part.end(), y.t_part.begin(), y.t_part.end());
  out.q_part.insert(out.q_part.end(), y.q_part.begin(), y.q_part.end());
  sort_cancel(out.t_part);
  sort_cancel(out.q_part);
  return out;
}

wreath_element multiply(const wreath_element& x, const wreath_element& y,
                        const wreath_context& ctx) {
  wreath_element out;
  for (const auto& tx : x.t_part) {
    for (const auto& ty : y.t_part)
      out.t_part.push_back(t_term{tx.t_pow + ty.t_pow, gm::mono_mul(tx.m, ty.m)});
    if (tx.t_pow == 0) {
      for (const auto& qy : y.q_part)
        push_q(out.q_part, gm::mono_mul(tx.m, qy.a), gm::mono_mul(tx.m, qy.b), ctx);
    }
  }
  for (const auto& qx : x.q_part) {
    for (const auto& ty : y.t_part) {
      if (ty.t_pow == 0)
        push_q(out.q_part, gm::mono_mul(qx.a, ty.m), gm::mono_mul(qx.b, ty.m), ctx);
    }
    for (const auto& qy : y.q_part) {
      push_q(out.q_part, gm::mono_mul(qx.a, qy.a), gm::mono_mul(qx.b, qy.b), ctx);
      push_q(out.q_part, gm::mono_mul(qx.a, qy.b), gm::mono_mul(qx.b, qy.a), ctx);
    }
  }
  sort_cancel(out.t_part);
  sort_cancel(out.q_part);
  return out;
}

int homogeneous_degree(const wreath_element& x, const wreath_context& ctx) {
  int d = -1;
  for (const auto& t : x.t_part) {
    int dt = t.t_pow + 2 * gm::degree(t.m, ctx.alpha);
    if (d == -1) d = dt;
    else if (d != dt) throw std::invalid_argument("inhomogeneous element");
  }
  for (const auto& q : x.q_part) {
    int dq = gm::degree(q.a, ctx.alpha) + gm::degree(q.b, ctx.alpha);
    if (d == -1) d = dq;
    else if (d != dq) throw std::invalid_argument("inhomogeneous element");
  }
  return d;
}

std::vector<basis_element> degree_slice_basis(const wreath_context& ctx, int d) {
  if (d < 0) throw std::invalid_argument("degree_slice_basis: d >= 0 required");
  std::vector<basis_element> out;
  // t entries: i + 2 deg(m) = d, listed by increasing deg(m)
  for (int e = 0; 2 * e <= d; ++e) {
    for (const auto& m : gm::enumerate_monomials(ctx.alpha, e)) {
      basis_element b;
      b.is_q = false;
      b.t_pow = d - 2 * e;
      b.m1 = m;
      b.m2 = gm::unit_monomial(ctx.alpha);
      out.push_back(b);
    }
  }
  // q entries: deg m1 + deg m2 = d with m1 < m2
  for (int d1 = 0; 2 * d1 <= d; ++d1) {
    int d2 = d - d1;
    auto lo = gm::enumerate_monomials(ctx.alpha, d1);
    if (d1 == d2) {
      for (std::size_t i = 0; i < lo.size(); ++i)
        for (std::size_t j = i + 1; j < lo.size(); ++j) {
          basis_element b;
          b.is_q = true;
          b.m1 = lo[i];
          b.m2 = lo[j];
          out.push_back(b);
        }
    } else {
      auto hi = gm::enumerate_monomials(ctx.alpha, d2);
      for (const auto& m1 : lo)
        for (const auto& m2 : hi) {
          basis_element b;
          b.is_q = true;
          b.m1 = m1;
          b.m2 = m2;
          out.push_back(b);
        }
    }
  }
  return out;
}

namespace {

std::tuple<int, int, std::vector<std::uint8_t>, std::vector<std::uint8_t>> key_of(
    bool is_q, int t_pow, const gm::monomial& m1, const gm::monomial& m2) {
  return {is_q ? 1 : 0, t_pow, m1.exp, m2.exp};
}

}  // namespace

slice_index make_slice_index(const wreath_context& ctx, int d) {
  slice_index si;
  si.basis = degree_slice_basis(ctx, d);
  for (std::size_t c = 0; c < si.basis.size(); ++c) {
    const auto& b = si.basis[c];
    si.pos[key_of(b.is_q, b.is_q ? 0 : b.t_pow, b.m1, b.m2)] = c;
  }
  return si;
}

f2::bit_vector coordinates(const wreath_element& x, const slice_index& si) {
  f2::bit_vector v(si.basis.size());
  for (const auto& t : x.t_part) {
    auto it = si.pos.find(key_of(false, t.t_pow, t.m,
                                 gm::monomial{std::vector<std::uint8_t>(t.m.exp.size(), 0)}));
    if (it == si.pos.end()) throw std::invalid_argument("element outside slice");
    v.flip(it->second);
  }
  for (const auto& q : x.q_part) {
    auto it = si.pos.find(key_of(true, 0, q.a, q.b));
    if (it == si.pos.end()) throw std::invalid_argument("element outside slice");
    v.flip(it->second);
  }
  return v;
}

int binom_mod2(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  return (b & ~a) == 0 ? 1 : 0;
}

wreath_element wreath_sw_component(const wreath_context& ctx, int k) {
  if (k < 0 || k > 2 * ctx.n)
    throw std::invalid_argument("wreath_sw_component: k out of range");
  if (k == 0) return unit_element(ctx);
  wreath_element out;
  for (int i = std::max(0, k - ctx.n); 2 * i < k; ++i) {
    if (!has_w(ctx, i) || !has_w(ctx, k - i)) continue;
    push_q(out.q_part, w_monomial(ctx, i), w_monomial(ctx, k - i), ctx);
  }
  for (int i = std::max(0, k - ctx.n); 2 * i <= k; ++i) {
    if (!has_w(ctx, i)) continue;
    if (binom_mod2(std::uint64_t(ctx.n - i), std::uint64_t(k - 2 * i)))
      out.t_part.push_back(t_term{k - 2 * i, w_monomial(ctx, i)});
  }
  sort_cancel(out.t_part);
  sort_cancel(out.q_part);
  return out;
}

std::vector<wreath_element> wreath_total_sw(const wreath_context& ctx) {
  std::vector<wreath_element> comp(2 * ctx.n + 1);
  for (int r = 0; r <= ctx.n; ++r) {
    if (!has_w(ctx, r)) continue;
    for (int s = r + 1; s <= ctx.n; ++s) {
      if (!has_w(ctx, s)) continue;
      comp[r + s] = add(comp[r + s], q_of(w_monomial(ctx, r), w_monomial(ctx, s), ctx));
    }
    // P(w_r) (1+t)^{n-r}
    for (int j = 0; j <= ctx.n - r; ++j) {
      if (!binom_mod2(std::uint64_t(ctx.n - r), std::uint64_t(j))) continue;
      comp[2 * r + j] = add(comp[2 * r + j], p_term(ctx, j, w_monomial(ctx, r)));
    }
  }
  if (!(comp[0] == unit_element(ctx)))
    throw std::logic_error("total class must start with the unit");
  return std::vector<wreath_element>(comp.begin() + 1, comp.end());
}

std::string to_string(const wreath_element& x, const wreath_context& ctx) {
  if (x.is_zero()) return "0";
  std::string s;
  auto append = [&s](const std::string& term) {
    if (!s.empty()) s += '+';
    s += term;
  };
  for (const auto& q : x.q_part)
    append("Q(" + gm::to_string(q.a, ctx.alpha) + "|" + gm::to_string(q.b, ctx.alpha) +
           ")");
  // t terms printed with descending t power, matching the usual display
  for (auto it = x.t_part.rbegin(); it != x.t_part.rend(); ++it) {
    std::string term;
    if (it->t_pow > 0) term = "t^" + std::to_string(it->t_pow) + ".";
    term += "P(" + gm::to_string(it->m, ctx.alpha) + ")";
    append(term);
  }
  return s;
}

tensor_rep tensor_expand(const wreath_element& x) {
  tensor_rep r;
  for (const auto& t : x.t_part) {
    auto& sheet = r.sheets[t.t_pow];
    auto p = std::make_pair(t.m, t.m);
    if (!sheet.erase(p)) sheet.insert(p);
  }
  for (const auto& q : x.q_part) {
    auto& sheet = r.sheets[0];
    for (auto p : {std::make_pair(q.a, q.b), std::make_pair(q.b, q.a)})
      if (!sheet.erase(p)) sheet.insert(p);
  }
  for (auto it = r.sheets.begin(); it != r.sheets.end();)
    it = it->second.empty() ? r.sheets.erase(it) : std::next(it);
  return r;
}

tensor_rep tensor_mul(const tensor_rep& x, const tensor_rep& y) {
  tensor_rep r;
  for (const auto& [i, sx] : x.sheets) {
    for (const auto& [j, sy] : y.sheets) {
      auto& sheet = r.sheets[i + j];
      for (const auto& [a, b] : sx) {
        for (const auto& [c, d] : sy) {
          auto p = std::make_pair(gm::mono_mul(a, c), gm::mono_mul(b, d));
          if (!sheet.erase(p)) sheet.insert(p);
        }
      }
    }
  }
  // t^{>0} annihilates the off-diagonal part
  for (auto& [i, sheet] : r.sheets) {
    if (i == 0) continue;
    for (auto it = sheet.begin(); it != sheet.end();)
      it = (it->first != it->second) ? sheet.erase(it) : std::next(it);
  }
  for (auto it = r.sheets.begin(); it != r.sheets.end();)
    it = it->second.empty() ? r.sheets.erase(it) : std::next(it);
  return r;
}

}  // namespace wr
