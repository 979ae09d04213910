#include "shadowidx/graded_monomials.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gm {

alphabet make_alphabet(const std::vector<std::pair<std::string, int>>& gens) {
  alphabet a;
  std::set<std::string> seen;
  for (const auto& [name, deg] : gens) {
    if (deg < 1) throw std::invalid_argument("generator degree must be >= 1");
    if (!seen.insert(name).second)
      throw std::invalid_argument("duplicate generator name: " + name);
    a.names.push_back(name);
    a.degrees.push_back(deg);
  }
  return a;
}

monomial unit_monomial(const alphabet& a) {
  return monomial{std::vector<std::uint8_t>(a.size(), 0)};
}

int degree(const monomial& m, const alphabet& a) {
  if (m.exp.size() != a.size())
    throw std::invalid_argument("monomial does not match alphabet");
  int d = 0;
  for (std::size_t i = 0; i < m.exp.size(); ++i) d += int(m.exp[i]) * a.degrees[i];
  return d;
}

monomial mono_mul(const monomial& m1, const monomial& m2) {
  if (m1.exp.size() != m2.exp.size())
    throw std::invalid_argument("monomial alphabet mismatch");
  monomial out = m1;
  for (std::size_t i = 0; i < out.exp.size(); ++i) {
    int e = int(out.exp[i]) + int(m2.exp[i]);
    if (e > 255) throw std::overflow_error("exponent overflow");
    out.exp[i] = std::uint8_t(e);
  }
  return out;
}

int compare(const monomial& m1, const monomial& m2, const alphabet& a) {
  if (m1.exp.size() != a.size() || m2.exp.size() != a.size())
    throw std::invalid_argument("compare: alphabet mismatch");
  int d1 = degree(m1, a), d2 = degree(m2, a);
  if (d1 != d2) return d1 < d2 ? -1 : 1;
  if (m1.exp == m2.exp) return 0;
  return m1.exp < m2.exp ? -1 : 1;
}

f2_poly poly_zero() { return f2_poly{}; }

f2_poly poly_one(const alphabet& a) { return poly_of(unit_monomial(a)); }

f2_poly poly_of(const monomial& m) { return f2_poly{{m}}; }

f2_poly poly_of_terms(std::vector<monomial> ts, const alphabet& a) {
  std::sort(ts.begin(), ts.end(), [&](const monomial& x, const monomial& y) {
    return compare(x, y, a) < 0;
  });
  // F_2: pairs cancel
  f2_poly out;
  for (std::size_t i = 0; i < ts.size();) {
    std::size_t j = i;
    while (j < ts.size() && ts[j] == ts[i]) ++j;
    if ((j - i) % 2 != 0) out.terms.push_back(ts[i]);
    i = j;
  }
  return out;
}

f2_poly poly_add(const f2_poly& p, const f2_poly& q, const alphabet& a) {
  std::vector<monomial> all = p.terms;
  all.insert(all.end(), q.terms.begin(), q.terms.end());
  return poly_of_terms(std::move(all), a);
}

f2_poly poly_mul(const f2_poly& p, const f2_poly& q, const alphabet& a) {
  std::vector<monomial> all;
  all.reserve(p.terms.size() * q.terms.size());
  for (const auto& m1 : p.terms)
    for (const auto& m2 : q.terms) all.push_back(mono_mul(m1, m2));
  return poly_of_terms(std::move(all), a);
}

bool is_homogeneous(const f2_poly& p, const alphabet& a, int* deg_out) {
  if (p.terms.empty()) {
    if (deg_out) *deg_out = -1;
    return true;
  }
  int d = degree(p.terms[0], a);
  for (const auto& m : p.terms)
    if (degree(m, a) != d) return false;
  if (deg_out) *deg_out = d;
  return true;
}

namespace {

void enumerate_rec(const alphabet& a, std::size_t idx, int remaining,
                   std::vector<std::uint8_t>& cur, std::vector<monomial>& out) {
  if (idx == a.size()) {
    if (remaining == 0) out.push_back(monomial{cur});
    return;
  }
  if (idx + 1 == a.size()) {
    // last generator must absorb the remainder exactly
    if (remaining % a.degrees[idx] == 0 && remaining / a.degrees[idx] <= 255) {
      cur[idx] = std::uint8_t(remaining / a.degrees[idx]);
      out.push_back(monomial{cur});
      cur[idx] = 0;
    }
    return;
  }
  for (int e = 0; e * a.degrees[idx] <= remaining && e <= 255; ++e) {
    cur[idx] = std::uint8_t(e);
    enumerate_rec(a, idx + 1, remaining - e * a.degrees[idx], cur, out);
  }
  cur[idx] = 0;
}

}  // namespace

std::vector<monomial> enumerate_monomials(const alphabet& a, int d) {
  if (d < 0) throw std::invalid_argument("degree must be >= 0");
  std::vector<monomial> out;
  if (a.size() == 0) {
    if (d == 0) out.push_back(monomial{{}});
    return out;
  }
  std::vector<std::uint8_t> cur(a.size(), 0);
  enumerate_rec(a, 0, d, cur, out);
  std::sort(out.begin(), out.end(),
            [&](const monomial& x, const monomial& y) { return compare(x, y, a) < 0; });
  return out;
}

std::string to_string(const monomial& m, const alphabet& a) {
  std::string s;
  for (std::size_t i = 0; i < m.exp.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!s.empty()) s += '.';
    s += a.names[i];
    if (m.exp[i] > 1) s += '^' + std::to_string(int(m.exp[i]));
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const f2_poly& p, const alphabet& a) {
  if (p.terms.empty()) return "0";
  std::string s;
  for (const auto& m : p.terms) {
    if (!s.empty()) s += '+';
    s += to_string(m, a);
  }
  return s;
}

}  // namespace gm
