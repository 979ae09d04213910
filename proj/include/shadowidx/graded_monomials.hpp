#pragma once

// Weighted monomials over a named generator alphabet, and polynomials over
// F_2 stored as canonical term sets. The graded-lex order fixed here is the
// basis order used by every algebra module downstream.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gm {

struct alphabet {
  std::vector<std::string> names;
  std::vector<int> degrees;
  std::size_t size() const { return names.size(); }
};

// validates: unique names, every degree >= 1
alphabet make_alphabet(const std::vector<std::pair<std::string, int>>& gens);

struct monomial {
  std::vector<std::uint8_t> exp;
  bool operator==(const monomial&) const = default;
  auto operator<=>(const monomial&) const = default;  // plain lex, set order only
};

monomial unit_monomial(const alphabet& a);
int degree(const monomial& m, const alphabet& a);
monomial mono_mul(const monomial& m1, const monomial& m2);

// canonical total order: degree first, then lex on exponent vectors;
// returns -1, 0, 1; throws std::invalid_argument on alphabet mismatch
int compare(const monomial& m1, const monomial& m2, const alphabet& a);

struct f2_poly {
  // terms kept sorted by graded-lex order, no duplicates (F_2 cancellation)
  std::vector<monomial> terms;
  bool is_zero() const { return terms.empty(); }
  bool operator==(const f2_poly&) const = default;
};

f2_poly poly_zero();
f2_poly poly_one(const alphabet& a);
f2_poly poly_of(const monomial& m);
f2_poly poly_of_terms(std::vector<monomial> ts, const alphabet& a);

f2_poly poly_add(const f2_poly& p, const f2_poly& q, const alphabet& a);
f2_poly poly_mul(const f2_poly& p, const f2_poly& q, const alphabet& a);

// true when every term has the same degree; degree of the zero polynomial is
// reported as -1 with homogeneous = true
bool is_homogeneous(const f2_poly& p, const alphabet& a, int* deg_out = nullptr);

// all monomials of weighted degree exactly d, in canonical order
std::vector<monomial> enumerate_monomials(const alphabet& a, int d);

std::string to_string(const monomial& m, const alphabet& a);
std::string to_string(const f2_poly& p, const alphabet& a);

}  // namespace gm
