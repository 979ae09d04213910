#include <map>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "shadowidx/index_engine.hpp"

namespace {

idx::degree_slice_matrix full_slice(const wr::wreath_context& ctx, int d) {
  return idx::ideal_slice(ctx, idx::kernel_generators(ctx), d);
}

void check_certificate(const idx::index_certificate& c) {
  CHECK(c.witness_in);
  CHECK(c.witness_out);
  CHECK_FALSE(c.closed_form_only);
  CHECK(c.s <= 2 * c.n);
  CHECK(c.slice_dims.size() == std::size_t(c.s));
  for (const auto& sd : c.slice_dims) {
    CHECK(sd.ideal_rank <= sd.basis_size);
    CHECK(sd.degree >= 1);
  }
  CHECK(c.s == idx::closed_form_power(c.n, c.oriented));
}

}  // namespace

TEST_SUITE("index_engine") {

TEST_CASE("closed form table") {
  std::vector<int> unor = {2, 4, 2, 8, 2, 4, 2, 16};
  for (int n = 1; n <= 8; ++n) CHECK(idx::closed_form_power(n, false) == unor[n - 1]);
  CHECK(idx::closed_form_power(2, true) == 3);
  CHECK(idx::closed_form_power(4, true) == 8);
  CHECK(idx::closed_form_power(6, true) == 3);
  CHECK(idx::closed_form_power(8, true) == 16);
  CHECK(idx::closed_form_power(1, true) == 2);
  CHECK(idx::closed_form_power(12, false) == 8);
  CHECK(idx::closed_form_power(12, true) == 8);
  CHECK(idx::closed_form_power(16, false) == 32);
  CHECK(idx::closed_form_power(24, true) == 16);
  CHECK_THROWS_AS(idx::closed_form_power(0, false), std::invalid_argument);
}

TEST_CASE("unoriented index powers up to rank seven") {
  std::vector<int> expected = {2, 4, 2, 8, 2, 4, 2};
  for (int n = 1; n <= 7; ++n) {
    auto c = idx::index_power(n, false);
    CHECK(c.s == expected[n - 1]);
    check_certificate(c);
  }
  CHECK_THROWS_AS(idx::index_power(0, false), std::invalid_argument);
}

TEST_CASE("oriented index powers, even ranks") {
  CHECK(idx::index_power(2, true).s == 3);
  CHECK(idx::index_power(4, true).s == 8);
  CHECK(idx::index_power(6, true).s == 3);
  for (int n : {2, 4, 6}) check_certificate(idx::index_power(n, true));
}

TEST_CASE("oriented odd ranks fall back to the closed form") {
  for (int n : {1, 3, 5}) {
    auto c = idx::index_power(n, true);
    CHECK(c.closed_form_only);
    CHECK(c.s == 2);
    CHECK(c.slice_dims.empty());
    CHECK_FALSE(c.witness_in);
  }
}

TEST_CASE("line bundle slices") {
  auto ctx = wr::make_context(1, false);
  auto w1 = wr::w_monomial(ctx, 1);
  auto gens = idx::kernel_generators(ctx);
  REQUIRE(gens.size() == 2);

  auto s0 = idx::ideal_slice(ctx, gens, 0);
  CHECK(s0.rows.rows == 0);
  CHECK_FALSE(idx::slice_contains(s0, wr::unit_element(ctx)));

  auto s1 = idx::ideal_slice(ctx, gens, 1);
  CHECK(s1.rows.rows == 1);
  CHECK_FALSE(idx::slice_contains(s1, wr::t_power(ctx, 1)));
  CHECK_FALSE(idx::slice_contains(s1, wr::q_of(gm::unit_monomial(ctx.alpha), w1, ctx)));
  CHECK(idx::slice_contains(
      s1, wr::add(wr::t_power(ctx, 1),
                  wr::q_of(gm::unit_monomial(ctx.alpha), w1, ctx))));

  auto s2 = idx::ideal_slice(ctx, gens, 2);
  CHECK(idx::slice_contains(s2, wr::t_power(ctx, 2)));
}

TEST_CASE("rank two unoriented membership chain") {
  auto ctx = wr::make_context(2, false);
  auto w1 = wr::w_monomial(ctx, 1);
  auto w2 = wr::w_monomial(ctx, 2);
  auto j3 = full_slice(ctx, 3);
  CHECK(idx::slice_contains(j3, wr::add(wr::t_power(ctx, 3), wr::p_term(ctx, 1, w1))));
  CHECK(idx::slice_contains(j3, wr::add(wr::t_power(ctx, 3), wr::q_of(w1, w2, ctx))));
  CHECK_FALSE(idx::slice_contains(j3, wr::t_power(ctx, 3)));
  CHECK_FALSE(idx::slice_contains(full_slice(ctx, 2), wr::t_power(ctx, 2)));
  CHECK(idx::slice_contains(full_slice(ctx, 4), wr::t_power(ctx, 4)));
}

TEST_CASE("rank four membership chains") {
  for (bool oriented : {false, true}) {
    auto ctx = wr::make_context(4, oriented);
    CHECK_FALSE(idx::slice_contains(full_slice(ctx, 7), wr::t_power(ctx, 7)));
    CHECK(idx::slice_contains(full_slice(ctx, 8), wr::t_power(ctx, 8)));
  }

  auto o = wr::make_context(4, true);
  auto w2 = wr::w_monomial(o, 2);
  auto w3 = wr::w_monomial(o, 3);
  auto w4 = wr::w_monomial(o, 4);
  auto o6 = full_slice(o, 6);
  auto o7 = full_slice(o, 7);
  CHECK(idx::slice_contains(o6, wr::add(wr::t_power(o, 6), wr::p_term(o, 2, w2))));
  CHECK(idx::slice_contains(
      o6, wr::add(wr::add(wr::t_power(o, 6), wr::p_term(o, 0, w3)),
                  wr::q_of(w2, w4, o))));
  CHECK(idx::slice_contains(o7, wr::add(wr::t_power(o, 7), wr::p_term(o, 1, w3))));
  CHECK(idx::slice_contains(o7, wr::add(wr::t_power(o, 7), wr::q_of(w3, w4, o))));

  auto u = wr::make_context(4, false);
  auto uw2 = wr::w_monomial(u, 2);
  auto uw3 = wr::w_monomial(u, 3);
  auto uw4 = wr::w_monomial(u, 4);
  CHECK(idx::slice_contains(full_slice(u, 5),
                            wr::add(wr::t_power(u, 5), wr::p_term(u, 1, uw2))));
  CHECK(idx::slice_contains(
      full_slice(u, 6), wr::add(wr::add(wr::q_of(uw2, uw4, u), wr::t_power(u, 6)),
                                wr::p_term(u, 0, uw3))));
  auto u7 = full_slice(u, 7);
  CHECK(idx::slice_contains(u7, wr::add(wr::t_power(u, 7), wr::p_term(u, 1, uw3))));
  CHECK(idx::slice_contains(u7, wr::add(wr::t_power(u, 7), wr::q_of(uw3, uw4, u))));
}

TEST_CASE("rank six oriented cube of t") {
  auto ctx = wr::make_context(6, true);
  CHECK(idx::slice_contains(full_slice(ctx, 3), wr::t_power(ctx, 3)));
  CHECK_FALSE(idx::slice_contains(full_slice(ctx, 2), wr::t_power(ctx, 2)));
}

TEST_CASE("relation calculus holds for every admissible degree") {
  for (int n : {2, 4, 6, 12}) {
    int a = 0;
    for (int m = n; m % 2 == 0; m /= 2) ++a;
    for (bool oriented : {false, true})
      for (int k = 1; k <= (1 << (a + 1)) - 1; ++k)
        CHECK_MESSAGE(idx::verify_prop_relations(n, oriented, k),
                      "n=", n, " oriented=", oriented, " k=", k);
  }
  CHECK_THROWS_AS(idx::verify_prop_relations(3, false, 1), std::invalid_argument);
  CHECK_THROWS_AS(idx::verify_prop_relations(4, false, 0), std::invalid_argument);
  CHECK_THROWS_AS(idx::verify_prop_relations(4, false, 8), std::invalid_argument);
}

TEST_CASE("truncated t vanishing") {
  for (int n : {2, 4, 6, 12})
    for (bool oriented : {false, true})
      CHECK_MESSAGE(idx::verify_t_vanishing(n, oriented), "n=", n,
                    " oriented=", oriented);
  CHECK_THROWS_AS(idx::verify_t_vanishing(5, false), std::invalid_argument);
}

TEST_CASE("t powers stay in the ideal once they enter") {
  auto u2 = wr::make_context(2, false);
  for (int d = 4; d <= 6; ++d)
    CHECK(idx::slice_contains(full_slice(u2, d), wr::t_power(u2, d)));
  auto u3 = wr::make_context(3, false);
  for (int d = 2; d <= 4; ++d)
    CHECK(idx::slice_contains(full_slice(u3, d), wr::t_power(u3, d)));
  auto o2 = wr::make_context(2, true);
  for (int d = 3; d <= 5; ++d)
    CHECK(idx::slice_contains(full_slice(o2, d), wr::t_power(o2, d)));
}

TEST_CASE("monotonicity and cover bounds") {
  std::map<int, int> s_unor, s_or;
  for (int n = 1; n <= 7; ++n) s_unor[n] = idx::index_power(n, false).s;
  for (int n : {2, 4, 6}) s_or[n] = idx::index_power(n, true).s;
  for (int m = 1; m <= 7; ++m)
    for (int n = m; n <= 7; ++n)
      if (n % m == 0) CHECK(s_unor[m] <= s_unor[n]);
  CHECK(s_or[2] <= s_or[4]);
  CHECK(s_or[2] <= s_or[6]);
  for (int n : {2, 4, 6}) CHECK(s_or[n] <= s_unor[n]);
}

TEST_CASE("inhomogeneous generators are rejected") {
  auto ctx = wr::make_context(2, false);
  auto bad = wr::add(wr::t_power(ctx, 1), wr::p_term(ctx, 0, wr::w_monomial(ctx, 1)));
  CHECK_THROWS_AS(idx::ideal_slice(ctx, {bad}, 3), std::invalid_argument);
}

}  // TEST_SUITE
