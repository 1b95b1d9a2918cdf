#include "doctest.h"
#include "heckepos/error.hpp"
#include "heckepos/hecke.hpp"
#include "support/oracles.hpp"

using namespace heckepos;

namespace {
LaurentPoly L(const char* s) { return parse_laurent(s); }
const LaurentPoly kVmVinv = LaurentPoly::v_minus_vinv();
}  // namespace

TEST_CASE("t-basis multiplication by a generator") {
  const GroupTable g = build_group("A2");
  const ElementId s = parse_element(g, "[1]");
  CHECK(t_mult_gen(g, 0, TCombo::basis(kIdentity)) == TCombo::basis(s));

  TCombo expected;
  expected.add(s, kVmVinv);
  expected.add(kIdentity, LaurentPoly(1));
  CHECK(t_mult_gen(g, 0, TCombo::basis(s)) == expected);

  TCombo cs = TCombo::basis(s);
  cs.add(kIdentity, L("v^-1"));
  TCombo v_cs;
  v_cs.add_scaled(cs, L("v"));
  CHECK(t_mult_gen(g, 0, cs) == v_cs);
}

TEST_CASE("t-basis products are associative") {
  const GroupTable g = build_group("B3");
  for (ElementId a = 0; a < g.size(); a += 5)
    for (ElementId b = 0; b < g.size(); b += 7)
      for (ElementId c = 0; c < g.size(); c += 11) {
        const TCombo ta = TCombo::basis(a), tb = TCombo::basis(b), tc = TCombo::basis(c);
        CHECK(t_product(g, t_product(g, ta, tb), tc) == t_product(g, ta, t_product(g, tb, tc)));
      }
}

TEST_CASE("bar involution") {
  const GroupTable g = build_group("A2");
  const ElementId s = parse_element(g, "[1]");
  CHECK(bar_h(g, TCombo::basis(kIdentity)) == TCombo::basis(kIdentity));
  TCombo expected = TCombo::basis(s);
  expected.add(kIdentity, -kVmVinv);
  CHECK(bar_h(g, TCombo::basis(s)) == expected);

  const KLStore store(g);
  for (ElementId y = 0; y < g.size(); ++y) {
    const TCombo c = c_in_t_basis(store, y);
    CHECK(bar_h(g, c) == c);
  }
  // involution on a non-invariant element
  TCombo u = TCombo::basis(g.longest());
  u.add(s, L("2v^3-1"));
  CHECK(bar_h(g, bar_h(g, u)) == u);
}

TEST_CASE("KL basis in the t-basis") {
  const GroupTable g = build_group("I2(3)");
  const KLStore store(g);
  CHECK(c_in_t_basis(store, kIdentity) == TCombo::basis(kIdentity));
  const ElementId s = parse_element(g, "[2]");
  TCombo cs = TCombo::basis(s);
  cs.add(kIdentity, L("v^-1"));
  CHECK(c_in_t_basis(store, s) == cs);
  CHECK(c_in_t_basis_oracle(g, s) == cs);

  TCombo cw0;
  for (ElementId x = 0; x < g.size(); ++x) cw0.add(x, LaurentPoly::monomial(1, g.length(x) - 3));
  CHECK(c_in_t_basis(store, g.longest()) == cw0);
  CHECK(c_in_t_basis_oracle(g, g.longest()) == cw0);
}

TEST_CASE("c_s action read off the W-graph") {
  const GroupTable g = build_group("I2(7)");
  const KLStore store(g);
  const WGraph wg = build_wgraph(store);
  const ElementId s = parse_element(g, "[1]");
  CHECK(c_mult_gen(wg, 0, CCombo::basis(kIdentity)) == CCombo::basis(s));
  CCombo expected;
  expected.add(s, LaurentPoly::v_plus_vinv());
  CHECK(c_mult_gen(wg, 0, CCombo::basis(s)) == expected);

  // c_1 c_[2,1,i> = c_[1,2,i+1> + c_[1,2,i-1>
  for (int i = 2; i < 7; ++i) {
    std::vector<Generator> w21, w12a, w12b;
    for (int j = 0; j < i; ++j) w21.push_back(1 - j % 2);
    for (int j = 0; j < i + 1; ++j) w12a.push_back(j % 2);
    for (int j = 0; j < i - 1; ++j) w12b.push_back(j % 2);
    CCombo e;
    e.add(g.element_from_word(w12a), LaurentPoly(1));
    e.add(g.element_from_word(w12b), LaurentPoly(1));
    CHECK(c_mult_gen(wg, 0, CCombo::basis(g.element_from_word(w21))) == e);
  }
  // against the t-basis product
  for (Generator t = 0; t < g.rank(); ++t)
    for (ElementId u = 0; u < g.size(); ++u) {
      const TCombo lhs = t_product(g, c_in_t_basis(store, g.left_mult(t, kIdentity)), c_in_t_basis(store, u));
      CHECK(c_to_t(store, c_mult_gen(wg, t, CCombo::basis(u))) == lhs);
    }
}

TEST_CASE("columns") {
  const GroupTable g = build_group("A2");
  const KLStore store(g);
  const WGraph wg = build_wgraph(store);
  const HColumn e = column(wg, kIdentity);
  for (ElementId x = 0; x < g.size(); ++x) CHECK(e.product(x) == CCombo::basis(x));

  const ElementId s = parse_element(g, "[1]");
  const HColumn cs = column(wg, s);
  CHECK(h_value(cs, s, s) == SymLaurentPoly::v_plus_vinv());
  CHECK(h_value(cs, kIdentity, s) == SymLaurentPoly(1));
  CHECK(h_value(cs, kIdentity, kIdentity).is_zero());
  CHECK(format_c_combo(g, cs.product(s)) == "(v^-1+v) c_1(1)");
  CHECK(format_c_combo(g, CCombo()) == "0");

  // c_w0 c_w0 = (v^-3 + 2v^-1 + 2v + v^3) c_w0 in A2
  const HColumn w0 = column(wg, g.longest());
  CHECK(w0.product(g.longest()).coefficient(g.longest()) == L("v^-3+2v^-1+2v+v^3"));
}

TEST_CASE("paper example in I2(9)") {
  const GroupTable g = build_group("I2(9)");
  const WGraph wg = build_wgraph(KLStore(g));
  const ElementId y = parse_element(g, "[1,2,1,2,1,2]");
  const HColumn col = column(wg, y);
  CCombo expected;
  expected.add(parse_element(g, "[1,2]"), LaurentPoly(2));
  expected.add(parse_element(g, "[1,2,1,2]"), LaurentPoly(2));
  expected.add(y, LaurentPoly(1));
  expected.add(g.longest(), L("v^3+2v+2v^-1+v^-3"));
  CHECK(col.product(y) == expected);
  CHECK(format_product_line(g, col, y) ==
        "11(121212): 3(12) -> 2; 7(1212) -> 2; 11(121212) -> 1; 17(121212121) -> v^-3+2v^-1+2v+v^3");
}

TEST_CASE("columns agree with the t-basis ground truth") {
  for (const char* name : {"A2", "I2(4)", "I2(5)", "I2(6)", "A3"}) {
    const GroupTable g = build_group(name);
    const KLStore store(g);
    const WGraph wg = build_wgraph(store);
    KLBasisOracle oracle_c(g);
    CAPTURE(name);
    for (ElementId y = 0; y < g.size(); ++y) {
      const HColumn col = column(wg, y);
      for (ElementId x = 0; x < g.size(); ++x) {
        CCombo expected;
        for (const auto& [z, h] : oracle::c_product(g, oracle_c, x, y)) expected.add(z, h);
        CHECK(col.product(x) == expected);
      }
    }
  }
}

TEST_CASE("descent strategy does not change columns") {
  const GroupTable g = build_group("B3");
  const WGraph wg = build_wgraph(KLStore(g));
  for (ElementId y = 0; y < g.size(); ++y) {
    const HColumn a = column(wg, y, DescentStrategy::First), b = column(wg, y, DescentStrategy::Last);
    for (ElementId x = 0; x < g.size(); ++x) CHECK(a.product(x) == b.product(x));
  }
  CHECK(parse_strategy("last") == DescentStrategy::Last);
  CHECK(to_string(DescentStrategy::First) == "first");
  CHECK_THROWS_AS(parse_strategy("middle"), ParseError);
}

TEST_CASE("poly store interns once") {
  PolyStore store;
  auto [a, fresh_a] = store.intern(SymLaurentPoly(2));
  auto [b, fresh_b] = store.intern(SymLaurentPoly::v_plus_vinv());
  auto [c, fresh_c] = store.intern(SymLaurentPoly(2));
  CHECK(fresh_a);
  CHECK(fresh_b);
  CHECK_FALSE(fresh_c);
  CHECK(a == c);
  CHECK(a != b);
  CHECK(store.size() == 2);
}

TEST_CASE("H3 structure constants: parity and sampled t-basis ground truth") {
  const GroupTable g = build_group("H3");
  const KLStore store(g);
  const WGraph wg = build_wgraph(store);
  for (ElementId y = 0; y < g.size(); ++y) {
    const HColumn col = column(wg, y);
    for (ElementId x = 0; x < g.size(); ++x)
      for (const auto& e : col.row(x)) {
        const SymLaurentPoly& h = col.poly(e.handle);
        CHECK(h.parity() == (g.length(x) + g.length(y) + g.length(e.z)) % 2);
      }
    if (y % 23 != 5) continue;
    const TCombo cy = c_in_t_basis(store, y);
    for (ElementId x = 0; x < g.size(); x += 7)
      CHECK(c_to_t(store, col.product(x)) == t_product(g, c_in_t_basis(store, x), cy));
  }
}
