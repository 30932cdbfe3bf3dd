#include <doctest.h>

#include "common.hpp"
#include "oracles/oracle.hpp"
#include "qvt/qint.hpp"

using namespace qvt;
using namespace testing_support;

namespace {

TensorElem T(const Cartan& c, std::initializer_list<int> a, std::initializer_list<int> b,
             const char* coeff = "1") {
  TensorElem x(c);
  x.add(make_word(a), make_word(b), P(coeff));
  return x;
}

}  // namespace

TEST_CASE("mul") {
  auto c = a2();
  CHECK(mul(FreeElem::gen(c, 0), FreeElem::gen(c, 1)) == W(c, {0, 1}));
  CHECK(mul(W(c, {0}, "2"), W(c, {1}, "t")) == W(c, {0, 1}, "2*t"));
  auto x = W(c, {1, 0}, "v") + W(c, {0}, "t");
  CHECK(mul(FreeElem::one(c), x) == x);
  CHECK(mul(x, FreeElem::one(c)) == x);
  CHECK_THROWS_AS(mul(x, FreeElem::gen(a2_opposite(), 0)), std::invalid_argument);
}

TEST_CASE("tensor_mul") {
  auto c = a2();
  CHECK(tensor_mul(T(c, {}, {0}), T(c, {1}, {})) == T(c, {1}, {0}, "v*t"));
  CHECK(tensor_mul(T(c, {}, {0}), T(c, {0}, {})) == T(c, {0}, {0}, "v^-2"));
  CHECK(tensor_mul(T(c, {0, 1}, {}), T(c, {1}, {})) == T(c, {0, 1, 1}, {}));
  auto b2 = make_cartan({{2, -1}, {-1, 1}});
  CHECK(tensor_mul(T(b2, {}, {0}), T(b2, {0}, {})) == T(b2, {0}, {0}, "v^-4"));
  CHECK_THROWS_AS(tensor_mul(T(c, {}, {0}), T(b2, {0}, {})), std::invalid_argument);
}

TEST_CASE("coproduct examples") {
  auto c = a2();
  TensorElem r = coproduct(FreeElem::gen(c, 0));
  CHECK(r.terms().size() == 2);
  CHECK(r.coeff(make_word({0}), Word()).is_one());
  CHECK(r.coeff(Word(), make_word({0})).is_one());

  r = coproduct(divided_power(c, 0, 2));
  CHECK(r.coeff(make_word({0, 0}), Word()) == P("1/(t*(v + v^-1))"));
  CHECK(r.coeff(make_word({0}), make_word({0})) == P("v^-1*t^-1"));
  CHECK(r.coeff(Word(), make_word({0, 0})) == P("1/(t*(v + v^-1))"));

  r = coproduct(W(c, {0, 1}));
  CHECK(r.terms().size() == 4);
  CHECK(r.coeff(make_word({0, 1}), Word()).is_one());
  CHECK(r.coeff(make_word({0}), make_word({1})).is_one());
  CHECK(r.coeff(make_word({1}), make_word({0})) == P("v*t"));
  CHECK(r.coeff(Word(), make_word({0, 1})).is_one());
}

TEST_CASE("coproduct is an algebra homomorphism") {
  for (auto c : {a2(), a2_opposite(), make_cartan({{2, -1}, {-1, 1}})}) {
    auto words = words_up_to(c, 3);
    for (const auto& u : words)
      for (const auto& w : words) {
        if (u.size() + w.size() > 6) continue;
        auto x = FreeElem::word(c, u), y = FreeElem::word(c, w);
        CHECK(coproduct(x * y) == tensor_mul(coproduct(x), coproduct(y)));
      }
    for (const auto& w : words_up_to(c, 5))
      CHECK(coproduct(FreeElem::word(c, w)) == oracle::coproduct_by_products(FreeElem::word(c, w)));
  }
}

TEST_CASE("coassociativity") {
  auto c = a2();
  CHECK(coassoc_check(FreeElem::one(c)));
  CHECK(coassoc_check(FreeElem::gen(c, 0)));
  Tensor3Elem expect(c);
  expect.add(make_word({0}), Word(), Word(), 1);
  expect.add(Word(), make_word({0}), Word(), 1);
  expect.add(Word(), Word(), make_word({0}), 1);
  CHECK(coproduct_left(coproduct(FreeElem::gen(c, 0))) == expect);
  for (const auto& w : words_up_to(c, 4)) CHECK(coassoc_check(FreeElem::word(c, w, P("v + t"))));
}

TEST_CASE("triple products: direct and nested forms agree") {
  auto c = make_cartan({{1, -2}, {-1, 1}});
  auto words = words_up_to(c, 2);
  for (const auto& x1 : words)
    for (const auto& x2 : words)
      for (const auto& x3 : words) {
        Tensor3Elem a(c);
        a.add(x1, x2, x3, P("v"));
        for (const auto& y1 : words)
          for (const auto& y3 : words) {
            Tensor3Elem b(c);
            b.add(y1, x2, y3, P("t"));
            CHECK(tensor3_mul(a, b) == tensor3_mul_nested(a, b));
          }
      }
}

TEST_CASE("bar") {
  auto c = a2();
  CHECK(bar(W(c, {0, 1}, "v")) == W(c, {0, 1}, "v^-1"));
  auto x = W(c, {}, "t^-2") * divided_power(c, 0, 2) * FreeElem::gen(c, 1);
  CHECK(bar(x) == x);
  auto y = W(c, {0, 1, 0}, "(v + t)/(v^2 - t)") + W(c, {1}, "3*v^-5*t");
  CHECK(bar(bar(y)) == y);
  CHECK(bar(y * x) == bar(y) * bar(x));
}

TEST_CASE("derivations") {
  auto c = a2();
  CHECK(deriv_r(0, W(c, {1, 0})) == W(c, {1}));
  CHECK(deriv_r(0, W(c, {0, 1})) == W(c, {1}, "v*t"));
  CHECK(deriv_r(0, divided_power(c, 0, 2)) == W(c, {0}, "v^-1*t^-1"));
  CHECK(deriv_r(0, FreeElem::one(c)).is_zero());
  CHECK(deriv_l(0, W(c, {0, 1})) == W(c, {1}));
  CHECK(deriv_l(0, W(c, {1, 0})) == W(c, {1}, "v*t^-1"));
}

TEST_CASE("derivations match the coproduct bicomponents") {
  for (auto c : {a2(), make_cartan({{2, -1}, {-1, 1}})}) {
    for (const auto& w : words_up_to(c, 4)) {
      auto x = FreeElem::word(c, w, P("v - t"));
      TensorElem r = coproduct(x);
      for (int i = 0; i < c->rank(); ++i) {
        Word li(1, static_cast<char>(i));
        FreeElem right(c), left(c);
        for (const auto& [k, coeff] : r.terms()) {
          if (k.second == li) right.add(k.first, coeff);
          if (k.first == li) left.add(k.second, coeff);
        }
        CHECK(right == deriv_r(i, x));
        CHECK(left == deriv_l(i, x));
      }
    }
  }
}

TEST_CASE("twisted Leibniz rules") {
  auto c = make_cartan({{1, -2}, {0, 1}});
  auto words = words_up_to(c, 3);
  for (const auto& u : words)
    for (const auto& w : words) {
      auto x = FreeElem::word(c, u), y = FreeElem::word(c, w);
      Degree dx = word_degree(u, 2), dy = word_degree(w, 2);
      for (int i = 0; i < 2; ++i) {
        Degree e = c->unit(i);
        auto lhs = deriv_r(i, x * y);
        auto rhs = deriv_r(i, x) * y * twist(c->dot(e, dy), c->angle(dy, e) - c->angle(e, dy)) +
                   x * deriv_r(i, y);
        CHECK(lhs == rhs);
        auto lhs2 = deriv_l(i, x * y);
        auto rhs2 = deriv_l(i, x) * y + x * deriv_l(i, y) * twist(c->dot(e, dx), c->angle(e, dx) - c->angle(dx, e));
        CHECK(lhs2 == rhs2);
      }
    }
}

TEST_CASE("divided powers") {
  auto c = a2();
  CHECK(divided_power(c, 0, 0) == FreeElem::one(c));
  CHECK(divided_power(c, 0, 2) == W(c, {0, 0}, "1/(t*(v + v^-1))"));
  for (auto cc : {a2(), make_cartan({{2, -1}, {-1, 1}})}) {
    for (int i = 0; i < 2; ++i)
      for (int n = 0; n <= 6; ++n) {
        int d = cc->scale(i);
        CHECK(divided_power(cc, i, n) * FreeElem::gen(cc, i) ==
              divided_power(cc, i, n + 1) * RatFunc(qint_eval({n + 1, QFlavor::VT, d})));
        CHECK(deriv_r(i, divided_power(cc, i, n + 1)) ==
              divided_power(cc, i, n) * monomial(-d * n, -d * n));
      }
  }
}

TEST_CASE("divided power coproduct") {
  for (auto c : {a2(), make_cartan({{2, -1}, {-1, 1}})}) {
    for (int i = 0; i < 2; ++i) {
      int d = c->scale(i);
      for (int n = 0; n <= 6; ++n) {
        TensorElem expect(c);
        for (int p = 0; p <= n; ++p)
          expect += TensorElem::pure(divided_power(c, i, p) * monomial(-d * p * (n - p), -d * p * (n - p)),
                                     divided_power(c, i, n - p));
        CHECK(coproduct(divided_power(c, i, n)) == expect);
      }
    }
  }
}

TEST_CASE("bar and coproduct") {
  auto c = a2();
  CHECK(bar_coproduct_check(FreeElem::gen(c, 0)));
  CHECK(bar_coproduct_check(W(c, {0, 1}, "v")));
  for (const auto& w : words_up_to(c, 4)) CHECK(bar_coproduct_check(FreeElem::word(c, w)));
}

TEST_CASE("words_of_degree") {
  auto ws = words_of_degree({2, 1});
  REQUIRE(ws.size() == 3);
  CHECK(ws[0] == make_word({0, 0, 1}));
  CHECK(ws[1] == make_word({0, 1, 0}));
  CHECK(ws[2] == make_word({1, 0, 0}));
  CHECK(words_of_degree({0, 0}).size() == 1);
  CHECK(words_of_degree({2, 2}).size() == 6);
}
