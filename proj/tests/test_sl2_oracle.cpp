#include "doctest.h"
#include "zastava/errors.hpp"
#include "zastava/partition.hpp"
#include "zastava/sl2.hpp"

using namespace zastava;

namespace {

RationalFunction rf(const std::string& s, const RingPtr& ring) { return parse_rational_function(s, ring); }

bool equal(const Sl2Vector& x, const Sl2Vector& y) { return x == y; }

Sl2Vector sum(Sl2Vector x, const Sl2Vector& y, int sign) {
  for (const auto& [d, c] : y) {
    auto [it, fresh] = x.try_emplace(d, sign > 0 ? c : -c);
    if (!fresh) it->second += sign > 0 ? c : -c;
    if (it->second.is_zero()) x.erase(it);
  }
  return x;
}

Sl2Vector scaled(Sl2Vector x, int k) {
  for (auto& [d, c] : x) c = c.scaled(k);
  if (k == 0) x.clear();
  return x;
}

}  // namespace

TEST_CASE("closed form") {
  const RingPtr r = sl2_ring();
  CHECK(closed_form_a(0) == RationalFunction::constant(r, 1));
  CHECK(closed_form_a(1) == rf("1/(h*(a1 + h))", r));
  CHECK(closed_form_a(3) == rf("1/(6*h^3*(a1 + h)*(a1 + 2*h)*(a1 + 3*h))", r));
  CHECK_THROWS_AS(closed_form_a(-1), UsageError);
}

TEST_CASE("displayed action") {
  const RingPtr r = make_ring({"l"});
  const auto l = RationalFunction::variable(r, 0);
  auto act = sl2_verma_action(Sl2Op::h, 2, l);
  CHECK(act.coefficient == rf("l + 5", r));
  CHECK(act.target == 2);
  CHECK(sl2_verma_action(Sl2Op::f, 0, l).coefficient.is_zero());
  act = sl2_verma_action(Sl2Op::f, 3, l);
  CHECK(act.coefficient == rf("-3*(l + 3)", r));
  CHECK(act.target == 2);
  act = sl2_verma_action(Sl2Op::e, 4, l);
  CHECK(act.coefficient == RationalFunction::constant(r, 1));
  CHECK(act.target == 5);
}

TEST_CASE("commutation relations") {
  const RingPtr r = make_ring({"l"});
  const auto l = RationalFunction::variable(r, 0);
  for (int d = 0; d <= 20; ++d) {
    const Sl2Vector m{{d, RationalFunction::constant(r, 1)}};
    auto e = [&](const Sl2Vector& v) { return sl2_apply(Sl2Op::e, v, l); };
    auto f = [&](const Sl2Vector& v) { return sl2_apply(Sl2Op::f, v, l); };
    auto h = [&](const Sl2Vector& v) { return sl2_apply(Sl2Op::h, v, l); };
    CHECK(equal(sum(e(f(m)), f(e(m)), -1), h(m)));
    CHECK(equal(sum(h(e(m)), e(h(m)), -1), scaled(e(m), 2)));
    CHECK(equal(sum(h(f(m)), f(h(m)), -1), scaled(f(m), -2)));
  }
}

TEST_CASE("closed form satisfies the Toda recursion") {
  const RingPtr r = sl2_ring();
  for (int d = 1; d <= 20; ++d) {
    const auto coeff = rf(std::to_string(d) + "*h*(a1 + " + std::to_string(d) + "*h)", r);
    CHECK(coeff * closed_form_a(d) == closed_form_a(d - 1));
  }
}

TEST_CASE("golden gram values") {
  const RingPtr r = sl2_ring();
  const auto h = RationalFunction::variable(r, 1);
  for (int d = 0; d <= 12; ++d) {
    const Sl2Golden g = sl2_golden(d);
    const RationalFunction lhs = d % 2 ? -g.a_d : g.a_d;
    CHECK(lhs == h.pow(-2 * d) / g.gram_d);
  }
  // the same gram value from the contravariant pairing on words
  VermaModel model(build_cartan("A1"));
  const LowestWeight lambda = standard_weight(build_cartan("A1"), r);
  for (int d = 0; d <= 8; ++d) CHECK(gram_matrix(model, Content(std::vector<int>{d}), lambda).gram(0, 0) == sl2_golden(d).gram_d);
}
