#include "zastava/sl2.hpp"

#include "zastava/errors.hpp"

namespace zastava {

RingPtr sl2_ring() {
  static const RingPtr ring = make_ring({"a1", "h"});
  return ring;
}

RationalFunction closed_form_a(int d) {
  if (d < 0) throw UsageError("degree must be non-negative");
  const RingPtr ring = sl2_ring();
  const Polynomial a = Polynomial::variable(ring, 0);
  const Polynomial h = Polynomial::variable(ring, 1);
  Polynomial den = Polynomial::constant(ring, 1);
  for (int i = 1; i <= d; ++i) den = den * (a + h.scaled(i)) * h.scaled(i);
  return RationalFunction(Polynomial::constant(ring, 1), den);
}

Sl2Golden sl2_golden(int d) {
  const RingPtr ring = sl2_ring();
  const RationalFunction x = RationalFunction::variable(ring, 0) / RationalFunction::variable(ring, 1);
  RationalFunction g = RationalFunction::constant(ring, 1);
  for (int i = 1; i <= d; ++i) g = g * (x + RationalFunction::constant(ring, i)).scaled(-i);
  return {d, closed_form_a(d), g};
}

Sl2Action sl2_verma_action(Sl2Op op, int d, const RationalFunction& lambda) {
  if (d < 0) throw UsageError("degree must be non-negative");
  const RingPtr& ring = lambda.ring();
  switch (op) {
    case Sl2Op::h:
      return {lambda + RationalFunction::constant(ring, 2 * d + 1), d};
    case Sl2Op::e:
      return {RationalFunction::constant(ring, 1), d + 1};
    case Sl2Op::f:
      if (d == 0) return {RationalFunction(ring), 0};
      return {(lambda + RationalFunction::constant(ring, d)).scaled(-d), d - 1};
  }
  throw InternalError("unknown sl2 operator");
}

Sl2Vector sl2_apply(Sl2Op op, const Sl2Vector& v, const RationalFunction& lambda) {
  Sl2Vector out;
  for (const auto& [d, c] : v) {
    const Sl2Action act = sl2_verma_action(op, d, lambda);
    if (act.coefficient.is_zero()) continue;
    auto [it, fresh] = out.try_emplace(act.target, c * act.coefficient);
    if (!fresh) it->second += c * act.coefficient;
    if (it->second.is_zero()) out.erase(it);
  }
  return out;
}

}  // namespace zastava
