#pragma once

#include <map>

#include "zastava/rational_function.hpp"

namespace zastava {

/// Ring (a1, h) used by the SL(2) references.
RingPtr sl2_ring();

/// A_d = 1 / (d! h^d prod_{i=1..d} (a1 + i h)).
RationalFunction closed_form_a(int d);

struct Sl2Golden {
  int d = 0;
  RationalFunction a_d;
  /// <m_d, m_d> = (-1)^d d! prod_{i=1..d} (a1/h + i).
  RationalFunction gram_d;
};
Sl2Golden sl2_golden(int d);

enum class Sl2Op { e, h, f };

/// op(m_d) = coefficient * m_target on the basis m_d = e^d m_0 of the lowest weight module with
/// h(m_0) = (lambda + 1) m_0. A zero coefficient means op(m_d) = 0.
struct Sl2Action {
  RationalFunction coefficient;
  int target = 0;
};
Sl2Action sl2_verma_action(Sl2Op op, int d, const RationalFunction& lambda);

/// Finite linear combination sum c_d m_d.
using Sl2Vector = std::map<int, RationalFunction>;
Sl2Vector sl2_apply(Sl2Op op, const Sl2Vector& v, const RationalFunction& lambda);

}  // namespace zastava
