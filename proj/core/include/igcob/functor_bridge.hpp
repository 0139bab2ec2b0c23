#pragma once

#include <cstdint>

#include "igcob/cob0.hpp"
#include "igcob/int_project.hpp"
#include "igcob/report.hpp"

namespace igcob {

/// Γ₁(M): one edge x -> y per ordered pair of matched boundary points, named
/// "<x>><y>" (e.g. "L:a1>R:b3"). Circles contribute nothing.
IntMorphism fundamental_graph(const Cob0Morphism& m);

/// F̄(M) = (Γ₁(M), circles(M)).
IntProject functor_bar(const Cob0Morphism& m);

/// Compares F̄(M;N) with F̄(M) ; F̄(N). The wager side uses the unoriented
/// cycle count; the directed count is reported alongside, and the report
/// fails if the directed count is not twice the unoriented one.
/// Throws InterfaceMismatch.
Report check_functoriality(const Cob0Morphism& m, const Cob0Morphism& n);

/// Injectivity of F̄ on Hom(A, B) with circles <= max_circles, plus a witness
/// pair collapsed by F alone when max_circles >= 1.
Report check_faithfulness(const LabelSet& source, const LabelSet& target, std::uint64_t max_circles);

}  // namespace igcob
