// roots.hpp
// Certified complex root isolation for rational polynomials.
//
// Real roots are isolated with an exact Sturm-sequence bisection; non-real
// roots are approximated numerically and then certified with a complex
// interval Newton step. Each returned enclosure contains exactly one
// distinct root, mirrors of conjugate pairs are exact, and refinement is
// nested (every refined box is contained in the previous one).

#pragma once

#include "smallzeros/dyadic.hpp"
#include "smallzeros/unipoly.hpp"

#include <vector>

namespace smallzeros {

struct RootBox {
    Enclosure box;
    unsigned multiplicity = 1;
    bool real = false;
};

// All distinct complex roots of f (deg >= 1), each refined so that both box
// sides are <= width, sorted by box midpoint (real part, then imaginary
// part). Multiplicities come from the squarefree/irreducible structure.
std::vector<RootBox> isolate_roots(const UniPoly& f, const Dyadic& width);

// Roots of one irreducible primitive integer polynomial (all simple).
std::vector<RootBox> isolate_irreducible_roots(const IntPoly& f, const Dyadic& width);

// Shrink an isolating box of a simple root of irreducible f until both box
// sides are <= width. The result is contained in `box`.
Enclosure refine_root(const IntPoly& f, const Enclosure& box, bool real, const Dyadic& width);

}  // namespace smallzeros
