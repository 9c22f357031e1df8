// resultant.cpp

#include "smallzeros/resultant.hpp"

namespace smallzeros {

Rat resultant_q(const UniPoly& f, const UniPoly& g) {
    RatRing R;
    RPoly<RatRing> A(f.coeffs().begin(), f.coeffs().end());
    RPoly<RatRing> B(g.coeffs().begin(), g.coeffs().end());
    return resultant(R, A, B);
}

MultiPoly resultant_x(const std::vector<MultiPoly>& f_coeffs,
                      const std::vector<MultiPoly>& g_coeffs, unsigned nvars) {
    MPolyRing R{nvars};
    return resultant(R, f_coeffs, g_coeffs);
}

}  // namespace smallzeros
