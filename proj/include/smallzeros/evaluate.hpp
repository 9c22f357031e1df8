// evaluate.hpp
// Exact polynomial evaluation over Q and over Q[x]/(f).

#pragma once

#include "smallzeros/multipoly.hpp"
#include "smallzeros/numberfield.hpp"

#include <vector>

namespace smallzeros {

NFElement eval_poly(const UniPoly& p, const NFElement& x);
NFElement eval_poly(const MultiPoly& p, const std::vector<NFElement>& args);

}  // namespace smallzeros
