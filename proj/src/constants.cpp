// constants.cpp

#include "smallzeros/constants.hpp"

#include <stdexcept>

namespace smallzeros {

namespace {

CertReal c2_value(unsigned n, unsigned m) {
    if (n < 2 || m < 1) throw std::invalid_argument("constants: need N >= 2, M >= 1");
    CertReal v = CertReal::from_rat(rat_pow(Rat(2), n - 1));
    // middle factor: ((M+2)/2)^((4M+1)(N-2)) under a (2M)-th root
    unsigned long e = static_cast<unsigned long>(4 * m + 1) * (n - 2);
    if (e > 0) v = v * CertReal::nth_root(rat_pow(make_rat(m + 2, 2), e), 2 * m);
    Int prod = 1;
    for (unsigned j = 2; j <= n; ++j) prod *= binomial(m + j - 2, j - 2);
    if (prod != 1) v = v * CertReal::nth_root(Rat(prod), 2 * m);
    return v;
}

}  // namespace

ConstantEnclosure constant_c2(unsigned n, unsigned m) {
    return ConstantEnclosure{n, m, ConstantTag::C2, c2_value(n, m)};
}

ConstantEnclosure constant_c1(unsigned n, unsigned m) {
    CertReal v = c2_value(n, m) * CertReal::nth_root(Rat(binomial(m + n, n)), 2 * m);
    return ConstantEnclosure{n, m, ConstantTag::C1, v};
}

}  // namespace smallzeros
