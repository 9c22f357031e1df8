// certreal.hpp
// Certified positive reals of the form  base^(1/root) * E  where base is an
// exact positive rational and E is a refinable enclosure factor. Values
// built only from rationals and their roots stay fully exact, which makes
// equality comparisons decidable; everything else is compared by adaptive
// refinement up to a precision cap, never guessing.

#pragma once

#include "smallzeros/dyadic.hpp"
#include "smallzeros/rational.hpp"

#include <functional>

namespace smallzeros {

enum class Cmp { LE_certified, GT_certified, Inconclusive };

const char* cmp_name(Cmp c);

using Refiner = std::function<DyInterval(long prec)>;

// outward enclosure of base^(1/root) for a positive rational base
DyInterval rat_root_enclosure(const Rat& base, unsigned root, long prec);

long default_precision_cap();  // SMALLZERO_PRECISION_BITS or 16384

class CertReal {
public:
    CertReal() : base_(1), root_(1) {}

    static CertReal from_rat(const Rat& v);                   // v > 0
    static CertReal nth_root(const Rat& base, unsigned root); // base^(1/root)
    static CertReal from_refiner(Refiner r);

    bool is_exact() const { return !arch_; }
    const Rat& base() const { return base_; }
    unsigned root_index() const { return root_; }
    const Refiner& refiner() const { return arch_; }

    CertReal operator*(const CertReal& o) const;
    CertReal pow(unsigned k) const;
    CertReal root(unsigned m) const;  // value^(1/m)

    DyInterval enclosure(long prec) const;

private:
    Rat base_;       // > 0
    unsigned root_;  // >= 1
    Refiner arch_;   // empty = exact factor 1
};

// certifies a <= b (LE), a > b (GT), or gives up at the precision cap
Cmp compare_le(const CertReal& a, const CertReal& b, long max_prec = default_precision_cap());

}  // namespace smallzeros
