// unipoly.hpp
// Dense univariate polynomials over Q. Coefficient index = degree of term.

#pragma once

#include "smallzeros/dyadic.hpp"
#include "smallzeros/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace smallzeros {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rat& v);
    static UniPoly x();
    static UniPoly monomial(const Rat& coeff, unsigned deg);
    static UniPoly from_int_coeffs(const std::vector<long>& coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rat coeff(unsigned k) const { return k < c_.size() ? c_[k] : Rat(0); }
    const Rat& lc() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const Rat& s) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    // Euclidean division over Q; throws on zero divisor.
    static std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);

    UniPoly derivative() const;
    Rat eval(const Rat& x) const;
    UniPoly reversed() const;            // x^deg * p(1/x)
    UniPoly shift_down(unsigned k) const;  // divide by x^k (requires divisibility)
    unsigned trailing_order() const;       // largest k with x^k | p (0 for p(0) != 0)

    // monic gcd over Q; gcd(0,0) = 0
    static UniPoly gcd(const UniPoly& a, const UniPoly& b);
    UniPoly squarefree_part() const;

    // primitive integer form: returns integer-coefficient vector with
    // positive leading coefficient, and the rational scale s with
    // p = s * primitive
    std::pair<std::vector<Int>, Rat> integer_primitive() const;
    bool has_integer_coeffs() const;

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

// Integer-coefficient polynomial utilities used by factorization and
// root isolation. Representation: dense vector<Int>, index = degree.
using IntPoly = std::vector<Int>;

int ip_degree(const IntPoly& f);
IntPoly ip_derivative(const IntPoly& f);
Int ip_eval(const IntPoly& f, const Int& x);
int ip_sign_at(const IntPoly& f, const Dyadic& x);  // exact sign of f(x)
Dyadic ip_eval_dyadic(const IntPoly& f, const Dyadic& x);
Enclosure ip_eval_box(const IntPoly& f, const Enclosure& x, long prec);
UniPoly ip_to_unipoly(const IntPoly& f);

}  // namespace smallzeros
