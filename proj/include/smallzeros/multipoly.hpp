// multipoly.hpp
// Sparse multivariate polynomials over Q, keyed by exponent vectors.
// Zero coefficients are never stored; the zero polynomial has an empty
// term map and is a first-class value.

#pragma once

#include "smallzeros/rational.hpp"
#include "smallzeros/unipoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace smallzeros {

using Monomial = std::vector<unsigned>;  // length = nvars

// Rational matrix, row-major
struct QMatrix {
    std::vector<std::vector<Rat>> rows;

    size_t nrows() const { return rows.size(); }
    size_t ncols() const { return rows.empty() ? 0 : rows[0].size(); }
    static QMatrix identity(size_t n);
    Rat det() const;            // square only, exact
    QMatrix inverse() const;    // throws on singular
    std::vector<Rat> apply(const std::vector<Rat>& v) const;
    size_t rank() const;
};

class MultiPoly {
public:
    explicit MultiPoly(unsigned nvars = 1) : nvars_(nvars) {}
    MultiPoly(unsigned nvars, std::map<Monomial, Rat> terms);

    static MultiPoly constant(unsigned nvars, const Rat& v);
    static MultiPoly variable(unsigned nvars, unsigned i);  // X_{i+1}, 0-based i

    unsigned nvars() const { return nvars_; }
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    Rat coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Rat& c);

    int total_degree() const;            // -1 for zero
    int degree_in(unsigned var) const;   // -1 for zero
    bool is_homogeneous() const;         // zero counts as homogeneous
    bool is_monomial() const { return terms_.size() == 1; }

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const Rat& s) const;
    bool operator==(const MultiPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    Rat eval(const std::vector<Rat>& args) const;

    // F(A X): substitute each variable by the corresponding row of A applied
    // to the variable vector. A must be nvars x nvars.
    MultiPoly substitute_linear(const QMatrix& A) const;

    // X_i := c * X_j (i != j, 0-based); variable i is removed and the
    // remaining variables are renumbered in order.
    MultiPoly substitute_scaled_var(unsigned i, unsigned j, const Rat& c) const;

    // X_i := c; variable i is removed.
    MultiPoly substitute_const(unsigned i, const Rat& c) const;

    // keep only the variables in `keep` (others set to 0); the kept
    // variables are renumbered in the order given
    MultiPoly restrict_to(const std::vector<unsigned>& keep) const;

    // new first variable X_0 raising every monomial to total degree =
    // total_degree(); coefficient multiset is preserved
    MultiPoly homogenize() const;

    // decomposition along `var`: result[k] = coefficient of X_var^k,
    // a polynomial in the remaining nvars-1 variables (original order)
    std::vector<MultiPoly> decompose_along(unsigned var) const;

    // univariate restriction: substitute X_var := t and X_k := args[...] for
    // the others; returns a UniPoly in t
    UniPoly univariate_in(unsigned var, const std::vector<Rat>& other_args) const;

    std::vector<Rat> coefficient_vector() const;  // nonzero coefficients, key order

    // exact division (throws if not divisible); used by fraction-free
    // elimination over Q[t]
    static MultiPoly divexact(const MultiPoly& a, const MultiPoly& b);

    std::string str() const;  // canonical form, parseable by parse_poly

private:
    void normalize();
    unsigned nvars_;
    std::map<Monomial, Rat> terms_;
};

}  // namespace smallzeros
