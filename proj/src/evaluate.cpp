// evaluate.cpp

#include "smallzeros/evaluate.hpp"

#include <stdexcept>

namespace smallzeros {

NFElement eval_poly(const UniPoly& p, const NFElement& x) {
    NFElement acc = NFElement::from_rat(x.field(), Rat(0));
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * x + NFElement::from_rat(x.field(), p.coeff(i));
    }
    return acc;
}

NFElement eval_poly(const MultiPoly& p, const std::vector<NFElement>& args) {
    if (args.size() != p.nvars()) throw std::invalid_argument("eval_poly: arity mismatch");
    FieldPtr field;
    for (const NFElement& a : args) {
        if (!a.field()) continue;
        if (field && !field->same_field(*a.field()))
            throw incompatible_fields_error("eval_poly: mixed number fields");
        if (!field) field = a.field();
    }
    // cached powers per variable
    std::vector<std::vector<NFElement>> powers(args.size());
    for (size_t i = 0; i < args.size(); ++i)
        powers[i].push_back(NFElement::from_rat(field, Rat(1)));
    auto power = [&](size_t i, unsigned e) -> const NFElement& {
        while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * args[i]);
        return powers[i][e];
    };
    NFElement acc = NFElement::from_rat(field, Rat(0));
    for (const auto& [m, c] : p.terms()) {
        NFElement t = NFElement::from_rat(field, c);
        for (size_t i = 0; i < args.size(); ++i)
            if (m[i] > 0) t = t * power(i, m[i]);
        acc = acc + t;
    }
    return acc;
}

}  // namespace smallzeros
