// sweep.hpp
// Seeded randomized bound-verification sweeps over the constructive
// operations. Instance generation and report assembly are deterministic:
// equal seeds give byte-identical reports.

#pragma once

#include "smallzeros/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace smallzeros {

struct RunConfig {
    std::uint64_t seed = 0;
    std::vector<unsigned> n_values{2, 3};
    std::vector<unsigned> m_values{1, 2};
    long coeff_lo = -5, coeff_hi = 5;
    unsigned instances = 20;  // per (family, N, M) cell
    long precision_bits = default_precision_cap();
    // subset of {"prop31","prop41","thm42","thm12","cor43","sharpness"}
    std::vector<std::string> families{"prop31", "prop41", "thm42", "thm12", "cor43"};

    static RunConfig from_json(const ordered_json& j);
    ordered_json to_json() const;
};

struct SweepOutcome {
    ordered_json report;
    int exit_code = 0;  // 0 ok, 3 inconclusive results present
};

SweepOutcome run_sweep(const RunConfig& config);

// deterministic random polynomials (exposed for the acceptance suite)
class InstanceGen {
public:
    explicit InstanceGen(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    long coeff(long lo, long hi);
    std::uint64_t next();

    MultiPoly homogeneous(unsigned n, unsigned m, long lo, long hi);
    // homogeneous with F(e_i) != 0 for all i
    MultiPoly homogeneous_nonvanishing(unsigned n, unsigned m, long lo, long hi);
    // inhomogeneous, not a monomial
    MultiPoly inhomogeneous(unsigned n, unsigned m, long lo, long hi);
    // inhomogeneous with F(e_i) != 0 for all i (affine)
    MultiPoly inhomogeneous_unit_safe(unsigned n, unsigned m, long lo, long hi);
    QMatrix integer_matrix_invertible(unsigned n, long lo, long hi);

private:
    std::uint64_t state_;
};

}  // namespace smallzeros
