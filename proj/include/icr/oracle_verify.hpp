// Randomized agreement protocol between the closed-form DMT expressions and
// the grid-solved exponent programs.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "icr/exponent_program.hpp"
#include "icr/types.hpp"

namespace icr {

enum class OracleFamily { Cutset, CF, DF, FD_AF, HD_AF };

std::string oracle_family_name(OracleFamily f);
OracleFamily oracle_family_from_name(const std::string& name);

struct AgreementRow {
    OracleFamily family = OracleFamily::Cutset;
    std::string component;
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
    double r1 = 0.0, r2 = 0.0;
    double closed_form = 0.0;
    double oracle = 0.0;
    int dims = 0;  // active program dimension n

    double deviation() const { return std::abs(closed_form - oracle); }
    // Lattice quantization can push the grid optimum at most one step per
    // variable above the continuum optimum.
    double allowed(double step) const { return (dims + 1) * step; }
};

// Draws `samples` seeded random tuples (alpha in [0,3], beta in [0,4],
// gamma in [0,2], forced to 1 for the AF families, r1, r2 in [0,1]) and
// solves every component program of the family against its closed form.
std::vector<AgreementRow> verify_family(OracleFamily family, int samples, double step,
                                        std::uint64_t seed);

}  // namespace icr
