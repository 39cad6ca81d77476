#pragma once

#include "entprod/measure.hpp"

#include <cstdint>

namespace entprod {

/// Two-qubit Ising register: external field h, interaction strength j.
struct Ising2Params {
    double h;
    double j;
};

enum class PeriodKind { periodic, quasi_periodic, degenerate };

struct PeriodClass {
    PeriodKind kind;
    double period = 0.0; // units of 1/J, present iff periodic
    long p = 0;          // reduced h/J = p/q, present iff periodic
    long q = 0;
};

/// -h (Sz x I + I x Sz) + 2J (Sz x Sz) on (2,2) with Sz = diag(1/2, -1/2).
/// Diagonal: (-h+J/2, -J/2, -J/2, h+J/2) in the basis (uu, ud, du, dd).
OperatorOnSpace ising2_hamiltonian(const Ising2Params& params);

/// Exact evolutional measure for the two-qubit register:
/// 1/2 log[(1 + cos^2(ht) + 2 cos(ht)cos(Jt)) / (1 + cos(ht)cos(Jt))^2].
/// Throws TracelessOperatorError where 1 + cos(ht)cos(Jt) vanishes.
double ising2_measure_closed_form(const Ising2Params& params, double t,
                                  LogBase base = LogBase::natural);

/// Leading short-time expansion J^2 t^2/8 + J^2(J^2 - 12 h^2) t^4/192
/// (natural log convention).
double ising2_short_time(const Ising2Params& params, double t);

/// Periodic iff h/J is rational; rationality detected by continued fractions
/// with denominator cap q <= 1000 at the given tolerance. The period in units
/// of 1/J is q*pi when p and q have equal parity, else 2*q*pi.
PeriodClass classify_periodicity(const Ising2Params& params,
                                 double rational_tolerance = 1e-9);

/// Open-chain Ising Hamiltonian -h sum_i Sz_i + 2J sum_i Sz_i Sz_{i+1} on
/// (2,...,2); reduces to ising2_hamiltonian at n = 2. Requires 2 <= n <= 12.
OperatorOnSpace ising_chain_hamiltonian(int n, double h, double j);

enum class RandomKind { hermitian, unitary, generic, thermal_state };

/// Deterministic seeded operator generator for the property-test corpus.
/// generic operators are resampled until |Tr| > 0.1 ||.||_2; thermal states
/// have unit trace and positive spectrum.
OperatorOnSpace random_operator(const SpaceStructure& structure, RandomKind kind,
                                std::uint64_t seed);

} // namespace entprod
