#pragma once

#include "entprod/space.hpp"

namespace entprod {

enum class LogBase { natural, two, ten };

/// log_base(x).
double apply_log(LogBase base, double x);

/// Relative trace threshold below which the non-entangling counterpart is
/// considered undefined: |Tr A| <= trace_degeneracy_tol * ||A||_2.
inline constexpr double trace_degeneracy_tol = 1e-12;

struct MeasureResult {
    double epsilon;
    double norm_numerator;   // ||A||_p
    double norm_denominator; // ||A_x||_p, the counterpart norm
    double p;
    LogBase log_base;
};

struct ThermalResult {
    enum class Route { direct, partition_formula };
    double epsilon;
    double beta;
    double partition_function;
    Route route;
};

/// The normalized tensor product of single-site partial traces,
/// (x_i A_i) / (Tr A)^(N-1). Maps product states to product states and
/// preserves the trace. Throws TracelessOperatorError when |Tr A| is
/// degenerate relative to ||A||_2.
OperatorOnSpace nonentangling_counterpart(const OperatorOnSpace& a);

/// epsilon(A) = log_base(||A||_p / ||A_x||_p).
MeasureResult entanglement_production(const OperatorOnSpace& a, double p = 2.0,
                                      LogBase base = LogBase::natural);

/// epsilon applied to U(t) = exp(-i H t) with p = 2. The numerator uses the
/// exact unitary identity ||U||_2 = sqrt(dim).
MeasureResult evolutional_measure(const OperatorOnSpace& h, double t,
                                  LogBase base = LogBase::natural);

/// Short-time coefficient mu = lim_{t->0} 2 epsilon(t)/t^2 (natural log),
/// extracted by three-point Richardson extrapolation. Throws
/// NumericalInstabilityError when the extrapolants do not settle.
double short_time_mu(const OperatorOnSpace& h);

/// |<phi_ent | A phi_dis>|^2 / (||phi_ent||^2 ||A phi_dis||^2), in [0, 1].
double entanglement_probability(const OperatorOnSpace& a, const StateVector& phi_dis,
                                const StateVector& phi_ent);

/// epsilon of the Gibbs state rho = exp(-beta H)/Z through the generic
/// operator pipeline (partial traces plus Schatten-2 norms of rho and its
/// counterpart).
ThermalResult thermal_measure_direct(const OperatorOnSpace& h, double beta,
                                     LogBase base = LogBase::natural);

/// The same measure through traces only:
/// epsilon = 1/2 log[ Z^(2N-2) Tr exp(-2 beta H) / prod_i Tr(B_i^2) ]
/// with B_i the single-site reduction of exp(-beta H). Independent of the
/// direct route; the two must agree.
ThermalResult thermal_measure_partition(const OperatorOnSpace& h, double beta,
                                        LogBase base = LogBase::natural);

} // namespace entprod
