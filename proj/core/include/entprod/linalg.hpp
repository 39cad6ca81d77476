#pragma once

#include <Eigen/Dense>

#include <complex>
#include <limits>
#include <stdexcept>

namespace entprod {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Sentinel for the operator norm (Schatten infinity-norm).
inline constexpr double schatten_inf = std::numeric_limits<double>::infinity();

/// Max-entry tolerance for accepting a matrix as Hermitian.
inline constexpr double hermiticity_tol = 1e-12;

class TracelessOperatorError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NumericalInstabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws std::invalid_argument if m is non-square or has NaN/Inf entries.
void require_valid(const ComplexMatrix& m, const char* what);

/// Kronecker product. Entry ((i*b.rows()+k),(j*b.cols()+l)) = a(i,j)*b(k,l),
/// so the left factor carries the slow index.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

Complex trace(const ComplexMatrix& a);

/// Singular values, non-negative and sorted descending.
RealVector singular_values(const ComplexMatrix& a);

/// Schatten p-norm (sum sigma_i^p)^(1/p); p = schatten_inf gives the
/// operator norm. Requires p >= 1.
double schatten_norm(const ComplexMatrix& a, double p);

/// Frobenius route sqrt(Tr A^+ A); independent of the singular-value route.
double hilbert_schmidt_norm(const ComplexMatrix& a);

struct EigenSystem {
    RealVector eigenvalues;    // ascending
    ComplexMatrix eigenvectors; // columns orthonormal, H = V diag(lambda) V^+
};

/// Spectral decomposition of a Hermitian matrix. Inputs are symmetrized via
/// (H + H^+)/2 first; asymmetry beyond hermiticity_tol (max entry) throws.
EigenSystem hermitian_eig(const ComplexMatrix& h);

/// exp(-i h t) through the spectral decomposition of h. Unitary.
ComplexMatrix evolve_operator(const ComplexMatrix& h, double t);

/// exp(-beta h) through the spectral decomposition of h; beta >= 0.
/// Hermitian positive-definite.
ComplexMatrix imaginary_time_operator(const ComplexMatrix& h, double beta);

} // namespace entprod
