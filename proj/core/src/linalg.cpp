#include "entprod/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <string>

namespace entprod {

void require_valid(const ComplexMatrix& m, const char* what) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw std::invalid_argument(std::string(what) + ": matrix must be square, got " +
                                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    if (!m.allFinite()) {
        throw std::invalid_argument(std::string(what) + ": matrix has non-finite entries");
    }
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Complex trace(const ComplexMatrix& a) { return a.trace(); }

RealVector singular_values(const ComplexMatrix& a) {
    // Eigen returns them sorted descending already.
    if (a.rows() <= 32) {
        return Eigen::JacobiSVD<ComplexMatrix>(a).singularValues();
    }
    return Eigen::BDCSVD<ComplexMatrix>(a).singularValues();
}

double schatten_norm(const ComplexMatrix& a, double p) {
    if (!(p >= 1.0)) {
        throw std::domain_error("schatten_norm: p must be >= 1, got " + std::to_string(p));
    }
    const RealVector sigma = singular_values(a);
    if (std::isinf(p)) {
        return sigma(0);
    }
    // Scale out the largest singular value to avoid overflow for large p.
    const double top = sigma(0);
    if (top == 0.0) return 0.0;
    double acc = 0.0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        acc += std::pow(sigma(i) / top, p);
    }
    return top * std::pow(acc, 1.0 / p);
}

double hilbert_schmidt_norm(const ComplexMatrix& a) {
    return std::sqrt(std::abs((a.adjoint() * a).trace()));
}

EigenSystem hermitian_eig(const ComplexMatrix& h) {
    require_valid(h, "hermitian_eig");
    const double asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (asym > hermiticity_tol) {
        throw std::domain_error("hermitian_eig: matrix not Hermitian, max asymmetry " +
                                std::to_string(asym));
    }
    const ComplexMatrix sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw NumericalInstabilityError("hermitian_eig: eigensolver failed to converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix evolve_operator(const ComplexMatrix& h, double t) {
    const EigenSystem es = hermitian_eig(h);
    const Complex minus_i(0.0, -1.0);
    ComplexVector phases(es.eigenvalues.size());
    for (Eigen::Index k = 0; k < phases.size(); ++k) {
        phases(k) = std::exp(minus_i * es.eigenvalues(k) * t);
    }
    return es.eigenvectors * phases.asDiagonal() * es.eigenvectors.adjoint();
}

ComplexMatrix imaginary_time_operator(const ComplexMatrix& h, double beta) {
    if (beta < 0.0) {
        throw std::domain_error("imaginary_time_operator: beta must be >= 0, got " +
                                std::to_string(beta));
    }
    const EigenSystem es = hermitian_eig(h);
    ComplexVector weights(es.eigenvalues.size());
    for (Eigen::Index k = 0; k < weights.size(); ++k) {
        weights(k) = std::exp(-beta * es.eigenvalues(k));
    }
    ComplexMatrix out = es.eigenvectors * weights.asDiagonal() * es.eigenvectors.adjoint();
    // The spectral product drifts off Hermitian by rounding only.
    return 0.5 * (out + out.adjoint());
}

} // namespace entprod
