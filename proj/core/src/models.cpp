#include "entprod/models.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace entprod {

namespace {

ComplexMatrix spin_z() {
    ComplexMatrix sz = ComplexMatrix::Zero(2, 2);
    sz(0, 0) = 0.5;
    sz(1, 1) = -0.5;
    return sz;
}

} // namespace

OperatorOnSpace ising2_hamiltonian(const Ising2Params& params) {
    const SpaceStructure st({2, 2});
    const ComplexMatrix sz = spin_z();
    const ComplexMatrix free_term =
        embed_local(sz, 1, st).matrix + embed_local(sz, 2, st).matrix;
    const ComplexMatrix interaction = kron(sz, sz);
    return {-params.h * free_term + 2.0 * params.j * interaction, st};
}

double ising2_measure_closed_form(const Ising2Params& params, double t, LogBase base) {
    const double ch = std::cos(params.h * t);
    const double cj = std::cos(params.j * t);
    const double den = 1.0 + ch * cj;
    if (std::abs(den) <= 1e-12) {
        throw TracelessOperatorError(
            "ising2_measure_closed_form: Tr U(t) vanishes at t = " + std::to_string(t));
    }
    const double num = 1.0 + ch * ch + 2.0 * ch * cj;
    return 0.5 * apply_log(base, num / (den * den));
}

double ising2_short_time(const Ising2Params& params, double t) {
    const double j2 = params.j * params.j;
    const double t2 = t * t;
    return j2 * t2 / 8.0 + j2 * (j2 - 12.0 * params.h * params.h) * t2 * t2 / 192.0;
}

PeriodClass classify_periodicity(const Ising2Params& params, double rational_tolerance) {
    if (params.j == 0.0) {
        return {PeriodKind::degenerate};
    }
    const double x = std::abs(params.h / params.j);

    // Continued-fraction convergents p/q of x, capped at q <= 1000.
    long p_prev = 0, q_prev = 1; // convergent n-2
    long p_cur = 1, q_cur = 0;   // convergent n-1; first step yields floor(x)/1
    double frac = x;
    long p = 0, q = 0;
    bool found = false;
    for (int iter = 0; iter < 64; ++iter) {
        const double a_f = std::floor(frac);
        if (a_f > 1e15) break;
        const long a = static_cast<long>(a_f);
        const long p_next = a * p_cur + p_prev;
        const long q_next = a * q_cur + q_prev;
        if (q_next > 1000) break;
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
        if (std::abs(x - static_cast<double>(p_cur) / static_cast<double>(q_cur)) <=
            rational_tolerance) {
            p = p_cur;
            q = q_cur;
            found = true;
            break;
        }
        const double rem = frac - a_f;
        if (rem == 0.0) break;
        frac = 1.0 / rem;
    }
    if (!found) {
        return {PeriodKind::quasi_periodic};
    }
    // cos(ht), cos(Jt) flip sign together over q*pi exactly when p and q have
    // equal parity, which leaves the measure invariant; otherwise 2q*pi.
    const bool same_parity = ((p % 2) == (q % 2));
    const double period = (same_parity ? 1.0 : 2.0) * static_cast<double>(q) *
                          std::numbers::pi;
    return {PeriodKind::periodic, period, p, q};
}

OperatorOnSpace ising_chain_hamiltonian(int n, double h, double j) {
    if (n < 2 || n > 12) {
        throw std::domain_error("ising_chain_hamiltonian: n must be in [2, 12], got " +
                                std::to_string(n));
    }
    const Eigen::Index dim = Eigen::Index(1) << n;
    // Diagonal in the product basis; spin at site s (1-based, slowest first)
    // is read off bit n-s of the composite index.
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
        double e = 0.0;
        double prev = 0.0;
        for (int s = 1; s <= n; ++s) {
            const double spin = ((b >> (n - s)) & 1) ? -0.5 : 0.5;
            e += -h * spin;
            if (s > 1) e += 2.0 * j * prev * spin;
            prev = spin;
        }
        out(b, b) = e;
    }
    return {std::move(out), SpaceStructure(std::vector<Eigen::Index>(n, 2))};
}

OperatorOnSpace random_operator(const SpaceStructure& structure, RandomKind kind,
                                std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const Eigen::Index dim = structure.total_dim();
    auto draw = [&] {
        ComplexMatrix g(dim, dim);
        for (Eigen::Index i = 0; i < dim; ++i)
            for (Eigen::Index k = 0; k < dim; ++k)
                g(i, k) = Complex(gauss(rng), gauss(rng));
        return g;
    };

    switch (kind) {
        case RandomKind::hermitian: {
            const ComplexMatrix g = draw();
            return {0.5 * (g + g.adjoint()), structure};
        }
        case RandomKind::unitary: {
            const ComplexMatrix g = draw();
            return {evolve_operator(0.5 * (g + g.adjoint()), 1.0), structure};
        }
        case RandomKind::generic: {
            for (;;) {
                ComplexMatrix g = draw();
                if (std::abs(g.trace()) > 0.1 * hilbert_schmidt_norm(g)) {
                    return {std::move(g), structure};
                }
            }
        }
        case RandomKind::thermal_state: {
            const ComplexMatrix g = draw();
            ComplexMatrix boltzmann = imaginary_time_operator(0.5 * (g + g.adjoint()), 1.0);
            boltzmann /= boltzmann.trace().real();
            return {std::move(boltzmann), structure};
        }
    }
    throw std::logic_error("random_operator: unknown kind");
}

} // namespace entprod
