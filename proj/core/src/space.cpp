#include "entprod/space.hpp"

#include <string>

namespace entprod {

SpaceStructure::SpaceStructure(std::vector<Eigen::Index> local_dims)
    : dims_(std::move(local_dims)), total_(1) {
    if (dims_.empty()) {
        throw std::invalid_argument("SpaceStructure: need at least one site");
    }
    for (Eigen::Index d : dims_) {
        if (d < 1) {
            throw std::invalid_argument("SpaceStructure: local dimensions must be >= 1");
        }
        total_ *= d;
    }
}

Eigen::Index SpaceStructure::dim(Eigen::Index site) const {
    if (site < 1 || site > sites()) {
        throw std::domain_error("SpaceStructure: site index " + std::to_string(site) +
                                " out of range [1, " + std::to_string(sites()) + "]");
    }
    return dims_[static_cast<std::size_t>(site - 1)];
}

OperatorOnSpace::OperatorOnSpace(ComplexMatrix m, SpaceStructure s)
    : matrix(std::move(m)), structure(std::move(s)) {
    require_valid(matrix, "OperatorOnSpace");
    if (matrix.rows() != structure.total_dim()) {
        throw std::invalid_argument("OperatorOnSpace: matrix dim " + std::to_string(matrix.rows()) +
                                    " does not match structure total dim " +
                                    std::to_string(structure.total_dim()));
    }
}

StateVector::StateVector(ComplexVector a, SpaceStructure s)
    : amplitudes(std::move(a)), structure(std::move(s)) {
    if (amplitudes.size() != structure.total_dim()) {
        throw std::invalid_argument("StateVector: length " + std::to_string(amplitudes.size()) +
                                    " does not match structure total dim " +
                                    std::to_string(structure.total_dim()));
    }
    if (!amplitudes.allFinite()) {
        throw std::invalid_argument("StateVector: non-finite amplitudes");
    }
}

ComplexMatrix partial_trace_keep(const OperatorOnSpace& a, Eigen::Index site) {
    const SpaceStructure& st = a.structure;
    const Eigen::Index d = st.dim(site); // validates the index
    Eigen::Index left = 1, right = 1;
    for (Eigen::Index s = 1; s < site; ++s) left *= st.dim(s);
    for (Eigen::Index s = site + 1; s <= st.sites(); ++s) right *= st.dim(s);

    // Composite index of (l, n, r) is (l*d + n)*right + r.
    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    for (Eigen::Index n = 0; n < d; ++n)
        for (Eigen::Index m = 0; m < d; ++m)
            for (Eigen::Index l = 0; l < left; ++l)
                for (Eigen::Index r = 0; r < right; ++r)
                    out(n, m) += a.matrix((l * d + n) * right + r, (l * d + m) * right + r);
    return out;
}

OperatorOnSpace embed_local(const ComplexMatrix& op, Eigen::Index site,
                            const SpaceStructure& structure) {
    require_valid(op, "embed_local");
    if (op.rows() != structure.dim(site)) {
        throw std::domain_error("embed_local: operator dim " + std::to_string(op.rows()) +
                                " does not match local dim " +
                                std::to_string(structure.dim(site)) + " at site " +
                                std::to_string(site));
    }
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (Eigen::Index s = 1; s <= structure.sites(); ++s) {
        if (s == site) {
            out = kron(out, op);
        } else {
            out = kron(out, ComplexMatrix::Identity(structure.dim(s), structure.dim(s)));
        }
    }
    return {std::move(out), structure};
}

StateVector product_state(std::span<const ComplexVector> locals) {
    if (locals.empty()) {
        throw std::invalid_argument("product_state: need at least one local state");
    }
    std::vector<Eigen::Index> dims;
    dims.reserve(locals.size());
    for (const ComplexVector& v : locals) {
        if (v.size() < 1) {
            throw std::invalid_argument("product_state: empty local state");
        }
        dims.push_back(v.size());
    }
    ComplexVector out = locals[0];
    for (std::size_t i = 1; i < locals.size(); ++i) {
        ComplexVector next(out.size() * locals[i].size());
        for (Eigen::Index a = 0; a < out.size(); ++a)
            for (Eigen::Index b = 0; b < locals[i].size(); ++b)
                next(a * locals[i].size() + b) = out(a) * locals[i](b);
        out = std::move(next);
    }
    return {std::move(out), SpaceStructure(std::move(dims))};
}

} // namespace entprod
