#pragma once

#include "entprod/linalg.hpp"

#include <span>
#include <vector>

namespace entprod {

/// Tensor-product factorization of the Hilbert space: ordered local
/// dimensions (d_1, ..., d_N). The composite basis index is
/// n = sum_i n_i * prod_{j>i} d_j, i.e. site 1 varies slowest, matching
/// left-to-right kron order.
class SpaceStructure {
public:
    explicit SpaceStructure(std::vector<Eigen::Index> local_dims);

    const std::vector<Eigen::Index>& local_dims() const { return dims_; }
    Eigen::Index total_dim() const { return total_; }
    Eigen::Index sites() const { return static_cast<Eigen::Index>(dims_.size()); }
    Eigen::Index dim(Eigen::Index site) const; // site is 1-based

    bool operator==(const SpaceStructure&) const = default;

private:
    std::vector<Eigen::Index> dims_;
    Eigen::Index total_;
};

/// A square operator together with the factorization it acts on.
struct OperatorOnSpace {
    ComplexMatrix matrix;
    SpaceStructure structure;

    OperatorOnSpace(ComplexMatrix m, SpaceStructure s);
};

struct StateVector {
    ComplexVector amplitudes;
    SpaceStructure structure;

    StateVector(ComplexVector a, SpaceStructure s);
};

/// Reduces a to site `site` (1-based) by summing over matched basis indices
/// of every other site. Preserves the trace.
ComplexMatrix partial_trace_keep(const OperatorOnSpace& a, Eigen::Index site);

/// I x ... x op x ... x I with op in slot `site` (1-based).
OperatorOnSpace embed_local(const ComplexMatrix& op, Eigen::Index site,
                            const SpaceStructure& structure);

/// Tensor product of one local state per site.
StateVector product_state(std::span<const ComplexVector> locals);

} // namespace entprod
