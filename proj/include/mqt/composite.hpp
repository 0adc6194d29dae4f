#pragma once

#include <cstddef>
#include <vector>

#include "mqt/subspace.hpp"

namespace mqt {

/// Factor dimensions of a composite system. The composite index convention is
/// left-factor-major throughout: for two factors, (i, j) -> i * d2 + j.
struct FactorShape {
    std::vector<std::size_t> dims;

    static FactorShape bipartite(std::size_t d1, std::size_t d2) { return FactorShape{{d1, d2}}; }

    std::size_t factors() const { return dims.size(); }
    std::size_t total() const;
    void validate() const;  // every dim >= 1, at least one factor
};

/// Tensor product of subspaces: the span of all Kronecker products of basis
/// vectors, in ambient dim(a.ambient) * dim(b.ambient).
Subspace tensor_subspace(const Subspace& a, const Subspace& b);

/// Subsystem state of a nonzero pure state of a bipartite composite.
/// Reshapes v into a d1 x d2 coefficient grid; keep = 2 yields the row space,
/// keep = 1 the column space. Throws DomainError for the zero vector (not a
/// valid pure state).
Subspace reduce_pure(const VectorF& v, const FactorShape& shape, std::size_t keep);

/// Reduction: the minimal subspace containing the kept-factor states of every
/// pure state in m. Join of reduce_pure over any basis (basis independent).
/// Reduction of the null subspace is null. Shapes with three or more factors
/// are handled by grouping adjacent factors and reducing one boundary at a
/// time; keep is the 1-based index of the factor to keep.
Subspace reduce(const Subspace& m, const FactorShape& shape, std::size_t keep);

}  // namespace mqt
