#include "mqt/composite.hpp"

#include <numeric>

namespace mqt {

std::size_t FactorShape::total() const {
    std::size_t t = 1;
    for (std::size_t d : dims) t *= d;
    return t;
}

void FactorShape::validate() const {
    if (dims.empty()) throw DomainError("factor shape needs at least one factor");
    for (std::size_t d : dims) {
        if (d < 1) throw DomainError("factor dimensions must be at least 1");
    }
}

Subspace tensor_subspace(const Subspace& a, const Subspace& b) {
    if (a.field() != b.field()) throw DomainError("tensor_subspace: field mismatch");
    const std::size_t ambient = a.ambient() * b.ambient();
    if (a.is_null() || b.is_null()) return Subspace::null(a.field(), ambient);
    return Subspace::span_rows(kron(a.basis(), b.basis()));
}

namespace {

// Bipartite reduction of one pure state: row space (keep = 2) or column space
// (keep = 1) of the d1 x d2 coefficient grid.
Subspace reduce_pure_bipartite(const VectorF& v, std::size_t d1, std::size_t d2,
                               std::size_t keep) {
    if (v.dim() != d1 * d2) throw DomainError("reduce: vector does not match factor shape");
    if (v.is_zero()) throw DomainError("reduce: the zero vector is not a valid pure state");
    const Field& f = v.field();
    MatrixF grid(f, d1, d2);
    for (std::size_t i = 0; i < d1; ++i) {
        for (std::size_t j = 0; j < d2; ++j) grid.set_raw(i, j, v.raw(i * d2 + j));
    }
    return keep == 2 ? Subspace::span_rows(grid) : Subspace::span_rows(grid.transpose());
}

Subspace reduce_bipartite(const Subspace& m, std::size_t d1, std::size_t d2, std::size_t keep) {
    if (m.ambient() != d1 * d2) throw DomainError("reduce: subspace does not match factor shape");
    const std::size_t kept_dim = keep == 1 ? d1 : d2;
    if (m.is_null()) return Subspace::null(m.field(), kept_dim);
    // Minimal kept-factor subspace: the span of all grid rows (or columns)
    // over a basis. Basis independent because the grid map is linear.
    const Field& f = m.field();
    const std::size_t other_dim = keep == 1 ? d2 : d1;
    MatrixF collected(f, m.dim() * other_dim, kept_dim);
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t i = 0; i < d1; ++i) {
            for (std::size_t j = 0; j < d2; ++j) {
                const std::uint64_t value = m.basis().raw(r, i * d2 + j);
                if (keep == 2) {
                    collected.set_raw(r * other_dim + i, j, value);
                } else {
                    collected.set_raw(r * other_dim + j, i, value);
                }
            }
        }
    }
    return Subspace::span_rows(collected);
}

void check_keep(const FactorShape& shape, std::size_t keep) {
    shape.validate();
    if (keep < 1 || keep > shape.factors()) {
        throw DomainError("reduce: keep index must name a factor (1-based)");
    }
}

}  // namespace

Subspace reduce_pure(const VectorF& v, const FactorShape& shape, std::size_t keep) {
    check_keep(shape, keep);
    if (shape.factors() != 2) {
        throw DomainError("reduce_pure: expected a bipartite shape; group factors first");
    }
    return reduce_pure_bipartite(v, shape.dims[0], shape.dims[1], keep);
}

Subspace reduce(const Subspace& m, const FactorShape& shape, std::size_t keep) {
    check_keep(shape, keep);
    if (m.ambient() != shape.total()) {
        throw DomainError("reduce: subspace does not match factor shape");
    }
    if (shape.factors() == 1) return m;
    // Peel factors by grouping adjacent ones: first drop everything left of
    // the kept factor, then everything right of it.
    Subspace current = m;
    const auto& dims = shape.dims;
    const std::size_t left = std::accumulate(dims.begin(), dims.begin() + (keep - 1),
                                             std::size_t{1}, std::multiplies<>());
    const std::size_t right = std::accumulate(dims.begin() + keep, dims.end(), std::size_t{1},
                                              std::multiplies<>());
    if (left > 1) current = reduce_bipartite(current, left, dims[keep - 1] * right, 2);
    if (right > 1) current = reduce_bipartite(current, dims[keep - 1], right, 1);
    return current;
}

}  // namespace mqt
