#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "mqt/budget.hpp"
#include "mqt/linalg.hpp"

namespace mqt {

/// A subspace of F^n in canonical form: the basis matrix is the unique RREF
/// of any spanning set, with zero rows dropped. Two Subspace values are equal
/// exactly when they are the same subspace. The null subspace has a 0-row
/// basis and is a first-class value.
///
/// This is the mixed state of modal quantum theory: the span of the possible
/// pure states.
class Subspace {
  public:
    /// Canonical subspace spanned by the rows of m (ambient = cols).
    static Subspace span_rows(const MatrixF& m);
    /// Canonical subspace spanned by the given vectors; empty input gives the
    /// null subspace.
    static Subspace span(const Field& field, std::size_t ambient_dim, const std::vector<VectorF>& vectors);
    static Subspace null(const Field& field, std::size_t ambient_dim);
    static Subspace full(const Field& field, std::size_t ambient_dim);
    /// Trusted constructor for bases already in RREF with no zero rows.
    static Subspace from_rref(MatrixF basis);

    const Field& field() const { return basis_.field(); }
    std::size_t ambient() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const MatrixF& basis() const { return basis_; }
    bool is_null() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient(); }

    bool contains(const VectorF& v) const;

    bool operator==(const Subspace& other) const { return basis_ == other.basis_; }
    bool operator!=(const Subspace& other) const { return !(*this == other); }

    /// "⟨(1,0), (0,1)⟩", or "⟨0⟩" for the null subspace.
    std::string to_string() const;

  private:
    explicit Subspace(MatrixF basis) : basis_(std::move(basis)) {}
    MatrixF basis_;  // RREF, no zero rows
};

/// Smallest subspace containing both: the span of the union of bases.
Subspace join(const Subspace& a, const Subspace& b);

/// Intersection, computed from the kernel of the stacked coefficient system
/// [a^T | b^T]. The annihilator identity ann(a v b) = ann(a) ^ ann(b) provides
/// an independent route and is kept as a cross-check in the tests.
Subspace meet(const Subspace& a, const Subspace& b);

/// All dual functionals vanishing on a, under the dot pairing <e|psi> = sum
/// e_i psi_i. Concretely the right kernel of the basis matrix; dimension is
/// ambient - dim(a).
Subspace annihilator(const Subspace& a);

/// Is b a subspace of a?
bool includes(const Subspace& a, const Subspace& b);

/// Image subspace under a linear map on vectors (columns convention:
/// v -> m v). Subspace channels induced this way respect mixtures:
/// map(A v B) = map(A) v map(B).
Subspace map_subspace(const MatrixF& m, const Subspace& s);

/// Streams every subspace of F^ambient exactly once, in deterministic order:
/// ascending dimension, then lexicographic pivot-column sets, then free
/// entries counted base q. Requires q^ambient within budget.
void for_each_subspace(const Field& field, std::size_t ambient_dim,
                       std::optional<std::size_t> dim_filter, const Budget& budget,
                       const std::function<void(const Subspace&)>& fn);

std::vector<Subspace> enumerate_subspaces(const Field& field, std::size_t ambient_dim,
                                          std::optional<std::size_t> dim_filter = std::nullopt,
                                          const Budget& budget = {});

/// Streams every subspace of the given space (not just of the full ambient),
/// mapped back into the ambient coordinates.
void for_each_subspace_of(const Subspace& space, std::optional<std::size_t> dim_filter,
                          const Budget& budget, const std::function<void(const Subspace&)>& fn);

/// All q^dim vectors of the subspace, zero first, in deterministic order
/// (coefficient odometer over the canonical basis).
std::vector<VectorF> enumerate_vectors(const Subspace& a, const Budget& budget = {});

/// A verified M3 ("diamond") sublattice: three distinct subspaces with a
/// common pairwise join (top) and a common pairwise meet (bottom).
struct DiamondTriple {
    Subspace a;
    Subspace b;
    Subspace c;
    Subspace top;
    Subspace bottom;
};

/// When a, b, c are pairwise distinct with equal pairwise joins S and equal
/// pairwise meets R, returns (S, R); otherwise nullopt.
std::optional<std::pair<Subspace, Subspace>> is_diamond(const Subspace& a, const Subspace& b,
                                                        const Subspace& c);

/// All unordered diamond triples over F^ambient, optionally restricted to
/// members of one dimension and/or to null bottoms. Members of a diamond
/// always share one dimension, so unequal-dimension triples are skipped.
std::vector<DiamondTriple> find_diamonds(const Field& field, std::size_t ambient_dim,
                                         bool require_null_bottom,
                                         std::optional<std::size_t> dim_filter = std::nullopt,
                                         const Budget& budget = {});

}  // namespace mqt
