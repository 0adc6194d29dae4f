#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mqt/composite.hpp"
#include "mqt/measurement.hpp"
#include "mqt/subspace.hpp"

namespace mqt {

/// A two-system state claimed to broadcast `source`: both reductions of
/// `state` equal `source`. Every constructor in this module verifies the two
/// reduction equalities before returning a candidate.
struct BroadcastCandidate {
    Subspace state;   // subspace of the composite F^(d*d)
    Subspace source;  // the input it represents
};

/// Witness that a set of states cannot all be cloned by one linear map:
/// a linear dependence whose forced output disagrees with the desired one.
/// coefficients[s] is the coefficient of state s in the expansion of state
/// dependent_index (zero for the dependent state itself).
struct CloneWitness {
    std::size_t dependent_index;
    std::vector<std::uint64_t> coefficients;
    VectorF forced_output;
    VectorF desired_output;
};

struct CloneFeasibility {
    /// The cloning map T on F^d tensor F^d (row-major d^2 x d^2), present iff
    /// feasible: T(psi tensor blank) = psi tensor psi for every listed state.
    std::optional<MatrixF> cloner;
    std::optional<CloneWitness> witness;
    bool feasible() const { return cloner.has_value(); }
};

/// Decides whether one linear map clones all listed states from the given
/// blank, by assembling the d^4-unknown constraint system and solving it.
/// Infeasibility is explained by a dependence witness; the two routes are
/// cross-checked internally and must agree.
CloneFeasibility clone_feasibility(const std::vector<VectorF>& states, const VectorF& blank);

/// Broadcasts any pair of mixed states: measure in a basis of a v b assembled
/// from a basis of the meet r = a ^ b plus extensions into a and into b, then
/// prepare two copies of the observed basis vector. The output for input a is
/// the span of the diagonal squares of the r- and a-extension vectors, and
/// likewise for b. Both outputs are verified to reduce to their inputs.
std::pair<BroadcastCandidate, BroadcastCandidate> pairwise_broadcast(const Subspace& a,
                                                                     const Subspace& b);

/// Broadcast through a shared nonzero subspace r of x: the output
/// (x tensor r) v (r tensor x) reduces to x on both factors because mixtures
/// carry no weighting, so mixing x with r inside x gives back x exactly.
/// Throws DomainError when r is null or not contained in x; that boundary is
/// exactly where broadcasting becomes impossible.
BroadcastCandidate overlap_broadcast(const Subspace& x, const Subspace& r);

/// The discriminating measurement on the composite space for a diamond
/// (a, b, c): effect "C" annihilates (A tensor A) v (B tensor B), cyclically
/// for "A" and "B", plus an error effect "0" equal to the full dual space so
/// the measurement is complete.
Measurement broadcast_discriminator(const DiamondTriple& d);

/// Every subspace of x tensor x whose two reductions both equal x, in
/// deterministic enumeration order. (Any valid broadcast output for x is a
/// subspace of x tensor x, so this search space is exhaustive; the tests
/// confirm that fact against an unrestricted search at small scale.)
std::vector<BroadcastCandidate> enumerate_broadcast_candidates(const Subspace& x,
                                                               const Budget& budget = {});

/// Re-checkable record that one broadcast candidate for one diamond member is
/// detected by the member's discriminator effect: the functional lies in the
/// effect, the hit vector lies in the candidate, and their pairing is nonzero.
struct DiscriminatorWitness {
    std::string role;  // "A", "B" or "C"
    std::size_t candidate_index;
    Subspace candidate;
    VectorF functional;
    VectorF hit_vector;
    std::uint64_t pairing;
};

struct SurvivingTriple {
    std::size_t index_a;
    std::size_t index_b;
    std::size_t index_c;
};

/// Exhaustive-search verdict for the no-broadcasting proposition on one
/// null-bottom diamond.
struct BroadcastCertificate {
    enum class Verdict { kImpossible, kPossible };

    Verdict verdict;
    Field field;
    std::size_t ambient;  // of the single system; the composite is ambient^2
    DiamondTriple diamond;
    std::size_t candidate_count_a;
    std::size_t candidate_count_b;
    std::size_t candidate_count_c;
    /// Number of candidate output triples examined (product of the counts).
    std::uint64_t candidates_checked;
    std::vector<DiscriminatorWitness> witnesses;
    /// Populated only for verdict kPossible (which would falsify the theorem).
    std::optional<SurvivingTriple> surviving;
};

/// Verifies that no process can broadcast all three members of a null-bottom
/// diamond, by refuting every candidate output triple two independent ways:
///
///  1. The discriminator p-distinguishes the candidates (each candidate is hit
///     by its own effect and silent under the others) — but outputs of any
///     process applied to a diamond can never be p-distinguishable.
///  2. Since c is inside a v b, any process forces M_C inside M_A v M_B
///     (channels respect mixtures); the inclusion is verified to fail.
///
/// Additionally checks, vector by vector, that every nonzero vector of every
/// candidate for c has a nonvanishing cross component (a tensor b / b tensor
/// a) in the split basis of the top — the reason the discriminator always
/// fires. Routes must agree; disagreement raises InternalError.
///
/// Requires a null bottom; for diamonds with a shared nonzero bottom use
/// overlap_broadcast instead (broadcasting is possible there).
BroadcastCertificate verify_no_broadcast(const DiamondTriple& d, const Budget& budget = {},
                                         unsigned workers = 1);

/// Extracts the null-bottom diamond sitting across a diamond with a nonzero
/// bottom: extend a bottom basis to c by vectors c_k, split each as
/// c_k = a_k + b_k with parts in a and b, and span the three extension sets.
/// The result is verified to be a diamond with null bottom.
DiamondTriple slice_diamond(const DiamondTriple& d);

}  // namespace mqt
