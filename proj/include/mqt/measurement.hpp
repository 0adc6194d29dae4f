#pragma once

#include <string>
#include <vector>

#include "mqt/subspace.hpp"

namespace mqt {

/// One outcome of a generalized measurement: a subspace of the dual space.
/// The dual space is represented concretely as F^n under the dot pairing, so
/// effect bases are ordinary row vectors.
struct Effect {
    std::string label;
    Subspace dual_subspace;
};

/// A generalized measurement: effect subspaces whose join is the full dual
/// space (completeness). Labels are unique. Effects with a null dual subspace
/// are accepted but reported as validation warnings; they can never fire.
class Measurement {
  public:
    static Measurement make(std::vector<Effect> effects);

    const std::vector<Effect>& effects() const { return effects_; }
    const Effect& effect(const std::string& label) const;
    bool has_effect(const std::string& label) const;
    std::size_t ambient() const;
    const Field& field() const;

    /// Labels of null effects, if any.
    const std::vector<std::string>& validation_warnings() const { return warnings_; }

  private:
    explicit Measurement(std::vector<Effect> effects, std::vector<std::string> warnings)
        : effects_(std::move(effects)), warnings_(std::move(warnings)) {}
    std::vector<Effect> effects_;
    std::vector<std::string> warnings_;
};

/// The measurement whose outcomes are the dual-basis functionals of an
/// invertible basis matrix (rows = basis vectors): one rank-1 effect per
/// functional, built from the inverse transpose so that functional k applied
/// to basis vector j gives delta_kj. Labels are "0", "1", ...
Measurement simple_measurement(const MatrixF& basis);

/// Outcome possibility: true iff some functional in the effect pairs nonzero
/// with some vector of the state, i.e. the pairing matrix
/// (effect basis) (state basis)^T is nonzero. Equivalently the state is not
/// contained in the annihilator of the effect.
bool is_possible(const Effect& e, const Subspace& m);
bool is_possible(const Subspace& effect_dual, const Subspace& m);

/// P-distinguishability of labeled states under a measurement: every state's
/// own effect is possible on it, and every other assigned effect is
/// impossible on it. Effects not assigned to any state (a null-result outcome)
/// are unconstrained. One label per state; labels must name effects.
bool is_p_distinguishing(const Measurement& meas, const std::vector<Subspace>& states,
                         const std::vector<std::string>& state_labels);

/// Machine-checkable record that a diamond triple cannot be p-distinguished:
/// any effect silent on both a and b lies in ann(a) ^ ann(b), which is
/// verified to be contained in ann(c), so it is silent on c as well.
struct DiamondSilenceRecord {
    Subspace ann_a;
    Subspace ann_b;
    Subspace ann_c;
    Subspace silent_on_both;  // ann_a ^ ann_b
    bool inclusion_holds;     // silent_on_both subset of ann_c
};

/// Requires is_diamond(a, b, c); throws DomainError otherwise.
DiamondSilenceRecord diamond_not_p_distinguishable(const Subspace& a, const Subspace& b,
                                                   const Subspace& c);

}  // namespace mqt
