#include "mqt/measurement.hpp"

#include <algorithm>
#include <set>

namespace mqt {

Measurement Measurement::make(std::vector<Effect> effects) {
    if (effects.empty()) throw DomainError("a measurement needs at least one effect");
    const Field& field = effects.front().dual_subspace.field();
    const std::size_t ambient = effects.front().dual_subspace.ambient();
    std::set<std::string> labels;
    std::vector<std::string> warnings;
    Subspace joined = Subspace::null(field, ambient);
    for (const Effect& e : effects) {
        if (e.dual_subspace.field() != field || e.dual_subspace.ambient() != ambient) {
            throw DomainError("measurement effects must share one dual space");
        }
        if (!labels.insert(e.label).second) {
            throw DomainError("duplicate effect label '" + e.label + "'");
        }
        if (e.dual_subspace.is_null()) warnings.push_back(e.label);
        joined = join(joined, e.dual_subspace);
    }
    if (!joined.is_full()) {
        throw DomainError("measurement is incomplete: effects join to dimension " +
                          std::to_string(joined.dim()) + " of " + std::to_string(ambient));
    }
    return Measurement(std::move(effects), std::move(warnings));
}

const Effect& Measurement::effect(const std::string& label) const {
    for (const Effect& e : effects_) {
        if (e.label == label) return e;
    }
    throw DomainError("unknown effect label '" + label + "'");
}

bool Measurement::has_effect(const std::string& label) const {
    return std::any_of(effects_.begin(), effects_.end(),
                       [&](const Effect& e) { return e.label == label; });
}

std::size_t Measurement::ambient() const { return effects_.front().dual_subspace.ambient(); }
const Field& Measurement::field() const { return effects_.front().dual_subspace.field(); }

Measurement simple_measurement(const MatrixF& basis) {
    if (basis.rows() != basis.cols()) {
        throw DomainError("simple measurement needs a square basis matrix");
    }
    const auto inv = inverse(basis);
    if (!inv) throw DomainError("simple measurement needs an invertible basis matrix");
    // Rows of the inverse transpose are the dual functionals: functional k
    // applied to basis vector j gives delta_kj, so outcome k is possible on a
    // pure state exactly when the state's k-th expansion coefficient is nonzero.
    const MatrixF dual = inv->transpose();
    std::vector<Effect> effects;
    effects.reserve(basis.rows());
    for (std::size_t k = 0; k < basis.rows(); ++k) {
        effects.push_back(Effect{std::to_string(k),
                                 Subspace::span(basis.field(), basis.cols(), {dual.row(k)})});
    }
    return Measurement::make(std::move(effects));
}

bool is_possible(const Subspace& effect_dual, const Subspace& m) {
    if (effect_dual.field() != m.field() || effect_dual.ambient() != m.ambient()) {
        throw DomainError("is_possible: effect and state live in different spaces");
    }
    // Nonzero pairing matrix (effect basis)(state basis)^T.
    const Field& f = m.field();
    for (std::size_t e = 0; e < effect_dual.dim(); ++e) {
        for (std::size_t s = 0; s < m.dim(); ++s) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < m.ambient(); ++j) {
                acc = f.add(acc, f.mul(effect_dual.basis().raw(e, j), m.basis().raw(s, j)));
            }
            if (acc != 0) return true;
        }
    }
    return false;
}

bool is_possible(const Effect& e, const Subspace& m) { return is_possible(e.dual_subspace, m); }

bool is_p_distinguishing(const Measurement& meas, const std::vector<Subspace>& states,
                         const std::vector<std::string>& state_labels) {
    if (states.size() != state_labels.size()) {
        throw DomainError("is_p_distinguishing: one label per state required");
    }
    std::set<std::string> seen;
    for (const std::string& label : state_labels) {
        if (!meas.has_effect(label)) throw DomainError("unknown effect label '" + label + "'");
        if (!seen.insert(label).second) {
            throw DomainError("is_p_distinguishing: duplicate state label '" + label + "'");
        }
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (!is_possible(meas.effect(state_labels[i]), states[i])) return false;
        for (std::size_t j = 0; j < states.size(); ++j) {
            if (i == j) continue;
            if (is_possible(meas.effect(state_labels[j]), states[i])) return false;
        }
    }
    return true;
}

DiamondSilenceRecord diamond_not_p_distinguishable(const Subspace& a, const Subspace& b,
                                                   const Subspace& c) {
    if (!is_diamond(a, b, c)) {
        throw DomainError("diamond_not_p_distinguishable: inputs do not form a diamond");
    }
    DiamondSilenceRecord rec{annihilator(a), annihilator(b), annihilator(c),
                             meet(annihilator(a), annihilator(b)), false};
    rec.inclusion_holds = includes(rec.ann_c, rec.silent_on_both);
    return rec;
}

}  // namespace mqt
