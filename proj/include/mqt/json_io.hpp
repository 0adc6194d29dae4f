#pragma once

#include <string>

#include "json.hpp"
#include "mqt/broadcast.hpp"
#include "mqt/measurement.hpp"
#include "mqt/subspace.hpp"

namespace mqt {

/// Insertion-ordered JSON so that serialized artifacts are byte-reproducible.
using Json = nlohmann::ordered_json;

// Entry encoding: a single integer for prime fields, a coefficient array
// (constant term first) for extension fields.
Json entry_to_json(const Field& field, std::uint64_t value);
std::uint64_t entry_from_json(const Field& field, const Json& j);

Json vector_to_json(const VectorF& v);
VectorF vector_from_json(const Field& field, const Json& j);

Json matrix_to_json(const MatrixF& m);
MatrixF matrix_from_json(const Field& field, const Json& j);

/// {"ambient": n, "field": "<spec>", "basis": [[...], ...]} with the basis in RREF.
Json subspace_to_json(const Subspace& s);

struct LoadedSubspace {
    Subspace subspace;
    /// True when the stored basis was not already the canonical RREF; the
    /// loader re-canonicalizes instead of rejecting, and callers may warn.
    bool recanonicalized;
};
LoadedSubspace subspace_from_json(const Json& j);

/// {"effects": [{"label": ..., "dual_basis": [[...], ...]}]}.
/// Completeness is enforced; the error names the dimension the join reached.
Json measurement_to_json(const Measurement& m);
Measurement measurement_from_json(const Field& field, std::size_t ambient, const Json& j);

Json diamond_to_json(const DiamondTriple& d);

Json clone_feasibility_to_json(const Field& field, const CloneFeasibility& r);

/// Deterministically ordered certificate; identical runs serialize to
/// identical bytes.
Json certificate_to_json(const BroadcastCertificate& cert);

}  // namespace mqt
