#include "mqt/json_io.hpp"

namespace mqt {

namespace {

std::int64_t expect_integer(const Json& j, const char* what) {
    if (!j.is_number_integer()) {
        throw DomainError(std::string("expected an integer ") + what + ", got " + j.dump());
    }
    return j.get<std::int64_t>();
}

}  // namespace

Json entry_to_json(const Field& field, std::uint64_t value) {
    if (field.degree() == 1) return Json(value);
    Json coeffs = Json::array();
    for (std::uint64_t c : field.coefficients(value)) coeffs.push_back(c);
    return coeffs;
}

std::uint64_t entry_from_json(const Field& field, const Json& j) {
    if (j.is_array()) {
        std::vector<std::int64_t> coeffs;
        for (const Json& c : j) coeffs.push_back(expect_integer(c, "coefficient"));
        if (coeffs.size() != field.degree()) {
            throw DomainError("entry has " + std::to_string(coeffs.size()) +
                              " coefficients; field degree is " + std::to_string(field.degree()));
        }
        return field.encode(coeffs);
    }
    if (field.degree() != 1) {
        throw DomainError("extension-field entries must be coefficient arrays");
    }
    const std::int64_t v = expect_integer(j, "entry");
    const auto p = static_cast<std::int64_t>(field.characteristic());
    return static_cast<std::uint64_t>(((v % p) + p) % p);
}

Json vector_to_json(const VectorF& v) {
    Json out = Json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(entry_to_json(v.field(), v.raw(i)));
    return out;
}

VectorF vector_from_json(const Field& field, const Json& j) {
    if (!j.is_array() || j.empty()) throw DomainError("vector JSON must be a nonempty array");
    std::vector<std::uint64_t> entries;
    for (const Json& e : j) entries.push_back(entry_from_json(field, e));
    return VectorF(field, std::move(entries));
}

Json matrix_to_json(const MatrixF& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
    return out;
}

MatrixF matrix_from_json(const Field& field, const Json& j) {
    if (!j.is_array()) throw DomainError("matrix JSON must be an array of rows");
    std::vector<VectorF> rows;
    for (const Json& r : j) rows.push_back(vector_from_json(field, r));
    if (rows.empty()) throw DomainError("matrix JSON needs at least one row");
    return MatrixF::from_rows(field, rows.front().dim(), rows);
}

Json subspace_to_json(const Subspace& s) {
    Json out;
    out["ambient"] = s.ambient();
    out["field"] = s.field().to_string();
    out["basis"] = matrix_to_json(s.basis());
    return out;
}

LoadedSubspace subspace_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ambient") || !j.contains("field") || !j.contains("basis")) {
        throw DomainError("subspace JSON needs \"ambient\", \"field\" and \"basis\"");
    }
    const Field field = Field::parse(j.at("field").get<std::string>());
    const auto ambient = j.at("ambient").get<std::size_t>();
    if (ambient < 1) throw DomainError("subspace ambient dimension must be at least 1");
    const Json& basis = j.at("basis");
    if (!basis.is_array()) throw DomainError("subspace basis must be an array of rows");
    if (basis.empty()) {
        return LoadedSubspace{Subspace::null(field, ambient), false};
    }
    std::vector<VectorF> rows;
    for (const Json& r : basis) {
        rows.push_back(vector_from_json(field, r));
        if (rows.back().dim() != ambient) {
            throw DomainError("subspace basis row length differs from ambient dimension");
        }
    }
    const MatrixF given = MatrixF::from_rows(field, ambient, rows);
    Subspace canonical = Subspace::span_rows(given);
    const bool recanonicalized = canonical.basis() != given;
    return LoadedSubspace{std::move(canonical), recanonicalized};
}

Json measurement_to_json(const Measurement& m) {
    Json effects = Json::array();
    for (const Effect& e : m.effects()) {
        Json je;
        je["label"] = e.label;
        je["dual_basis"] = matrix_to_json(e.dual_subspace.basis());
        effects.push_back(std::move(je));
    }
    return Json{{"effects", std::move(effects)}};
}

Measurement measurement_from_json(const Field& field, std::size_t ambient, const Json& j) {
    if (!j.is_object() || !j.contains("effects") || !j.at("effects").is_array()) {
        throw DomainError("measurement JSON needs an \"effects\" array");
    }
    std::vector<Effect> effects;
    for (const Json& je : j.at("effects")) {
        if (!je.contains("label") || !je.contains("dual_basis")) {
            throw DomainError("each effect needs \"label\" and \"dual_basis\"");
        }
        const Json& basis = je.at("dual_basis");
        if (!basis.is_array()) throw DomainError("effect dual_basis must be an array of rows");
        Subspace dual = Subspace::null(field, ambient);
        if (!basis.empty()) {
            std::vector<VectorF> rows;
            for (const Json& r : basis) rows.push_back(vector_from_json(field, r));
            dual = Subspace::span(field, ambient, rows);
        }
        effects.push_back(Effect{je.at("label").get<std::string>(), std::move(dual)});
    }
    return Measurement::make(std::move(effects));
}

Json diamond_to_json(const DiamondTriple& d) {
    Json out;
    out["a"] = subspace_to_json(d.a);
    out["b"] = subspace_to_json(d.b);
    out["c"] = subspace_to_json(d.c);
    out["top"] = subspace_to_json(d.top);
    out["bottom"] = subspace_to_json(d.bottom);
    return out;
}

Json clone_feasibility_to_json(const Field& field, const CloneFeasibility& r) {
    Json out;
    out["feasible"] = r.feasible();
    if (r.cloner) out["cloner"] = matrix_to_json(*r.cloner);
    if (r.witness) {
        Json w;
        w["dependent_index"] = r.witness->dependent_index;
        Json coeffs = Json::array();
        for (std::uint64_t c : r.witness->coefficients) coeffs.push_back(entry_to_json(field, c));
        w["coefficients"] = std::move(coeffs);
        w["forced_output"] = vector_to_json(r.witness->forced_output);
        w["desired_output"] = vector_to_json(r.witness->desired_output);
        out["witness"] = std::move(w);
    }
    return out;
}

Json certificate_to_json(const BroadcastCertificate& cert) {
    Json out;
    out["verdict"] =
        cert.verdict == BroadcastCertificate::Verdict::kImpossible ? "impossible" : "possible";
    out["field"] = cert.field.to_string();
    out["ambient"] = cert.ambient;
    out["diamond"] = diamond_to_json(cert.diamond);
    out["candidate_counts"] = Json{{"A", cert.candidate_count_a},
                                   {"B", cert.candidate_count_b},
                                   {"C", cert.candidate_count_c}};
    out["candidates_checked"] = cert.candidates_checked;
    Json witnesses = Json::array();
    for (const DiscriminatorWitness& w : cert.witnesses) {
        Json jw;
        jw["role"] = w.role;
        jw["candidate_index"] = w.candidate_index;
        jw["candidate"] = subspace_to_json(w.candidate);
        jw["functional"] = vector_to_json(w.functional);
        jw["hit_vector"] = vector_to_json(w.hit_vector);
        jw["pairing"] = entry_to_json(cert.field, w.pairing);
        witnesses.push_back(std::move(jw));
    }
    out["witnesses"] = std::move(witnesses);
    if (cert.surviving) {
        out["surviving_triple"] = Json{{"A", cert.surviving->index_a},
                                       {"B", cert.surviving->index_b},
                                       {"C", cert.surviving->index_c}};
    }
    return out;
}

}  // namespace mqt
