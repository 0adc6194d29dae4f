#include "doctest.h"
#include "mqt/broadcast.hpp"

#include <set>

#include "mqt/json_io.hpp"
#include "test_helpers.hpp"

using namespace mqt;
using namespace mqt::testing;

namespace {

// Feasibility oracle by rank: a linear map sending the inputs to the outputs
// exists iff stacking the outputs under the inputs adds no new column
// dependence.
bool clone_feasible_by_rank(const std::vector<VectorF>& states, const VectorF& blank) {
    const Field& f = blank.field();
    const std::size_t dd = blank.dim() * blank.dim();
    MatrixF inputs(f, dd, states.size());
    MatrixF both(f, 2 * dd, states.size());
    for (std::size_t s = 0; s < states.size(); ++s) {
        const VectorF in = kron(states[s], blank);
        const VectorF out = kron(states[s], states[s]);
        for (std::size_t i = 0; i < dd; ++i) {
            inputs.set_raw(i, s, in.raw(i));
            both.set_raw(i, s, in.raw(i));
            both.set_raw(dd + i, s, out.raw(i));
        }
    }
    return rank(inputs) == rank(both);
}

// Exhaustive oracle over GF(2): try every linear map on the composite space.
bool clone_feasible_by_search(const std::vector<VectorF>& states, const VectorF& blank) {
    const Field& f = blank.field();
    REQUIRE(f.order() == 2);
    const std::size_t dd = blank.dim() * blank.dim();
    REQUIRE(dd == 4);
    std::vector<VectorF> ins, outs;
    for (const VectorF& s : states) {
        ins.push_back(kron(s, blank));
        outs.push_back(kron(s, s));
    }
    for (std::uint32_t bits = 0;; ++bits) {
        MatrixF t(f, 4, 4);
        for (std::size_t i = 0; i < 16; ++i) t.set_raw(i / 4, i % 4, (bits >> i) & 1);
        bool ok = true;
        for (std::size_t s = 0; s < states.size() && ok; ++s) {
            if (mat_vec(t, ins[s]) != outs[s]) ok = false;
        }
        if (ok) return true;
        if (bits == 0xffff) break;
    }
    return false;
}

}  // namespace

TEST_CASE("broadcast: cloning independent states is feasible") {
    const Field f2 = Field::parse("2");
    const VectorF blank = unit_vector(f2, 2, 0);
    const std::vector<VectorF> states{unit_vector(f2, 2, 0), unit_vector(f2, 2, 1)};
    const CloneFeasibility r = clone_feasibility(states, blank);
    REQUIRE(r.feasible());
    for (const VectorF& s : states) {
        CHECK(mat_vec(*r.cloner, kron(s, blank)) == kron(s, s));
    }

    const CloneFeasibility single = clone_feasibility({unit_vector(f2, 2, 0)}, blank);
    CHECK(single.feasible());
}

TEST_CASE("broadcast: the superposition defeats cloning") {
    const Field f2 = Field::parse("2");
    const VectorF blank = unit_vector(f2, 2, 0);
    const std::vector<VectorF> states{unit_vector(f2, 2, 0), unit_vector(f2, 2, 1),
                                      make_vector(f2, {1, 1})};
    const CloneFeasibility r = clone_feasibility(states, blank);
    REQUIRE(!r.feasible());
    REQUIRE(r.witness.has_value());
    const CloneWitness& w = *r.witness;
    CHECK(w.dependent_index == 2);
    CHECK(w.coefficients == std::vector<std::uint64_t>{1, 1, 0});
    // Linearity forces |00> + |11>, but cloning the superposition needs the
    // all-ones vector.
    CHECK(w.forced_output == make_vector(f2, {1, 0, 0, 1}));
    CHECK(w.desired_output == make_vector(f2, {1, 1, 1, 1}));
    CHECK(w.forced_output != w.desired_output);
}

TEST_CASE("broadcast: clone feasibility agrees with independent oracles") {
    const Field f2 = Field::parse("2");
    const VectorF blank2 = unit_vector(f2, 2, 0);
    const auto vecs2 = nonzero_vectors(f2, 2);
    for (const VectorF& a : vecs2) {
        for (const VectorF& b : vecs2) {
            for (const VectorF& c : vecs2) {
                const std::vector<VectorF> triple{a, b, c};
                const bool got = clone_feasibility(triple, blank2).feasible();
                CHECK(got == clone_feasible_by_rank(triple, blank2));
                CHECK(got == clone_feasible_by_search(triple, blank2));
            }
        }
    }

    const Field f3 = Field::parse("3");
    const VectorF blank3 = unit_vector(f3, 2, 0);
    const auto vecs3 = nonzero_vectors(f3, 2);
    for (const VectorF& a : vecs3) {
        for (const VectorF& b : vecs3) {
            for (const VectorF& c : vecs3) {
                const std::vector<VectorF> triple{a, b, c};
                CHECK(clone_feasibility(triple, blank3).feasible() ==
                      clone_feasible_by_rank(triple, blank3));
            }
        }
    }
}

TEST_CASE("broadcast: pairwise-non-parallel triples clone iff independent") {
    for (const char* spec : {"2", "3"}) {
        const Field f = Field::parse(spec);
        const VectorF blank = unit_vector(f, 2, 0);
        const auto vecs = nonzero_vectors(f, 2);
        for (const VectorF& a : vecs) {
            for (const VectorF& b : vecs) {
                for (const VectorF& c : vecs) {
                    if (parallel(a, b) || parallel(b, c) || parallel(a, c)) continue;
                    MatrixF m(f, 2, 3);
                    for (std::size_t i = 0; i < 2; ++i) {
                        m.set_raw(i, 0, a.raw(i));
                        m.set_raw(i, 1, b.raw(i));
                        m.set_raw(i, 2, c.raw(i));
                    }
                    const bool independent = rank(m) == 3;  // never in dimension 2
                    CHECK(!independent);
                    CHECK(!clone_feasibility({a, b, c}, blank).feasible());
                }
            }
        }
        // Independent pairs always clone.
        for (const VectorF& a : vecs) {
            for (const VectorF& b : vecs) {
                if (parallel(a, b)) continue;
                CHECK(clone_feasibility({a, b}, blank).feasible());
            }
        }
    }
}

TEST_CASE("broadcast: distinct parallel states clone only in characteristic 2") {
    const Field f3 = Field::parse("3");
    const VectorF blank = unit_vector(f3, 2, 0);
    const VectorF v = make_vector(f3, {1, 2});
    // psi and 2 psi: linearity forces 2 (psi tensor psi), cloning needs
    // 4 (psi tensor psi) = 1 (psi tensor psi).
    const CloneFeasibility r = clone_feasibility({v, vec_scale(v, 2)}, blank);
    CHECK(!r.feasible());
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->dependent_index == 1);
    // Duplicates are fine.
    CHECK(clone_feasibility({v, v}, blank).feasible());
}

TEST_CASE("broadcast: four-state dependence without a dependent triple") {
    const Field f2 = Field::parse("2");
    const VectorF blank = unit_vector(f2, 3, 0);
    const std::vector<VectorF> states{unit_vector(f2, 3, 0), unit_vector(f2, 3, 1),
                                      unit_vector(f2, 3, 2), make_vector(f2, {1, 1, 1})};
    const CloneFeasibility r = clone_feasibility(states, blank);
    REQUIRE(!r.feasible());
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->dependent_index == 3);
    CHECK(r.witness->coefficients == std::vector<std::uint64_t>{1, 1, 1, 0});
}

TEST_CASE("broadcast: clone preconditions") {
    const Field f2 = Field::parse("2");
    const VectorF blank = unit_vector(f2, 2, 0);
    CHECK_THROWS_AS(clone_feasibility({}, blank), DomainError);
    CHECK_THROWS_AS(clone_feasibility({VectorF(f2, 2)}, blank), DomainError);
    CHECK_THROWS_AS(clone_feasibility({unit_vector(f2, 2, 0)}, VectorF(f2, 2)), DomainError);
    CHECK_THROWS_AS(clone_feasibility({unit_vector(f2, 3, 0)}, blank), DomainError);
}

TEST_CASE("broadcast: pairwise broadcast examples") {
    const Field f2 = Field::parse("2");
    const Subspace a = span_of(f2, 2, {{1, 0}});
    const Subspace b = span_of(f2, 2, {{1, 1}});
    const auto [ma, mb] = pairwise_broadcast(a, b);
    CHECK(ma.state == span_of(f2, 4, {{1, 0, 0, 0}}));
    CHECK(mb.state == span_of(f2, 4, {{1, 1, 1, 1}}));
    CHECK(ma.source == a);
    CHECK(mb.source == b);

    // Equal inputs give the diagonal span of a common basis.
    const auto [mc, md] = pairwise_broadcast(a, a);
    CHECK(mc.state == md.state);
    CHECK(mc.state == span_of(f2, 4, {{1, 0, 0, 0}}));

    // A meet basis vector is reused by both outputs.
    const Subspace a3 = span_of(f2, 3, {{1, 0, 0}, {0, 1, 0}});
    const Subspace b3 = span_of(f2, 3, {{0, 1, 0}, {0, 0, 1}});
    const auto [m3a, m3b] = pairwise_broadcast(a3, b3);
    // e1 tensor e1 is index 4, e0 tensor e0 is index 0 in the 9-dim composite.
    VectorF d0(f2, 9);
    d0.set_raw(0, 1);
    VectorF d4(f2, 9);
    d4.set_raw(4, 1);
    CHECK(m3a.state == Subspace::span(f2, 9, {d0, d4}));
}

TEST_CASE("broadcast: any pair of subspaces can be broadcast") {
    struct Setting {
        const char* spec;
        std::size_t ambient;
    };
    for (const Setting s : {Setting{"2", 2}, Setting{"2", 3}, Setting{"3", 2}}) {
        const Field f = Field::parse(s.spec);
        const FactorShape shape = FactorShape::bipartite(s.ambient, s.ambient);
        const auto all = enumerate_subspaces(f, s.ambient);
        for (const Subspace& a : all) {
            if (a.is_null()) continue;
            for (const Subspace& b : all) {
                if (b.is_null()) continue;
                const auto [ma, mb] = pairwise_broadcast(a, b);
                CHECK(reduce(ma.state, shape, 1) == a);
                CHECK(reduce(ma.state, shape, 2) == a);
                CHECK(reduce(mb.state, shape, 1) == b);
                CHECK(reduce(mb.state, shape, 2) == b);
            }
        }
    }
}

TEST_CASE("broadcast: overlap broadcast through a shared subspace") {
    const Field f2 = Field::parse("2");
    const Subspace x = span_of(f2, 3, {{1, 0, 0}, {0, 1, 0}});
    const Subspace r = span_of(f2, 3, {{0, 1, 0}});
    const BroadcastCandidate cand = overlap_broadcast(x, r);
    CHECK(cand.state.dim() == 3);
    const FactorShape shape = FactorShape::bipartite(3, 3);
    CHECK(reduce(cand.state, shape, 1) == x);
    CHECK(reduce(cand.state, shape, 2) == x);

    // x = r degenerates to the full product.
    const BroadcastCandidate square = overlap_broadcast(r, r);
    CHECK(square.state == tensor_subspace(r, r));

    CHECK_THROWS_AS(overlap_broadcast(x, Subspace::null(f2, 3)), DomainError);
    const Subspace outside = span_of(f2, 3, {{0, 0, 1}});
    CHECK_THROWS_AS(overlap_broadcast(x, outside), DomainError);
}

TEST_CASE("broadcast: discriminator construction") {
    const Field f2 = Field::parse("2");
    const auto [a, b, c] = rank_one_triple(f2, 2);
    const DiamondTriple d = make_diamond(a, b, c);
    const Measurement disc = broadcast_discriminator(d);
    REQUIRE(disc.effects().size() == 4);
    // ann((A tensor A) v (B tensor B)) with A tensor A = <e0 of 4>,
    // B tensor B = <e3 of 4>.
    CHECK(disc.effect("C").dual_subspace == span_of(f2, 4, {{0, 1, 0, 0}, {0, 0, 1, 0}}));
    CHECK(disc.effect("0").dual_subspace == Subspace::full(f2, 4));

    const Subspace aa = tensor_subspace(a, a);
    const Subspace bb = tensor_subspace(b, b);
    const Subspace cc = tensor_subspace(c, c);
    CHECK(!is_possible(disc.effect("C"), aa));
    CHECK(!is_possible(disc.effect("C"), bb));
    CHECK(is_possible(disc.effect("C"), cc));

    const Field f3 = Field::parse("3");
    const auto [a3, b3, c3] = rank_one_triple(f3, 2);
    const Measurement disc3 = broadcast_discriminator(make_diamond(a3, b3, c3));
    CHECK(is_possible(disc3.effect("C"), tensor_subspace(c3, c3)));
    CHECK(!is_possible(disc3.effect("C"), tensor_subspace(a3, a3)));
}

TEST_CASE("broadcast: candidate enumeration") {
    const Field f2 = Field::parse("2");
    const Subspace line = span_of(f2, 2, {{1, 0}});
    const auto cands = enumerate_broadcast_candidates(line);
    REQUIRE(cands.size() == 1);
    CHECK(cands[0].state == tensor_subspace(line, line));

    CHECK(enumerate_broadcast_candidates(Subspace::null(f2, 2)).empty());

    const Subspace full = Subspace::full(f2, 2);
    const auto full_cands = enumerate_broadcast_candidates(full);
    std::set<std::string> names;
    for (const BroadcastCandidate& c : full_cands) names.insert(c.state.to_string());
    // The diagonal span and the entangled line both broadcast the full state.
    CHECK(names.count(span_of(f2, 4, {{1, 0, 0, 0}, {0, 0, 0, 1}}).to_string()) == 1);
    CHECK(names.count(span_of(f2, 4, {{1, 0, 0, 1}}).to_string()) == 1);
}

TEST_CASE("broadcast: candidates never escape the member product space") {
    // Unrestricted search over the whole composite lattice agrees with the
    // search inside x tensor x, so the restriction loses nothing.
    struct Setting {
        const char* spec;
    };
    for (const char* spec : {"2", "3"}) {
        const Field f = Field::parse(spec);
        const FactorShape shape = FactorShape::bipartite(2, 2);
        for (const Subspace& x : enumerate_subspaces(f, 2)) {
            if (x.is_null()) continue;
            std::vector<Subspace> unrestricted;
            for_each_subspace(f, 4, std::nullopt, Budget{}, [&](const Subspace& m) {
                if (m.is_null()) return;
                if (reduce(m, shape, 1) == x && reduce(m, shape, 2) == x) {
                    unrestricted.push_back(m);
                }
            });
            const auto restricted = enumerate_broadcast_candidates(x);
            REQUIRE(restricted.size() == unrestricted.size());
            const Subspace xx = tensor_subspace(x, x);
            for (std::size_t i = 0; i < restricted.size(); ++i) {
                CHECK(includes(xx, unrestricted[i]));
                CHECK(restricted[i].state == unrestricted[i]);
            }
        }
    }
}

TEST_CASE("broadcast: no-broadcast verdict for the rank-one triples") {
    for (const char* spec : {"2", "3"}) {
        const Field f = Field::parse(spec);
        const auto [a, b, c] = rank_one_triple(f, 2);
        const DiamondTriple d = make_diamond(a, b, c);
        const BroadcastCertificate cert = verify_no_broadcast(d);
        CHECK(cert.verdict == BroadcastCertificate::Verdict::kImpossible);
        CHECK(cert.candidate_count_a == 1);
        CHECK(cert.candidate_count_b == 1);
        CHECK(cert.candidate_count_c == 1);
        CHECK(cert.candidates_checked == 1);
        REQUIRE(cert.witnesses.size() == 3);

        // The forced candidates are the member squares, and the C square is
        // not inside the join of the other two.
        const Subspace aa = tensor_subspace(a, a);
        const Subspace bb = tensor_subspace(b, b);
        const Subspace cc = tensor_subspace(c, c);
        CHECK(!includes(join(aa, bb), cc));

        // Witnesses are independently re-checkable.
        const Measurement disc = broadcast_discriminator(d);
        for (const DiscriminatorWitness& w : cert.witnesses) {
            const Subspace& effect = disc.effect(w.role).dual_subspace;
            CHECK(includes(effect, Subspace::span(f, 4, {w.functional})));
            CHECK(includes(w.candidate, Subspace::span(f, 4, {w.hit_vector})));
            CHECK(dot(w.functional, w.hit_vector) == w.pairing);
            CHECK(w.pairing != 0);
        }
    }
}

TEST_CASE("broadcast: verifier rejects unsuitable diamonds") {
    const Field f2 = Field::parse("2");
    const Subspace a = span_of(f2, 3, {{1, 0, 0}, {0, 0, 1}});
    const Subspace b = span_of(f2, 3, {{0, 1, 0}, {0, 0, 1}});
    const Subspace c = span_of(f2, 3, {{1, 1, 0}, {0, 0, 1}});
    const DiamondTriple d = make_diamond(a, b, c);
    REQUIRE(!d.bottom.is_null());
    CHECK_THROWS_AS(verify_no_broadcast(d), DomainError);
    try {
        verify_no_broadcast(d);
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("overlap_broadcast") != std::string::npos);
    }
    // Tampered records are rejected.
    DiamondTriple bad = d;
    bad.bottom = Subspace::null(f2, 3);
    CHECK_THROWS_AS(verify_no_broadcast(bad), DomainError);
}

TEST_CASE("broadcast: slicing a diamond with nonzero bottom") {
    const Field f2 = Field::parse("2");
    const Subspace a = span_of(f2, 3, {{1, 0, 0}, {0, 0, 1}});
    const Subspace b = span_of(f2, 3, {{0, 1, 0}, {0, 0, 1}});
    const Subspace c = span_of(f2, 3, {{1, 1, 0}, {0, 0, 1}});
    const DiamondTriple d = make_diamond(a, b, c);
    const DiamondTriple sliced = slice_diamond(d);
    CHECK(sliced.a == span_of(f2, 3, {{1, 0, 0}}));
    CHECK(sliced.b == span_of(f2, 3, {{0, 1, 0}}));
    CHECK(sliced.c == span_of(f2, 3, {{1, 1, 0}}));
    CHECK(sliced.bottom.is_null());

    const BroadcastCertificate cert = verify_no_broadcast(sliced);
    CHECK(cert.verdict == BroadcastCertificate::Verdict::kImpossible);

    CHECK_THROWS_AS(slice_diamond(sliced), DomainError);
}

TEST_CASE("broadcast: slices of every nonzero-bottom diamond verify") {
    const Field f2 = Field::parse("2");
    for (const DiamondTriple& d : find_diamonds(f2, 3, false)) {
        if (d.bottom.is_null()) continue;
        const DiamondTriple sliced = slice_diamond(d);
        CHECK(sliced.bottom.is_null());
        CHECK(sliced.a.dim() == d.a.dim() - d.bottom.dim());
        const BroadcastCertificate cert = verify_no_broadcast(sliced);
        CHECK(cert.verdict == BroadcastCertificate::Verdict::kImpossible);
    }
}

TEST_CASE("broadcast: overlap outputs defeat the discriminator") {
    // With a shared nonzero bottom the three outputs all contain
    // bottom tensor bottom, so the discriminator's own effects never fire:
    // exactly why the no-broadcast argument needs a null bottom.
    const Field f2 = Field::parse("2");
    for (const DiamondTriple& d : find_diamonds(f2, 3, false)) {
        if (d.bottom.is_null()) continue;
        const BroadcastCandidate ma = overlap_broadcast(d.a, d.bottom);
        const BroadcastCandidate mb = overlap_broadcast(d.b, d.bottom);
        const BroadcastCandidate mc = overlap_broadcast(d.c, d.bottom);
        const FactorShape shape = FactorShape::bipartite(3, 3);
        for (const BroadcastCandidate* cand : {&ma, &mb, &mc}) {
            CHECK(reduce(cand->state, shape, 1) == cand->source);
            CHECK(reduce(cand->state, shape, 2) == cand->source);
        }
        const Measurement disc = broadcast_discriminator(d);
        CHECK(!is_p_distinguishing(disc, {ma.state, mb.state, mc.state}, {"A", "B", "C"}));
    }
}

TEST_CASE("broadcast: worker count does not change the certificate") {
    const Field f2 = Field::parse("2");
    const auto diamonds = find_diamonds(f2, 4, true, 2);
    REQUIRE(!diamonds.empty());
    const BroadcastCertificate one = verify_no_broadcast(diamonds[0], Budget{}, 1);
    const BroadcastCertificate four = verify_no_broadcast(diamonds[0], Budget{}, 4);
    CHECK(certificate_to_json(one).dump() == certificate_to_json(four).dump());
}

TEST_CASE("broadcast: triple budget is enforced") {
    const Field f2 = Field::parse("2");
    const auto diamonds = find_diamonds(f2, 4, true, 2);
    REQUIRE(!diamonds.empty());
    // 51^3 candidate triples exceed a tiny budget, but the budget must be
    // generous enough to let the per-state enumeration finish.
    CHECK_THROWS_AS(verify_no_broadcast(diamonds[0], Budget{1000}), BudgetError);
}
