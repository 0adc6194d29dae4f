#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "mqt/broadcast.hpp"
#include "mqt/json_io.hpp"

namespace mqt::cli {

namespace {

struct RunConfig {
    std::string field_spec = "2";
    std::size_t ambient = 2;
    std::uint64_t budget_cap = kDefaultEnumerationBudget;
    std::string format = "text";
    std::uint64_t seed = 0;
    unsigned workers = 0;  // 0 = all available cores
    std::string out_path;

    Field field() const { return Field::parse(field_spec); }
    Budget budget() const { return Budget{budget_cap}; }
    unsigned effective_workers() const {
        if (workers != 0) return workers;
        const unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : hw;
    }
    bool json() const { return format == "json"; }
};

Json load_json_arg(const std::string& arg) {
    std::string text;
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
        text = arg;
    } else {
        std::ifstream in(arg);
        if (!in) throw DomainError("cannot open file '" + arg + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        // nlohmann reports the byte offset of the failure.
        throw DomainError("JSON parse failure in '" + arg + "': " + e.what());
    }
}

Subspace subspace_arg(const RunConfig& cfg, const std::string& arg, std::ostream& err) {
    const LoadedSubspace loaded = subspace_from_json(load_json_arg(arg));
    if (loaded.subspace.field() != cfg.field()) {
        throw DomainError("subspace in '" + arg + "' is over GF(" +
                          loaded.subspace.field().to_string() + "), but --field requests GF(" +
                          cfg.field_spec + ")");
    }
    if (loaded.recanonicalized) {
        err << "warning: basis in '" << arg << "' was not in reduced row echelon form; "
            << "re-canonicalized\n";
    }
    return loaded.subspace;
}

void write_artifact(const RunConfig& cfg, std::ostream& out, const Json& artifact) {
    if (!cfg.out_path.empty()) {
        std::ofstream file(cfg.out_path);
        if (!file) throw DomainError("cannot write to '" + cfg.out_path + "'");
        file << artifact.dump(2) << '\n';
        return;
    }
    out << artifact.dump(2) << '\n';
}

std::string dim_string(const Subspace& s) { return "(dim " + std::to_string(s.dim()) + ")"; }

// The rank-one non-distributive triple: A = <e0>, B = <e1>, C = <e0 + e1>.
std::array<Subspace, 3> standard_triple(const Field& f, std::size_t ambient) {
    VectorF e0(f, ambient);
    e0.set_raw(0, 1);
    VectorF e1(f, ambient);
    e1.set_raw(1, 1);
    VectorF e01(f, ambient);
    e01.set_raw(0, 1);
    e01.set_raw(1, 1);
    return {Subspace::span(f, ambient, {e0}), Subspace::span(f, ambient, {e1}),
            Subspace::span(f, ambient, {e01})};
}

int cmd_demo_distributivity(const RunConfig& cfg, std::ostream& out) {
    if (cfg.ambient < 2) throw DomainError("demo-distributivity needs --ambient >= 2");
    const Field f = cfg.field();
    const auto [a, b, c] = standard_triple(f, cfg.ambient);
    const Subspace lhs = join(c, meet(a, b));
    const Subspace rhs = meet(join(c, a), join(c, b));
    const bool distributive = lhs == rhs;

    if (cfg.json()) {
        Json j;
        j["field"] = f.to_string();
        j["ambient"] = cfg.ambient;
        j["a"] = subspace_to_json(a);
        j["b"] = subspace_to_json(b);
        j["c"] = subspace_to_json(c);
        j["join_with_meet"] = subspace_to_json(lhs);       // C v (A ^ B)
        j["meet_of_joins"] = subspace_to_json(rhs);        // (C v A) ^ (C v B)
        j["distributive"] = distributive;
        write_artifact(cfg, out, j);
    } else {
        out << "A = " << a.to_string() << "\n";
        out << "B = " << b.to_string() << "\n";
        out << "C = " << c.to_string() << "\n";
        const std::string lhs_name = lhs == c ? "C" : lhs.to_string();
        const std::string rhs_name = rhs.is_full() ? "V" : rhs.to_string();
        out << "C∨(A∧B) = " << lhs_name << " " << dim_string(lhs) << "; "
            << "(C∨A)∧(C∨B) = " << rhs_name << " " << dim_string(rhs) << "; "
            << "distributivity " << (distributive ? "holds" : "FAILS") << "\n";
    }
    return distributive ? 3 : 0;  // the lattice law is expected to fail
}

int cmd_find_diamonds(const RunConfig& cfg, std::ostream& out, std::optional<std::size_t> dim,
                      bool null_bottom_only) {
    const Field f = cfg.field();
    const auto diamonds = find_diamonds(f, cfg.ambient, null_bottom_only, dim, cfg.budget());
    if (cfg.json()) {
        Json j;
        j["field"] = f.to_string();
        j["ambient"] = cfg.ambient;
        j["null_bottom_only"] = null_bottom_only;
        j["count"] = diamonds.size();
        Json list = Json::array();
        for (const DiamondTriple& d : diamonds) list.push_back(diamond_to_json(d));
        j["diamonds"] = std::move(list);
        write_artifact(cfg, out, j);
    } else {
        for (std::size_t i = 0; i < diamonds.size(); ++i) {
            const DiamondTriple& d = diamonds[i];
            out << "#" << i << ": A=" << d.a.to_string() << " B=" << d.b.to_string()
                << " C=" << d.c.to_string() << " S=" << d.top.to_string() << " "
                << dim_string(d.top) << " R=" << d.bottom.to_string() << "\n";
        }
        out << diamonds.size() << " diamond triple(s) over GF(" << f.to_string() << ") ambient "
            << cfg.ambient;
        if (dim) out << " with member dimension " << *dim;
        if (null_bottom_only) out << " and null bottom";
        out << "\n";
    }
    return 0;
}

int cmd_no_broadcast_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err,
                            const std::string& a_arg, const std::string& b_arg,
                            const std::string& c_arg) {
    const Field f = cfg.field();
    Subspace a = a_arg.empty() ? standard_triple(f, cfg.ambient)[0] : subspace_arg(cfg, a_arg, err);
    Subspace b = b_arg.empty() ? standard_triple(f, cfg.ambient)[1] : subspace_arg(cfg, b_arg, err);
    Subspace c = c_arg.empty() ? standard_triple(f, cfg.ambient)[2] : subspace_arg(cfg, c_arg, err);
    const auto shape = is_diamond(a, b, c);
    if (!shape) throw DomainError("the selected subspaces do not form a diamond");
    const DiamondTriple d{std::move(a), std::move(b), std::move(c), shape->first, shape->second};
    const BroadcastCertificate cert = verify_no_broadcast(d, cfg.budget(), cfg.effective_workers());
    const Json artifact = certificate_to_json(cert);
    const bool impossible = cert.verdict == BroadcastCertificate::Verdict::kImpossible;

    if (cfg.json()) {
        write_artifact(cfg, out, artifact);
    } else {
        if (!cfg.out_path.empty()) write_artifact(cfg, out, artifact);
        out << "diamond: A=" << d.a.to_string() << " B=" << d.b.to_string()
            << " C=" << d.c.to_string() << "\n";
        out << "candidates: " << cert.candidate_count_a << " x " << cert.candidate_count_b
            << " x " << cert.candidate_count_c << " = " << cert.candidates_checked
            << " triples checked\n";
        out << "verdict: " << (impossible ? "impossible" : "POSSIBLE (theorem falsified!)")
            << "\n";
    }
    return impossible ? 0 : 3;
}

int cmd_broadcast_pair(const RunConfig& cfg, std::ostream& out, std::ostream& err,
                       const std::string& a_arg, const std::string& b_arg) {
    const Subspace a = subspace_arg(cfg, a_arg, err);
    const Subspace b = subspace_arg(cfg, b_arg, err);
    const auto [ma, mb] = pairwise_broadcast(a, b);
    const FactorShape shape = FactorShape::bipartite(a.ambient(), a.ambient());
    const bool ok = reduce(ma.state, shape, 1) == a && reduce(ma.state, shape, 2) == a &&
                    reduce(mb.state, shape, 1) == b && reduce(mb.state, shape, 2) == b;
    if (cfg.json()) {
        Json j;
        j["a"] = subspace_to_json(a);
        j["b"] = subspace_to_json(b);
        j["broadcast_a"] = subspace_to_json(ma.state);
        j["broadcast_b"] = subspace_to_json(mb.state);
        j["reduction_check"] = ok ? "PASS" : "FAIL";
        write_artifact(cfg, out, j);
    } else {
        out << "M_A = " << ma.state.to_string() << " " << dim_string(ma.state) << "\n";
        out << "M_B = " << mb.state.to_string() << " " << dim_string(mb.state) << "\n";
        out << "reduction check: " << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? 0 : 3;
}

int cmd_reduce(const RunConfig& cfg, std::ostream& out, std::ostream& err,
               const std::string& input_arg, const std::string& shape_arg, std::size_t keep) {
    const Subspace m = subspace_arg(cfg, input_arg, err);
    const auto x = shape_arg.find('x');
    if (x == std::string::npos) throw DomainError("--shape must look like d1xd2");
    FactorShape shape;
    try {
        shape = FactorShape::bipartite(std::stoul(shape_arg.substr(0, x)),
                                       std::stoul(shape_arg.substr(x + 1)));
    } catch (const std::exception&) {
        throw DomainError("--shape must look like d1xd2");
    }
    const Subspace reduced = reduce(m, shape, keep);
    if (cfg.json()) {
        write_artifact(cfg, out, subspace_to_json(reduced));
    } else {
        if (!cfg.out_path.empty()) write_artifact(cfg, out, subspace_to_json(reduced));
        out << "reduce(M, keep=" << keep << ") = " << reduced.to_string() << " "
            << dim_string(reduced) << "\n";
    }
    return 0;
}

int cmd_clone_check(const RunConfig& cfg, std::ostream& out, const std::string& states_arg,
                    const std::string& blank_arg) {
    const Field f = cfg.field();
    const Json jstates = load_json_arg(states_arg);
    if (!jstates.is_array() || jstates.empty()) {
        throw DomainError("--states must be a JSON array of vectors");
    }
    std::vector<VectorF> states;
    for (const Json& js : jstates) states.push_back(vector_from_json(f, js));
    VectorF blank(f, states.front().dim());
    if (blank_arg.empty()) {
        blank.set_raw(0, 1);  // default blank: e0
    } else {
        blank = vector_from_json(f, load_json_arg(blank_arg));
    }
    const CloneFeasibility result = clone_feasibility(states, blank);
    if (cfg.json()) {
        write_artifact(cfg, out, clone_feasibility_to_json(f, result));
    } else {
        if (result.feasible()) {
            out << "feasible: a linear map clones all " << states.size() << " state(s)\n";
        } else {
            const CloneWitness& w = *result.witness;
            out << "infeasible: state #" << w.dependent_index << " = ";
            bool first = true;
            for (std::size_t s = 0; s < w.coefficients.size(); ++s) {
                if (w.coefficients[s] == 0) continue;
                if (!first) out << " + ";
                first = false;
                out << f.format(w.coefficients[s]) << "·(state #" << s << ")";
            }
            out << "\n  linearity forces output " << w.forced_output.to_string() << "\n";
            out << "  cloning needs output    " << w.desired_output.to_string() << "\n";
        }
    }
    return 0;
}

// ---- selftest ----------------------------------------------------------

struct SelftestGroup {
    std::string name;
    std::uint64_t checks = 0;
    bool ok = true;
    std::string detail;

    void check(bool condition, const char* what) {
        ++checks;
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

MatrixF random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    MatrixF m(f, rows, cols);
    std::uniform_int_distribution<std::uint64_t> dist(0, f.order() - 1);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.set_raw(r, c, dist(rng));
    }
    return m;
}

// Unit lower-triangular times unit upper-triangular with random diagonal
// scaling: invertible by construction.
MatrixF random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, f.order() - 1);
    std::uniform_int_distribution<std::uint64_t> nonzero(1, f.order() - 1);
    MatrixF lower = MatrixF::identity(f, n);
    MatrixF upper = MatrixF::identity(f, n);
    for (std::size_t r = 0; r < n; ++r) {
        upper.set_raw(r, r, nonzero(rng));
        for (std::size_t c = 0; c < r; ++c) lower.set_raw(r, c, dist(rng));
        for (std::size_t c = r + 1; c < n; ++c) upper.set_raw(r, c, dist(rng));
    }
    return mat_mul(lower, upper);
}

void selftest_field_axioms(SelftestGroup& g) {
    for (const char* spec : {"2", "3", "2^2", "5", "7", "2^3", "3^2"}) {
        const Field f = Field::parse(spec);
        const std::uint64_t q = f.order();
        for (std::uint64_t a = 0; a < q; ++a) {
            g.check(f.pow(a, q) == a, "Frobenius fixed point a^q = a");
            if (a != 0) g.check(f.mul(a, f.inv(a)) == 1, "multiplicative inverse");
            for (std::uint64_t b = 0; b < q; ++b) {
                g.check(f.add(a, b) == f.add(b, a), "commutative addition");
                g.check(f.mul(a, b) == f.mul(b, a), "commutative multiplication");
                for (std::uint64_t c = 0; c < q; ++c) {
                    g.check(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)), "associative addition");
                    g.check(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)),
                            "associative multiplication");
                    g.check(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)),
                            "distributivity");
                }
            }
        }
    }
}

void selftest_linear_algebra(SelftestGroup& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (const char* spec : {"2", "3", "2^2"}) {
        const Field f = Field::parse(spec);
        for (int i = 0; i < 60; ++i) {
            const std::size_t rows = 1 + static_cast<std::size_t>(rng() % 4);
            const std::size_t cols = 1 + static_cast<std::size_t>(rng() % 4);
            const MatrixF m = random_matrix(f, rows, cols, rng);
            const auto r = rref(m);
            g.check(rref(r.matrix).matrix == r.matrix, "rref idempotent");
            const MatrixF p = random_invertible(f, rows, rng);
            g.check(rref(mat_mul(p, m)).matrix == r.matrix, "rref basis independent");
            const MatrixF k = right_kernel(m);
            g.check(r.pivot_columns.size() + k.rows() == cols, "rank plus nullity");
            const MatrixF b_mat = random_matrix(f, rows, 1, rng);
            VectorF target(f, rows);
            // Solve against a right-hand side known to be consistent.
            const MatrixF x_true = random_matrix(f, cols, 1, rng);
            const MatrixF mx = mat_mul(m, x_true);
            for (std::size_t t = 0; t < rows; ++t) target.set_raw(t, mx.raw(t, 0));
            const auto x = solve(m, target);
            g.check(x.has_value(), "consistent system solvable");
            if (x) {
                const VectorF mxv = mat_vec(m, *x);
                g.check(mxv == target, "solve returns an exact solution");
            }
            const MatrixF a2 = random_matrix(f, 2, 2, rng);
            const MatrixF b2 = random_matrix(f, 2, 2, rng);
            g.check(rank(kron(a2, b2)) == rank(a2) * rank(b2), "kron rank multiplies");
            (void)b_mat;
        }
    }
}

void selftest_lattice_laws(SelftestGroup& g) {
    struct Case {
        const char* spec;
        std::size_t ambient;
    };
    for (const Case cs : {Case{"2", 3}, Case{"3", 2}}) {
        const Field f = Field::parse(cs.spec);
        const auto all = enumerate_subspaces(f, cs.ambient);
        for (const Subspace& a : all) {
            for (const Subspace& b : all) {
                g.check(join(a, b).dim() + meet(a, b).dim() == a.dim() + b.dim(),
                        "dimension formula");
                g.check(annihilator(join(a, b)) == meet(annihilator(a), annihilator(b)),
                        "annihilator of join");
                if (!includes(b, a)) continue;
                for (const Subspace& c : all) {
                    g.check(join(a, meet(c, b)) == meet(join(a, c), b), "modular law");
                }
            }
            g.check(annihilator(annihilator(a)) == a, "double annihilator");
        }
    }
    // Census against the subspace counts of small spaces.
    g.check(enumerate_subspaces(Field::parse("2"), 2).size() == 5, "census GF(2)^2");
    g.check(enumerate_subspaces(Field::parse("3"), 2).size() == 6, "census GF(3)^2");
    g.check(enumerate_subspaces(Field::parse("2"), 3).size() == 16, "census GF(2)^3");
    g.check(enumerate_subspaces(Field::parse("2"), 4, 2).size() == 35, "census GF(2)^4 dim 2");
    // The rank-one triple breaks distributivity.
    const Field f2 = Field::parse("2");
    const auto [a, b, c] = standard_triple(f2, 2);
    g.check(join(c, meet(a, b)) == c, "join with null meet");
    g.check(meet(join(c, a), join(c, b)).is_full(), "meet of joins is everything");
}

void selftest_mixture_law(SelftestGroup& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Field f = Field::parse("2");
    const auto all = enumerate_subspaces(f, 2);
    for (int i = 0; i < 100; ++i) {
        const MatrixF t = random_matrix(f, 2, 2, rng);
        for (const Subspace& a : all) {
            for (const Subspace& b : all) {
                g.check(map_subspace(t, join(a, b)) == join(map_subspace(t, a), map_subspace(t, b)),
                        "channels respect mixtures");
            }
        }
    }
    const auto composite = enumerate_subspaces(f, 4);
    const FactorShape shape = FactorShape::bipartite(2, 2);
    for (std::size_t keep = 1; keep <= 2; ++keep) {
        for (const Subspace& a : composite) {
            for (const Subspace& b : composite) {
                g.check(reduce(join(a, b), shape, keep) ==
                            join(reduce(a, shape, keep), reduce(b, shape, keep)),
                        "reduction respects mixtures");
            }
        }
    }
}

void selftest_broadcast(SelftestGroup& g) {
    const Field f = Field::parse("2");
    const auto [a, b, c] = standard_triple(f, 2);
    const auto shape = is_diamond(a, b, c);
    g.check(shape.has_value() && shape->second.is_null(), "rank-one triple is a null diamond");
    if (shape) {
        const DiamondTriple d{a, b, c, shape->first, shape->second};
        const auto cert = verify_no_broadcast(d, Budget{}, 1);
        g.check(cert.verdict == BroadcastCertificate::Verdict::kImpossible,
                "null-bottom diamond cannot broadcast");
    }
    const auto all = enumerate_subspaces(f, 2);
    const FactorShape bishape = FactorShape::bipartite(2, 2);
    for (const Subspace& x : all) {
        for (const Subspace& y : all) {
            if (x.is_null() || y.is_null()) continue;
            const auto [mx, my] = pairwise_broadcast(x, y);
            g.check(reduce(mx.state, bishape, 1) == x && reduce(mx.state, bishape, 2) == x,
                    "pair broadcast output reduces to first input");
            g.check(reduce(my.state, bishape, 1) == y && reduce(my.state, bishape, 2) == y,
                    "pair broadcast output reduces to second input");
        }
    }
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
    std::vector<SelftestGroup> groups;
    {
        SelftestGroup g;
        g.name = "field-axioms";
        selftest_field_axioms(g);
        groups.push_back(std::move(g));
    }
    {
        SelftestGroup g;
        g.name = "linear-algebra";
        selftest_linear_algebra(g, cfg.seed);
        groups.push_back(std::move(g));
    }
    {
        SelftestGroup g;
        g.name = "lattice-laws";
        selftest_lattice_laws(g);
        groups.push_back(std::move(g));
    }
    {
        SelftestGroup g;
        g.name = "mixture-law";
        selftest_mixture_law(g, cfg.seed + 1);
        groups.push_back(std::move(g));
    }
    {
        SelftestGroup g;
        g.name = "broadcast";
        selftest_broadcast(g);
        groups.push_back(std::move(g));
    }
    bool all_ok = true;
    for (const SelftestGroup& g : groups) {
        if (g.ok) {
            out << "selftest " << g.name << ": PASS (" << g.checks << " checks)\n";
        } else {
            out << "selftest " << g.name << ": FAIL (" << g.detail << ")\n";
            all_ok = false;
        }
    }
    out << "selftest: " << (all_ok ? "PASS" : "FAIL") << "\n";
    return all_ok ? 0 : 3;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact toolkit for modal quantum theory over finite fields"};
    app.name("modalq");

    RunConfig cfg;
    app.add_option("--field", cfg.field_spec,
                   "Field spec: \"2\", \"3\", \"2^2:1,1,1\" (built-ins: 2^2, 2^3, 3^2)")
        ->capture_default_str();
    app.add_option("--ambient", cfg.ambient, "Ambient dimension of the state space")
        ->capture_default_str();
    app.add_option("--budget", cfg.budget_cap, "Enumeration budget in vectors")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for randomized property suites")
        ->capture_default_str();
    app.add_option("--workers", cfg.workers, "Worker threads for the verifier (0 = all cores)")
        ->capture_default_str();
    app.add_option("--out", cfg.out_path, "Write the JSON artifact to this file");

    auto* demo = app.add_subcommand("demo-distributivity",
                                    "Show the rank-one triple breaking the distributive law");

    auto* find = app.add_subcommand("find-diamonds", "List all diamond sublattices");
    std::size_t dim_value = 0;
    bool has_dim = false;
    bool null_bottom_only = false;
    find->add_option("--dim", dim_value, "Restrict members to one dimension")
        ->each([&has_dim](const std::string&) { has_dim = true; });
    find->add_flag("--null-bottom-only", null_bottom_only, "Only diamonds with null bottom");

    auto* verify = app.add_subcommand(
        "no-broadcast-verify", "Exhaustively verify no-broadcasting for a null-bottom diamond");
    std::string a_arg, b_arg, c_arg;
    verify->add_option("--a", a_arg, "Subspace A (JSON file or inline JSON)");
    verify->add_option("--b", b_arg, "Subspace B (JSON file or inline JSON)");
    verify->add_option("--c", c_arg, "Subspace C (JSON file or inline JSON)");

    auto* pair = app.add_subcommand("broadcast-pair", "Broadcast a pair of mixed states");
    std::string pa_arg, pb_arg;
    pair->add_option("--a", pa_arg, "First input subspace (JSON file or inline JSON)")->required();
    pair->add_option("--b", pb_arg, "Second input subspace (JSON file or inline JSON)")->required();

    auto* red = app.add_subcommand("reduce", "Reduce a composite mixed state to one factor");
    std::string input_arg, shape_arg = "2x2";
    std::size_t keep = 1;
    red->add_option("--input", input_arg, "Composite subspace (JSON file or inline JSON)")
        ->required();
    red->add_option("--shape", shape_arg, "Factor shape d1xd2")->capture_default_str();
    red->add_option("--keep", keep, "Factor to keep (1 or 2)")
        ->check(CLI::Range(1, 2))
        ->capture_default_str();

    auto* clone = app.add_subcommand("clone-check", "Decide clonability of a set of pure states");
    std::string states_arg, blank_arg;
    clone->add_option("--states", states_arg, "JSON array of state vectors")->required();
    clone->add_option("--blank", blank_arg, "Blank state vector (default e0)");

    auto* selftest = app.add_subcommand("selftest", "Run the built-in property suites");

    app.require_subcommand(1);
    // Let global options appear after the subcommand as well.
    for (CLI::App* sub : {demo, find, verify, pair, red, clone, selftest}) sub->fallthrough();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (demo->parsed()) return cmd_demo_distributivity(cfg, out);
        if (find->parsed()) {
            return cmd_find_diamonds(
                cfg, out, has_dim ? std::optional<std::size_t>(dim_value) : std::nullopt,
                null_bottom_only);
        }
        if (verify->parsed()) return cmd_no_broadcast_verify(cfg, out, err, a_arg, b_arg, c_arg);
        if (pair->parsed()) return cmd_broadcast_pair(cfg, out, err, pa_arg, pb_arg);
        if (red->parsed()) return cmd_reduce(cfg, out, err, input_arg, shape_arg, keep);
        if (clone->parsed()) return cmd_clone_check(cfg, out, states_arg, blank_arg);
        if (selftest->parsed()) return cmd_selftest(cfg, out);
    } catch (const BudgetError& e) {
        err << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        err << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace mqt::cli
