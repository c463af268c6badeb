// eab_cli.cpp
// eab classify | canonical | aut | catalog | verify

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "eab/autgrp.hpp"
#include "eab/catalog.hpp"
#include "eab/io.hpp"
#include "eab/matgrp.hpp"
#include "eab/sms.hpp"
#include "eab/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

using namespace eab;

std::string signed_str(long long v) { return (v > 0 ? "+" : "") + std::to_string(v); }

std::string bits(std::uint64_t v, int k) {
    std::string out;
    for (int i = 0; i < k; ++i) out += ((v >> i) & 1) ? '1' : '0';
    return out;
}

std::string mu_json(const SymplecticMetricSpace& space) {
    std::ostringstream os;
    os << "{\"rank\":" << space.rank() << ",\"mu\":[";
    for (std::size_t v = 0; v < space.size(); ++v) os << (v ? "," : "") << int(space.mu_table()[v]);
    os << "]}";
    return os.str();
}

void print_space_report(const SymplecticMetricSpace& space) {
    const InvariantTuple t = invariants(space);
    std::cout << "verdict: valid\n"
              << "class: " << t.label() << ", defe=" << signed_str(defect(space)) << "\n"
              << "invariants: eps=" << t.eps << " delta=" << t.delta << " r=" << t.r << " s=" << t.s << "\n"
              << "rank: " << space.rank() << "\n"
              << "kernel_dim: " << kernel(space).dim() << "\n"
              << "translation_dim: " << translation_subgroup(space).dim() << "\n";
}

int classify_mu(const std::string& path) {
    const SymplecticMetricSpace space = parse_mu_table(read_file(path));
    const Validation v = validate(space);
    if (!v.valid) {
        std::cout << "verdict: invalid\nreason: " << v.diagnostic << "\n";
        return kFail;
    }
    print_space_report(space);
    return kOk;
}

int classify_generators(const std::string& path) {
    const GeneratorInput in = parse_generators(read_file(path));
    for (std::size_t g = 0; g < in.generators.size(); ++g)
        if (in.generators[g].n() != in.n) throw InputError("generator size does not match n", 0, 0);
    GeneratedSubgroup f;
    try {
        f = generate(in.generators);
    } catch (const std::invalid_argument& e) {
        std::cout << "verdict: invalid\nreason: " << e.what() << "\n";
        return kFail;
    }
    for (const auto& g : in.generators)
        if (g.conj())
            throw InputError("classify handles inner elements only; generator with conj=true given", 0, 0);
    SymplecticMetricSpace space;
    try {
        space = extract_sms(f);
    } catch (const std::exception& e) {
        std::cout << "verdict: invalid\nreason: " << e.what() << "\n";
        return kFail;
    }
    print_space_report(space);
    std::cout << "field_mode: " << to_string(in.mode) << "\n"
              << "n: " << in.n << "\n"
              << "mu_table: " << mu_json(space) << "\n";
    for (int a = 0; a < f.rank(); ++a)
        for (int b = a + 1; b < f.rank(); ++b)
            std::cout << "m(g" << a << ",g" << b << ") = " << commutator_scalar(f.generators[a], f.generators[b]).str()
                      << "\n";
    for (int a = 0; a < f.rank(); ++a)
        std::cout << "mu(g" << a << ") = " << square_scalar(f.generators[a]).str() << "\n";
    return kOk;
}

struct TupleFlags {
    int r = 0, s = 0, eps = 0, delta = 0;
    InvariantTuple tuple() const {
        InvariantTuple t{eps, delta, r, s};
        if (!t.admissible())
            throw InputError("inadmissible tuple " + t.label() + " (need eps, delta in {0,1}, eps*delta = 0, r,s >= 0)",
                             0, 0);
        return t;
    }
};

void add_tuple_flags(CLI::App* app, TupleFlags& f) {
    app->add_option("--r", f.r, "rank of the translation subgroup")->check(CLI::Range(0, 24));
    app->add_option("--s", f.s, "number of hyperbolic pairs")->check(CLI::Range(0, 12));
    app->add_option("--eps", f.eps, "epsilon")->check(CLI::Range(0, 1));
    app->add_option("--delta", f.delta, "delta")->check(CLI::Range(0, 1));
}

int run_canonical(const TupleFlags& f) {
    const InvariantTuple t = f.tuple();
    const SymplecticMetricSpace space = canonical(t);
    std::cout << "class: " << t.label() << ", defe=" << signed_str(defect(space)) << "\n"
              << "rank: " << space.rank() << "\n"
              << "mu_table: " << mu_json(space) << "\n";
    return kOk;
}

int run_aut(const std::optional<std::string>& mu_path, const TupleFlags& f, bool list) {
    SymplecticMetricSpace space;
    if (mu_path) {
        space = parse_mu_table(read_file(*mu_path));
        const Validation v = validate(space);
        if (!v.valid) {
            std::cout << "verdict: invalid\nreason: " << v.diagnostic << "\n";
            return kFail;
        }
    } else {
        space = canonical(f.tuple());
    }
    if (space.rank() > kMaxAutRank)
        throw InputError("rank " + std::to_string(space.rank()) + " exceeds the enumeration bound " +
                             std::to_string(kMaxAutRank),
                         0, 0);
    const InvariantTuple t = invariants(space);
    const AutGroupSpec spec = AutGroupSpec::metric(t);
    const BigInt formula = order(spec);
    const std::uint64_t enumerated = count_by_enumeration(space);
    const BigInt chain = count_automorphisms(space);
    std::cout << "group: " << spec.str() << "\n"
              << "order_formula: " << formula << "\n"
              << "order_enumerated: " << enumerated << "\n"
              << "order_stabilizer_chain: " << chain << "\n";
    if (list) {
        for (const auto& m : enumerate_automorphisms(space)) {
            std::cout << "[";
            for (int i = 0; i < m.rows(); ++i) std::cout << (i ? " " : "") << m.row(i).str();
            std::cout << "]\n";
        }
    }
    const bool ok = BigInt(enumerated) == formula && chain == formula;
    std::cout << "match: " << (ok ? "yes" : "no") << "\n";
    return ok ? kOk : kFail;
}

int run_catalog(const std::string& type, const std::string& format) {
    std::vector<FamilyEntry> entries;
    if (type == "all")
        entries = catalog_all();
    else
        entries = catalog(parse_lie_type(type));
    std::cout << (format == "csv" ? to_csv(entries) : to_json(entries));
    return kOk;
}

int run_verify(const std::string& suite) {
    bool all = true;
    std::cout << std::left;
    for (int id : suite_criteria(suite)) {
        const CriterionResult r = run_criterion(id);
        all = all && r.pass();
        std::ostringstream secs;
        secs << std::fixed << std::setprecision(3) << r.seconds << "s/" << r.budget_seconds << "s";
        std::cout << (r.pass() ? "PASS" : "FAIL") << "  " << std::setw(3) << id << std::setw(46) << r.title
                  << secs.str() << (r.within_budget() ? "" : "  over budget") << "\n";
        for (const auto& l : r.lines)
            std::cout << "      " << (l.pass ? "ok  " : "FAIL") << " " << l.name << ": " << l.detail << "\n";
    }
    std::cout << (all ? "all checks passed" : "some checks failed") << "\n";
    return all ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Elementary abelian 2-subgroups: symplectic metric spaces, automorphism groups, exceptional catalog"};
    app.require_subcommand(1, 1);

    std::string mu_path, gen_path;
    auto* classify = app.add_subcommand("classify", "validate and classify a mu-table or generator file");
    auto* mu_opt = classify->add_option("--mu-table", mu_path, "JSON mu-table file");
    auto* gen_opt = classify->add_option("--generators", gen_path, "JSON generator file");
    mu_opt->excludes(gen_opt);
    classify->require_option(1);

    TupleFlags canon_flags;
    auto* canonical_cmd = app.add_subcommand("canonical", "print the canonical space V_{r,s;eps,delta}");
    add_tuple_flags(canonical_cmd, canon_flags);

    TupleFlags aut_flags;
    std::string aut_mu;
    bool aut_list = false;
    auto* aut = app.add_subcommand("aut", "automorphism group order: formula, enumeration, stabilizer chain");
    auto* aut_mu_opt = aut->add_option("--mu-table", aut_mu, "JSON mu-table file (instead of --r/--s/--eps/--delta)");
    add_tuple_flags(aut, aut_flags);
    for (const char* name : {"--r", "--s", "--eps", "--delta"}) aut_mu_opt->excludes(aut->get_option(name));
    aut->add_flag("--list", aut_list, "print every automorphism");

    std::string type = "all", format = "csv";
    auto* cat = app.add_subcommand("catalog", "export the exceptional-type catalog");
    cat->add_option("--type", type, "G2, F4, E6, E7, E8 or all")
        ->check(CLI::IsMember({"G2", "F4", "E6", "E7", "E8", "all"}));
    cat->add_option("--format", format, "csv or text (JSON)")->check(CLI::IsMember({"csv", "text"}));

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run the acceptance checks");
    verify->add_option("--suite", suite, "all, counts, orders, defect, exhaustive, matrix or catalog")
        ->check(CLI::IsMember(suite_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*classify) return mu_path.empty() ? classify_generators(gen_path) : classify_mu(mu_path);
        if (*canonical_cmd) return run_canonical(canon_flags);
        if (*aut) return run_aut(aut_mu.empty() ? std::nullopt : std::optional<std::string>(aut_mu), aut_flags, aut_list);
        if (*cat) return run_catalog(type, format);
        if (*verify) return run_verify(suite);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
