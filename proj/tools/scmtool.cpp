// Command-line surface for the simplicial-complex / poset
// Cohen-Macaulayness toolkit.
//
// Exit codes: 0 success or true verdict, 1 false verdict (witness in the
// report), 2 usage or parse error, 3 budget exhausted.

#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "scm/io.hpp"
#include "scm/parallel.hpp"
#include "scm/suite.hpp"

using nlohmann::ordered_json;
using namespace scm;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct CommonOpts {
    std::string coeff = "z";
    std::string format = "json";
    int jobs = 1;
};

ordered_json complex_to_json(const SimplicialComplex& cx) {
    ordered_json j;
    j["type"] = "complex";
    j["ground"] = cx.ground_set();
    ordered_json facets = ordered_json::array();
    for (const Face& f : cx.facets()) facets.push_back(f.vertices());
    j["facets"] = facets;
    j["dim"] = cx.is_void() ? ordered_json(nullptr) : ordered_json(cx.dim());
    j["pure"] = cx.is_pure();
    return j;
}

ordered_json poset_to_json(const FinitePoset& p,
                           const std::vector<std::string>& labels) {
    auto name = [&](int x) -> std::string {
        if (x >= 0 && static_cast<std::size_t>(x) < labels.size())
            return labels[static_cast<std::size_t>(x)];
        return "e" + std::to_string(x);
    };
    ordered_json j;
    j["type"] = "poset";
    ordered_json elems = ordered_json::array();
    for (int x : p.elements()) elems.push_back(name(x));
    j["elements"] = elems;
    ordered_json covers = ordered_json::array();
    for (auto [a, b] : p.covers()) covers.push_back(name(a) + " < " + name(b));
    j["covers"] = covers;
    return j;
}

ordered_json profile_to_json(const HomologyProfile& profile) {
    ordered_json j;
    for (int d = profile.min_degree; d <= profile.max_degree(); ++d) {
        ordered_json torsion = ordered_json::array();
        for (const BigInt& f : profile.torsion_at(d)) torsion.push_back(f.str());
        j[std::to_string(d)] = ordered_json::array({profile.betti_at(d), torsion});
    }
    return j;
}

ordered_json witness_to_json(const ScmWitness& w) {
    ordered_json j;
    j["context"] = w.context;
    j["complex"] = complex_to_json(w.complex);
    if (w.relative_sub) j["relative_sub"] = complex_to_json(*w.relative_sub);
    if (w.level_m >= 0) j["level"] = w.level_m;
    j["degree"] = w.degree;
    return j;
}

void emit(const ordered_json& j, const CommonOpts& opts,
          const std::string& text_alternative = {}) {
    if (opts.format == "text" && !text_alternative.empty())
        std::cout << text_alternative;
    else
        std::cout << j.dump(2) << "\n";
}

Face parse_face_arg(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> verts;
    int v;
    while (in >> v) verts.push_back(v);
    return Face(std::move(verts));
}

std::set<int> parse_int_set(const std::string& text) {
    std::set<int> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        out.insert(std::stoi(tok));
    }
    return out;
}

// Either file kind, with posets converted through their order complex
// where a complex is needed.
struct LoadedInstance {
    bool is_poset = false;
    SimplicialComplex complex;
    FinitePoset poset;
    std::vector<std::string> labels;
};

LoadedInstance load_instance(const std::string& path) {
    LoadedInstance out;
    std::string text = read_file(path);
    if (looks_like_poset(text)) {
        NamedPoset np = parse_poset(text);
        out.is_poset = true;
        out.poset = np.poset;
        out.labels = np.labels;
        out.complex = order_complex(np.poset);
    } else {
        out.complex = parse_complex(text);
    }
    return out;
}

int run_homology(const std::string& path, const CommonOpts& opts) {
    CoefficientSpec k = CoefficientSpec::parse(opts.coeff);
    LoadedInstance inst = load_instance(path);
    HomologyProfile profile = reduced_homology(inst.complex, k);
    ordered_json j;
    j["command"] = "homology";
    j["input"] = path;
    j["coefficient"] = k.to_string();
    j["profile"] = profile_to_json(profile);
    std::ostringstream text;
    text << "homology over " << k.to_string() << "\n";
    for (int d = profile.min_degree; d <= profile.max_degree(); ++d) {
        text << "H~_" << d << ": rank " << profile.betti_at(d);
        if (!profile.torsion_at(d).empty()) {
            text << ", torsion";
            for (const BigInt& f : profile.torsion_at(d)) text << ' ' << f;
        }
        text << "\n";
    }
    emit(j, opts, text.str());
    return kExitTrue;
}

int run_check(const std::string& path, const std::string& route,
              const CommonOpts& opts) {
    CoefficientSpec k = CoefficientSpec::parse(opts.coeff);
    LoadedInstance inst = load_instance(path);
    ScmVerdict verdict;
    if (route == "links") {
        verdict = is_SCM_links(inst.complex, k);
    } else if (route == "duval") {
        verdict = is_SCM_duval(inst.complex, k);
    } else if (route == "filtration") {
        verdict = is_SCM_filtration(inst.complex, k);
    } else if (route == "dual") {
        if (!k.is_field())
            throw CLI::ValidationError(
                "--route dual needs field coefficients (q or f<p>)");
        const auto& ground = inst.complex.ground_set();
        for (std::size_t i = 0; i < ground.size(); ++i)
            if (ground[i] != static_cast<int>(i) + 1)
                throw CLI::ValidationError(
                    "--route dual needs ground set {1..n}");
        Face all(ground);
        std::vector<Face> gens;
        for (const Face& f : inst.complex.facets())
            gens.push_back(face_difference(all, f));
        SquarefreeIdeal dual_ideal(static_cast<int>(ground.size()),
                                   std::move(gens));
        verdict.coeff = k;
        verdict.ok = is_componentwise_linear(dual_ideal, k);
    } else if (route == "intervals") {
        if (!inst.is_poset)
            throw CLI::ValidationError("--route intervals needs a poset file");
        verdict = poset_is_SCM_intervals(inst.poset, k);
    } else {
        throw CLI::ValidationError("unknown route: " + route);
    }
    ordered_json j;
    j["command"] = "check";
    j["input"] = path;
    j["check"] = route;
    j["coefficient"] = k.to_string();
    j["verdict"] = verdict.ok;
    if (verdict.witness) j["witness"] = witness_to_json(*verdict.witness);
    std::ostringstream text;
    text << "check " << route << " over " << k.to_string() << ": "
         << (verdict.ok ? "true" : "false") << "\n";
    if (verdict.witness)
        text << "witness: " << verdict.witness->context << ", degree "
             << verdict.witness->degree << "\n";
    emit(j, opts, text.str());
    return verdict.ok ? kExitTrue : kExitFalse;
}

int run_betti(const std::string& path, const CommonOpts& opts) {
    CoefficientSpec k = CoefficientSpec::parse(opts.coeff);
    if (!k.is_field())
        throw CLI::ValidationError("betti needs field coefficients (q or f<p>)");
    LoadedInstance inst = load_instance(path);
    GradedBettiTable table = hochster_betti(inst.complex, k);
    ordered_json j;
    j["command"] = "betti";
    j["input"] = path;
    j["coefficient"] = k.to_string();
    ordered_json entries;
    for (const auto& [key, value] : table.beta)
        entries[std::to_string(key.first) + "," + std::to_string(key.second)] =
            value;
    j["betti"] = entries;
    std::ostringstream text;
    for (const auto& [key, value] : table.beta)
        text << "beta_{" << key.first << "," << key.second << "} = " << value
             << "\n";
    emit(j, opts, text.str());
    return kExitTrue;
}

struct ConstructArgs {
    std::vector<std::string> inputs;
    std::string face;
    std::string ranks;
    std::string coranks;
    std::string colors;
    std::string coloring;
    std::string x, y;
    int param = 0;
    bool bottom = false;
    bool top = false;
    int apex = -1;
};

int element_by_label(const LoadedInstance& inst, const std::string& label) {
    for (std::size_t i = 0; i < inst.labels.size(); ++i)
        if (inst.labels[i] == label) return static_cast<int>(i);
    throw CLI::ValidationError("unknown poset element: " + label);
}

int run_construct(const std::string& op, const ConstructArgs& args,
                  const CommonOpts& opts) {
    auto need_inputs = [&](std::size_t n) {
        if (args.inputs.size() != n)
            throw CLI::ValidationError("construct " + op + " needs " +
                                       std::to_string(n) + " input file(s)");
    };

    auto emit_complex = [&](const SimplicialComplex& cx) {
        emit(complex_to_json(cx), opts, format_complex(cx));
        return kExitTrue;
    };
    auto emit_poset = [&](const FinitePoset& p,
                          const std::vector<std::string>& labels) {
        emit(poset_to_json(p, labels), opts, format_poset(p, labels));
        return kExitTrue;
    };

    if (op == "link" || op == "generated-above" || op == "pure-skeleton" ||
        op == "facet-layer" || op == "skeleton" || op == "induced" ||
        op == "dual" || op == "cone" || op == "type-selected") {
        need_inputs(1);
        SimplicialComplex cx = load_instance(args.inputs[0]).complex;
        if (op == "link") return emit_complex(link(cx, parse_face_arg(args.face)));
        if (op == "generated-above") return emit_complex(generated_above(cx, args.param));
        if (op == "pure-skeleton") return emit_complex(pure_skeleton(cx, args.param));
        if (op == "facet-layer") return emit_complex(facet_layer(cx, args.param));
        if (op == "skeleton") return emit_complex(skeleton(cx, args.param));
        if (op == "induced")
            return emit_complex(
                induced(cx, parse_face_arg(args.face).vertices()));
        if (op == "dual") return emit_complex(alexander_dual(cx));
        if (op == "cone") return emit_complex(cone(cx, args.apex));
        // type-selected
        VertexColoring coloring;
        std::istringstream in(args.coloring);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            auto colon = tok.find(':');
            if (colon == std::string::npos)
                throw CLI::ValidationError("bad --coloring entry: " + tok);
            coloring.color[std::stoi(tok.substr(0, colon))] =
                std::stoi(tok.substr(colon + 1));
        }
        return emit_complex(
            type_selected(cx, coloring, parse_int_set(args.colors)));
    }

    if (op == "join" || op == "intersect") {
        need_inputs(2);
        SimplicialComplex a = load_instance(args.inputs[0]).complex;
        SimplicialComplex b = load_instance(args.inputs[1]).complex;
        return emit_complex(op == "join" ? join(a, b) : intersect(a, b));
    }

    if (op == "order-complex") {
        need_inputs(1);
        LoadedInstance inst = load_instance(args.inputs[0]);
        if (!inst.is_poset)
            throw CLI::ValidationError("order-complex needs a poset file");
        return emit_complex(inst.complex);
    }

    if (op == "face-poset") {
        need_inputs(1);
        SimplicialComplex cx = load_instance(args.inputs[0]).complex;
        FacePoset fp = face_poset(cx);
        std::vector<std::string> labels;
        for (const Face& f : fp.faces) labels.push_back(f.to_string());
        return emit_poset(fp.poset, labels);
    }

    if (op == "ordinal-sum" || op == "product") {
        need_inputs(2);
        LoadedInstance a = load_instance(args.inputs[0]);
        LoadedInstance b = load_instance(args.inputs[1]);
        if (!a.is_poset || !b.is_poset)
            throw CLI::ValidationError(op + " needs two poset files");
        if (op == "product") return emit_poset(product(a.poset, b.poset), {});
        // relabel the second poset out of the way before summing
        std::vector<int> elems;
        std::vector<std::pair<int, int>> covers;
        int offset = static_cast<int>(a.labels.size());
        for (int x : b.poset.elements()) elems.push_back(x + offset);
        for (auto [u, v] : b.poset.covers())
            covers.emplace_back(u + offset, v + offset);
        FinitePoset shifted = FinitePoset::from_covers(elems, covers);
        std::vector<std::string> labels = a.labels;
        labels.insert(labels.end(), b.labels.begin(), b.labels.end());
        return emit_poset(ordinal_sum(a.poset, shifted), labels);
    }

    LoadedInstance inst;
    if (op == "adjoin-bounds" || op == "open-interval" ||
        op == "closed-interval" || op == "interval-poset" ||
        op == "rank-selected" || op == "birank-selected" ||
        op == "max-deleted" || op == "rank-ideal" || op == "maxrank-ideal") {
        need_inputs(1);
        inst = load_instance(args.inputs[0]);
        if (!inst.is_poset)
            throw CLI::ValidationError(op + " needs a poset file");
    } else {
        throw CLI::ValidationError("unknown construct operation: " + op);
    }

    auto emit_same_labels = [&](const FinitePoset& p) {
        return emit_poset(p, inst.labels);
    };

    if (op == "adjoin-bounds")
        return emit_same_labels(
            adjoin_bounds(inst.poset, args.bottom, args.top).poset);
    if (op == "open-interval")
        return emit_same_labels(open_interval(inst.poset,
                                              element_by_label(inst, args.x),
                                              element_by_label(inst, args.y)));
    if (op == "closed-interval")
        return emit_same_labels(closed_interval(inst.poset,
                                                element_by_label(inst, args.x),
                                                element_by_label(inst, args.y)));
    if (op == "interval-poset") {
        IntervalPoset ip = interval_poset(inst.poset);
        std::vector<std::string> labels;
        auto name = [&](int x) {
            if (x >= 0 && static_cast<std::size_t>(x) < inst.labels.size())
                return inst.labels[static_cast<std::size_t>(x)];
            return "e" + std::to_string(x);
        };
        for (auto [x, y] : ip.intervals)
            labels.push_back("[" + name(x) + "," + name(y) + "]");
        return emit_poset(ip.poset, labels);
    }
    if (op == "rank-selected")
        return emit_same_labels(
            rank_selected(inst.poset, parse_int_set(args.ranks)));
    if (op == "birank-selected")
        return emit_same_labels(birank_selected(inst.poset,
                                                parse_int_set(args.ranks),
                                                parse_int_set(args.coranks)));
    if (op == "max-deleted")
        return emit_same_labels(max_deleted(inst.poset, args.param));
    if (op == "rank-ideal")
        return emit_same_labels(rank_generated_ideal(inst.poset, args.param));
    return emit_same_labels(maxrank_ideal(inst.poset, args.param));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohen-Macaulayness toolkit for simplicial complexes and posets"};
    app.require_subcommand(1);

    CommonOpts opts;
    app.add_option("--coeff", opts.coeff, "coefficients: z, q, or f<p>")
        ->envname("SCMTOOL_COEFF");
    app.add_option("--format", opts.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->envname("SCMTOOL_FORMAT");
    app.add_option("--jobs", opts.jobs, "worker threads")
        ->envname("SCMTOOL_JOBS");

    std::string input_path;
    std::string route = "links";

    auto* cmd_homology = app.add_subcommand("homology", "reduced homology profile");
    cmd_homology->add_option("file", input_path, "facet-list or poset file")
        ->required();

    auto* cmd_check = app.add_subcommand("check", "SCM decision with route selection");
    cmd_check->add_option("file", input_path, "facet-list or poset file")
        ->required();
    cmd_check
        ->add_option("--route", route,
                     "links | duval | filtration | dual | intervals")
        ->envname("SCMTOOL_ROUTE");

    std::string op;
    ConstructArgs cargs;
    auto* cmd_construct =
        app.add_subcommand("construct", "complex and poset constructions");
    cmd_construct->add_option("op", op, "operation name")->required();
    cmd_construct->add_option("inputs", cargs.inputs, "input file(s)");
    cmd_construct->add_option("--face", cargs.face, "face, e.g. \"1 2\"");
    cmd_construct->add_option("--param", cargs.param, "integer parameter");
    cmd_construct->add_option("--apex", cargs.apex, "cone apex vertex");
    cmd_construct->add_option("--ranks", cargs.ranks, "rank set, e.g. 1,2");
    cmd_construct->add_option("--coranks", cargs.coranks, "corank set");
    cmd_construct->add_option("--colors", cargs.colors, "color set, e.g. 0,1");
    cmd_construct->add_option("--coloring", cargs.coloring,
                              "vertex coloring, e.g. 1:0,2:1");
    cmd_construct->add_option("--x", cargs.x, "interval endpoint label");
    cmd_construct->add_option("--y", cargs.y, "interval endpoint label");
    cmd_construct->add_flag("--bottom", cargs.bottom, "adjoin a minimum");
    cmd_construct->add_flag("--top", cargs.top, "adjoin a maximum");

    auto* cmd_dual = app.add_subcommand("dual", "combinatorial Alexander dual");
    cmd_dual->add_option("file", input_path, "facet-list file")->required();

    auto* cmd_betti =
        app.add_subcommand("betti", "graded Betti table of the Stanley-Reisner quotient");
    cmd_betti->add_option("file", input_path, "facet-list file")->required();

    SuiteConfig suite_cfg;
    auto* cmd_suite = app.add_subcommand("suite", "equivalence and preservation suites");
    cmd_suite->add_option("--seed", suite_cfg.seed, "suite seed")
        ->envname("SCMTOOL_SEED");
    cmd_suite->add_option("--exhaustive", suite_cfg.exhaustive_vertices,
                          "exhaustive enumeration vertex count");
    cmd_suite->add_option("--max-vertices", suite_cfg.max_vertices,
                          "random complex size cap")
        ->envname("SCMTOOL_MAX_VERTICES");
    cmd_suite->add_option("--max-elements", suite_cfg.max_elements,
                          "random poset size cap");
    cmd_suite->add_option("--samples", suite_cfg.samples, "samples per family");
    std::vector<std::string> coeff_list;
    cmd_suite->add_option("--coeffs", coeff_list,
                          "coefficient list, e.g. z q f2");
    cmd_suite->add_option("--budget-ms", suite_cfg.budget_ms,
                          "per-check time budget")
        ->envname("SCMTOOL_BUDGET_MS");

    SearchBounds bounds;
    auto* cmd_search = app.add_subcommand(
        "search", "counterexample search for the naive rank-selection extension");
    cmd_search->add_option("--seed", bounds.seed, "search seed")
        ->envname("SCMTOOL_SEED");
    cmd_search->add_option("--max-elements", bounds.max_elements,
                           "poset size bound");
    cmd_search->add_option("--max-length", bounds.max_length, "length bound");
    cmd_search->add_option("--exhaustive", bounds.exhaustive_elements,
                           "exhaustive enumeration size bound");
    cmd_search->add_option("--samples", bounds.random_samples,
                           "randomized phase sample count");
    cmd_search->add_option("--budget-ms", bounds.budget_ms, "time budget")
        ->envname("SCMTOOL_BUDGET_MS");

    try {
        app.parse(argc, argv);
        set_worker_threads(opts.jobs);

        if (cmd_homology->parsed()) return run_homology(input_path, opts);
        if (cmd_check->parsed()) return run_check(input_path, route, opts);
        if (cmd_construct->parsed()) return run_construct(op, cargs, opts);
        if (cmd_dual->parsed()) {
            SimplicialComplex cx = load_instance(input_path).complex;
            SimplicialComplex dual = alexander_dual(cx);
            emit(complex_to_json(dual), opts, format_complex(dual));
            return kExitTrue;
        }
        if (cmd_betti->parsed()) return run_betti(input_path, opts);
        if (cmd_suite->parsed()) {
            suite_cfg.jobs = opts.jobs;
            if (!coeff_list.empty()) {
                suite_cfg.coeffs.clear();
                for (const auto& c : coeff_list)
                    suite_cfg.coeffs.push_back(CoefficientSpec::parse(c));
            }
            Report report = run_equivalence_suite(suite_cfg);
            if (opts.format == "text")
                std::cout << report.to_text();
            else
                std::cout << report.to_json();
            if (report.budget_exhaustions() > 0) return kExitBudget;
            return report.failures() == 0 ? kExitTrue : kExitFalse;
        }
        if (cmd_search->parsed()) {
            SearchResult result = search_counterexample(bounds);
            std::cout << result.to_json();
            return result.outcome == SearchOutcome::BudgetExhausted
                       ? kExitBudget
                       : kExitTrue;
        }
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitTrue : kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
