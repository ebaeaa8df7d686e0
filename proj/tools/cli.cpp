#include "cli.hpp"

#include "hypercol/constructions.hpp"
#include "hypercol/error.hpp"
#include "hypercol/gadget.hpp"
#include "hypercol/io.hpp"
#include "hypercol/matching.hpp"
#include "hypercol/oracle.hpp"
#include "hypercol/reduction.hpp"
#include "hypercol/sidecar.hpp"
#include "hypercol/solvers.hpp"
#include "hypercol/structure.hpp"
#include "hypercol/verify.hpp"
#include "hypercol/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace hypercol::cli {

namespace {

/// File-level problem (missing, unwritable, inconsistent pair of files).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string banner()
{
    return std::string("hypercol ") + kVersion;
}

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    return in;
}

template <typename Fn>
auto parse_file(const std::string& path, Fn&& fn)
{
    auto in = open_input(path);
    try {
        return fn(in);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path + ": " + e.what());
    }
}

HypergraphFile load_hypergraph(const std::string& path)
{
    return parse_file(path, [](std::istream& in) { return read_hypergraph_file(in); });
}

void emit(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw InputError("cannot write '" + path + "'");
    f << text;
    if (!f)
        throw InputError("write to '" + path + "' failed");
}

std::string hypergraph_text(const Hypergraph& g, std::vector<std::string> comments = {})
{
    comments.insert(comments.begin(), banner());
    std::ostringstream s;
    write_hypergraph(s, g, comments);
    return s.str();
}

std::string edge_list(const Hypergraph& g, const Matching& m)
{
    std::string text;
    for (std::size_t i : m.edges) {
        text += text.empty() ? "" : " ";
        text += "{";
        for (std::size_t k = 0; k < g.edge(i).size(); ++k)
            text += (k ? "," : "") + std::to_string(g.edge(i)[k]);
        text += "}";
    }
    return text;
}

std::string vertex_list(std::span<const Vertex> vs)
{
    std::string text;
    for (Vertex v : vs)
        text += (text.empty() ? "" : " ") + std::to_string(v);
    return text;
}

int exit_for(Status s)
{
    switch (s) {
    case Status::Colorable: return kExitOk;
    case Status::Uncolorable: return kExitNo;
    case Status::PromiseViolation: return kExitPromise;
    }
    return kExitNo;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
    std::string file;
    std::string mode = "auto";
    std::string precoloring;
    std::string out;
    unsigned r = 2;
    std::size_t k = 0;
    std::size_t s = 0;
    std::size_t t = 0;
    bool trace = false;
    bool force = false;
    CLI::Option* r_opt = nullptr;
    CLI::Option* k_opt = nullptr;
    CLI::Option* s_opt = nullptr;
    CLI::Option* t_opt = nullptr;
};

std::string coloring_text(Status status, const PartialColoring* c, const std::vector<std::string>& comments)
{
    std::ostringstream s;
    s << "c " << banner() << '\n';
    for (const std::string& line : comments)
        s << "c " << line << '\n';
    write_coloring(s, status, c);
    return s.str();
}

int cmd_solve(const SolveArgs& a, unsigned threads, std::ostream& out, std::ostream& err)
{
    const HypergraphFile file = load_hypergraph(a.file);
    const Hypergraph& g = file.graph.base();
    SolveOptions opts;
    opts.threads = threads;
    opts.ignore_promise = a.force;
    opts.trace = a.trace ? &err : nullptr;

    const bool has_r = a.r_opt->count() > 0;
    const bool has_s = a.s_opt->count() > 0;
    const bool has_t = a.t_opt->count() > 0;
    const bool has_pre = !a.precoloring.empty();
    const Color r = static_cast<Color>(a.r);
    const std::size_t k = a.k_opt->count() ? a.k : g.max_edge_size();
    const std::size_t s = has_s ? a.s : kNoPromise;

    std::string mode = a.mode;
    if (mode == "auto") {
        if (r == 2 && !has_pre && is_k_bounded(g, 3))
            mode = "2col3b";
        else if (has_s && a.s + 1 <= r)
            mode = "precolor";
        else if (has_t && !has_pre && r == 2)
            mode = "htfree";
        else if (within_color_cap(g.num_vertices(), r))
            mode = "brute";
        else
            throw CapExceeded("no applicable polynomial case and the instance is above the brute-force cap");
        err << "c mode " << mode << '\n';
    }

    const auto precoloring = [&]() {
        if (!has_pre)
            return PartialColoring(g.num_vertices(), r);
        return parse_file(a.precoloring, [&](std::istream& in) { return read_precoloring(in, g.num_vertices(), r); });
    };

    std::vector<std::string> comments;
    if (mode == "2col3b" || mode == "htfree") {
        if (has_r && r != 2)
            throw PreconditionError("mode " + mode + " colors with r = 2 only");
        if (mode == "htfree" && !has_t)
            throw PreconditionError("mode htfree needs --t");
        const ColoringOutcome res = mode == "2col3b" ? solve_2col_3bounded(g, s, opts) : solve_2col_htfree(g, a.t, opts);
        if (res.promise_witness)
            comments.push_back("matching " + edge_list(g, *res.promise_witness));
        if (res.induced_copy)
            comments.push_back("induced " + vertex_list(*res.induced_copy));
        emit(a.out, coloring_text(res.status, res.coloring ? &*res.coloring : nullptr, comments), out);
        return exit_for(res.status);
    }
    if (mode == "precolor") {
        if (!has_r)
            throw PreconditionError("mode precolor needs --r");
        const ExtensionOutcome res =
            precolor_extend_bounded(g, r, k, has_s ? a.s : r - 1, precoloring(), opts);
        comments.push_back("rounds " + std::to_string(res.trace.rounds.size()));
        if (res.promise_witness)
            comments.push_back("matching " + edge_list(g, *res.promise_witness));
        emit(a.out, coloring_text(res.status, res.coloring ? &*res.coloring : nullptr, comments), out);
        return exit_for(res.status);
    }
    if (mode == "stable") {
        const StableSetOutcome res = max_stable_set_bounded(g, k, s, opts);
        std::ostringstream text;
        text << "c " << banner() << '\n';
        if (res.promise_witness) {
            text << "c matching " << edge_list(g, *res.promise_witness) << '\n';
            write_coloring(text, Status::PromiseViolation, nullptr);
            emit(a.out, text.str(), out);
            return kExitPromise;
        }
        write_vertex_set(text, *res.stable_set);
        emit(a.out, text.str(), out);
        return kExitOk;
    }
    if (mode == "stable-weighted") {
        const auto best = max_weight_stable_set_bruteforce(file.graph);
        std::ostringstream text;
        text << "c " << banner() << '\n';
        write_vertex_set(text, best, file.graph.weight_of(best));
        emit(a.out, text.str(), out);
        return kExitOk;
    }
    if (mode == "brute") {
        const auto res = has_pre ? brute_force_extend(g, r, precoloring()) : brute_force_color(g, r);
        const Status status = res ? Status::Colorable : Status::Uncolorable;
        emit(a.out, coloring_text(status, res ? &*res : nullptr, comments), out);
        return exit_for(status);
    }
    throw PreconditionError("unknown mode '" + mode + "'");
}

// ---------------------------------------------------------------- gadget

struct GadgetArgs {
    std::vector<std::string> inputs;
    std::string out;
    std::string cert;
    unsigned r = 2;
    std::size_t k = 3;
};

void emit_sidecar(const std::string& path, const std::function<void(std::ostream&)>& write, std::ostream& out)
{
    if (path.empty())
        return;
    std::ostringstream s;
    write(s);
    emit(path, s.str(), out);
}

int cmd_gadget(const std::string& which, const GadgetArgs& a, std::ostream& out)
{
    const std::vector<std::string> banner_line{banner()};
    const auto input = [&](std::size_t i) { return load_hypergraph(a.inputs.at(i)).graph.base(); };

    if (which == "ltimes") {
        emit(a.out, hypergraph_text(ltimes(input(0), input(1)), {"ltimes"}), out);
    } else if (which == "uplift-bounded") {
        emit(a.out, hypergraph_text(uplift_bounded(input(0), a.r), {"uplift-bounded r=" + std::to_string(a.r)}), out);
    } else if (which == "uplift-uniform") {
        emit(a.out,
             hypergraph_text(uplift_uniform(input(0), a.r, a.k),
                             {"uplift-uniform r=" + std::to_string(a.r) + " k=" + std::to_string(a.k)}),
             out);
    } else if (which == "uplift-precolor") {
        const PrecoloringInstance inst = uplift_precoloring(input(0), a.r);
        emit(a.out, hypergraph_text(inst.graph, {"uplift-precolor r=" + std::to_string(a.r)}), out);
        emit_sidecar(
            a.cert,
            [&](std::ostream& s) {
                s << "c " << banner() << '\n';
                write_precoloring(s, inst.precoloring);
            },
            out);
    } else if (which == "mwss") {
        const WeightedHypergraph w = load_hypergraph(a.inputs.at(0)).graph;
        std::ostringstream s;
        const std::vector<std::string> comments{banner(), "mwss"};
        write_weighted_hypergraph(s, mwss_gadget(w), comments);
        emit(a.out, s.str(), out);
    } else if (which == "g1" || which == "g2") {
        const Gadget g = which == "g1" ? build_g1() : build_g2();
        emit(a.out, hypergraph_text(g.hypergraph, {which}), out);
        emit_sidecar(a.cert, [&](std::ostream& s) { write_gadget_sidecar(s, g.certificate, banner_line); }, out);
    } else if (which == "reduce3col") {
        const ReductionOutput r = reduce_3col_linear(input(0));
        emit(a.out, hypergraph_text(r.hypergraph, {"reduce3col"}), out);
        emit_sidecar(a.cert, [&](std::ostream& s) { write_reduction_sidecar(s, r, banner_line); }, out);
    } else {
        throw PreconditionError("unknown gadget '" + which + "'");
    }
    return kExitOk;
}

// ---------------------------------------------------------------- check

struct CheckArgs {
    std::vector<std::string> inputs;
    std::size_t k = 3;
    std::size_t s = 0;
    std::size_t t = 1;
    unsigned r = 0;
};

int cmd_check(const std::string& which, const CheckArgs& a, std::ostream& out)
{
    const Hypergraph g = load_hypergraph(a.inputs.at(0)).graph.base();
    Report report;
    if (which == "linear") {
        report.add("linear", is_linear(g), "");
    } else if (which == "uniform") {
        report.add("uniform", is_k_uniform(g, a.k), "k=" + std::to_string(a.k));
    } else if (which == "bounded") {
        report.add("bounded", is_k_bounded(g, a.k), "k=" + std::to_string(a.k));
    } else if (which == "stable") {
        const auto set = parse_file(a.inputs.at(1), [&](std::istream& in) { return read_vertex_set(in, g.num_vertices()); });
        const auto inside = induced_edges(g, set);
        report.add("stable", inside.empty(),
                   std::to_string(set.size()) + " vertices, " + std::to_string(inside.size()) + " edges inside");
    } else if (which == "coloring") {
        const ColoringFile c = parse_file(a.inputs.at(1), [&](std::istream& in) {
            return read_coloring(in, g.num_vertices(), static_cast<Color>(a.r));
        });
        const bool ok = validate_coloring(g, c.coloring);
        std::string detail = std::to_string(c.coloring.r()) + " colors";
        if (!c.coloring.is_total())
            detail += ", " + std::to_string(g.num_vertices() - c.coloring.domain_size()) + " vertices uncolored";
        else if (auto bad = first_monochromatic_edge(g, c.coloring))
            detail += ", edge " + std::to_string(*bad + 1) + " monochromatic";
        report.add("coloring", ok, detail);
    } else if (which == "htfree") {
        const auto copy = find_induced_one_edge(g, a.t);
        report.add("htfree", !copy, "t=" + std::to_string(a.t) + (copy ? ", induced copy " + vertex_list(*copy) : ""));
    } else if (which == "matching") {
        const Matching m = max_matching_exact(g, a.s);
        const bool ok = m.size() <= a.s;
        report.add("matching", ok,
                   (ok ? "nu = " : "nu >= ") + std::to_string(m.size()) + ", bound " + std::to_string(a.s)
                       + (m.empty() ? "" : ", matching " + edge_list(g, m)));
    } else {
        throw PreconditionError("unknown check '" + which + "'");
    }
    write_report(out, report);
    return report.passed() ? kExitOk : kExitNo;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::vector<std::string> inputs;
    std::string cert;
    std::string coloring;
};

int cmd_verify(const std::string& which, const VerifyArgs& a, std::ostream& out)
{
    const Hypergraph g = load_hypergraph(a.inputs.at(0)).graph.base();
    Report report;
    if (which == "certificate" || which == "g1") {
        const Sidecar side = parse_file(a.inputs.at(1), [&](std::istream& in) { return read_sidecar(in, g.num_vertices()); });
        const GadgetCertificate cert = to_certificate(side);
        report = which == "g1" ? verify_g1_dichotomy(g, cert) : check_certificate(g, cert);
    } else if (which == "reduction") {
        const Hypergraph gstar = load_hypergraph(a.inputs.at(1)).graph.base();
        ReductionOutput r = reduce_3col_linear(gstar);
        r.hypergraph = g;
        if (!a.cert.empty()) {
            const Sidecar side = parse_file(a.cert, [&](std::istream& in) { return read_sidecar(in, g.num_vertices()); });
            r.hitting_set = side.hitting_set;
            std::sort(r.hitting_set.begin(), r.hitting_set.end());
            r.provenance = side.provenance;
            std::map<std::pair<Vertex, Vertex>, std::size_t> index;
            for (std::size_t i = 0; i < gstar.num_edges(); ++i)
                index[{gstar.edge(i)[0], gstar.edge(i)[1]}] = i;
            std::vector<Color> colors(gstar.num_edges(), kUncolored);
            for (const auto& [x, y, k] : side.edge_colors) {
                const auto it = index.find({std::min(x, y), std::max(x, y)});
                if (it == index.end())
                    throw InputError(a.cert + ": ecolor " + std::to_string(x) + " " + std::to_string(y)
                                     + " is not an input edge");
                colors[it->second] = k;
            }
            r.edge_coloring = colors;
        } else {
            report.notes.push_back("no sidecar given; hitting set, provenance and edge colors are rebuilt");
        }
        std::optional<PartialColoring> c;
        if (!a.coloring.empty())
            c = parse_file(a.coloring, [&](std::istream& in) { return read_coloring(in, gstar.num_vertices(), 3); })
                    .coloring;
        Report checked = verify_reduction(r, gstar, c ? &*c : nullptr);
        checked.notes.insert(checked.notes.begin(), report.notes.begin(), report.notes.end());
        report = std::move(checked);
    } else {
        throw PreconditionError("unknown verifier '" + which + "'");
    }
    write_report(out, report);
    return report.passed() ? kExitOk : kExitNo;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Hypergraph coloring and stable-set toolkit"};
    app.name("hypercol");
    app.set_version_flag("--version", banner());
    app.require_subcommand(1);
    unsigned threads = 1;
    app.add_option("--threads", threads, "Workers for branch fan-out (output does not depend on it)")
        ->check(CLI::Range(1U, 1024U));

    std::function<int()> action;

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "Decide colorability or find a maximum stable set");
    solve->fallthrough();
    solve->add_option("file", sa.file, "Hypergraph file")->required();
    solve->add_option("--mode", sa.mode, "Algorithm")
        ->check(CLI::IsMember({"auto", "2col3b", "precolor", "htfree", "stable", "stable-weighted", "brute"}));
    sa.r_opt = solve->add_option("--r", sa.r, "Number of colors")->check(CLI::Range(1U, 64U));
    sa.k_opt = solve->add_option("--k", sa.k, "Edge size bound (default: largest edge)");
    sa.s_opt = solve->add_option("--s", sa.s, "Matching-number promise");
    sa.t_opt = solve->add_option("--t", sa.t, "H_t-freeness parameter");
    solve->add_option("--precoloring", sa.precoloring, "Precoloring file");
    solve->add_option("--out", sa.out, "Output file (default stdout)");
    solve->add_flag("--trace", sa.trace, "Progress lines on stderr");
    solve->add_flag("--force", sa.force, "Keep going past a broken promise");
    solve->callback([&] { action = [&] { return cmd_solve(sa, threads, out, err); }; });

    GadgetArgs ga;
    auto* gadget = app.add_subcommand("gadget", "Generate constructions");
    gadget->fallthrough();
    gadget->require_subcommand(1);
    const std::vector<std::tuple<std::string, std::string, std::size_t>> gadget_kinds{
        {"ltimes", "G ⋉ H for files A B", 2},
        {"uplift-bounded", "K_r ⋉ H", 1},
        {"uplift-uniform", "complete (k+1)-uniform core ⋉ H", 1},
        {"uplift-precolor", "r precolored vertices ⋉ H; --cert receives the precoloring", 1},
        {"mwss", "weighted stable-set gadget", 1},
        {"g1", "gadget G1", 0},
        {"g2", "gadget G2", 0},
        {"reduce3col", "linear 3-uniform reduction of a degree-4 graph file", 1},
    };
    for (const auto& [name, help, arity] : gadget_kinds) {
        auto* sub = gadget->add_subcommand(name, help);
        sub->fallthrough();
        if (arity > 0)
            sub->add_option("inputs", ga.inputs, "Input files")->required()->expected(static_cast<int>(arity));
        sub->add_option("--out", ga.out, "Hypergraph output (default stdout)");
        sub->add_option("--cert", ga.cert, "Sidecar output");
        sub->add_option("--r", ga.r, "Number of colors")->check(CLI::Range(1U, 64U));
        sub->add_option("--k", ga.k, "Uniformity of the input");
        sub->callback([&, which = name] { action = [&, which] { return cmd_gadget(which, ga, out); }; });
    }

    CheckArgs ca;
    auto* check = app.add_subcommand("check", "Structural predicates");
    check->fallthrough();
    check->require_subcommand(1);
    const std::vector<std::pair<std::string, std::size_t>> check_kinds{
        {"linear", 1}, {"uniform", 1}, {"bounded", 1}, {"stable", 2}, {"coloring", 2}, {"htfree", 1}, {"matching", 1}};
    for (const auto& [name, arity] : check_kinds) {
        auto* sub = check->add_subcommand(name);
        sub->fallthrough();
        sub->add_option("inputs", ca.inputs, "Hypergraph file, then the vertex set or coloring file")
            ->required()
            ->expected(static_cast<int>(arity));
        if (name == "uniform" || name == "bounded")
            sub->add_option("--k", ca.k, "Edge size")->required();
        if (name == "htfree")
            sub->add_option("--t", ca.t, "H_t parameter")->required();
        if (name == "matching")
            sub->add_option("--s", ca.s, "Matching-number bound")->required();
        if (name == "coloring")
            sub->add_option("--r", ca.r, "Number of colors (default: largest used)");
        sub->callback([&, which = name] { action = [&, which] { return cmd_check(which, ca, out); }; });
    }

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Certificate and construction verifiers");
    verify->fallthrough();
    verify->require_subcommand(1);
    for (const std::string name : {"certificate", "g1", "reduction"}) {
        auto* sub = verify->add_subcommand(name);
        sub->fallthrough();
        sub->add_option("inputs", va.inputs,
                        name == "reduction" ? "Reduction output file, then the input graph file"
                                            : "Gadget file, then its sidecar")
            ->required()
            ->expected(2);
        if (name == "reduction") {
            sub->add_option("--cert", va.cert, "Reduction sidecar");
            sub->add_option("--coloring", va.coloring, "3-coloring of the input graph to lift");
        }
        sub->callback([&, which = name] { action = [&, which] { return cmd_verify(which, va, out); }; });
    }

    std::vector<const char*> argv;
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        return action ? action() : kExitInput;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
}

} // namespace hypercol::cli
