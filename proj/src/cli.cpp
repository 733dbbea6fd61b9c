#include "thicklab/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "thicklab/amalgamation.hpp"
#include "thicklab/certificate_io.hpp"
#include "thicklab/composer.hpp"
#include "thicklab/graph_io.hpp"
#include "thicklab/verify.hpp"

namespace thicklab {

namespace {

constexpr int kOk = 0;
constexpr int kInvalidInput = 1;
constexpr int kBudgetExhausted = 2;
constexpr int kInvariantViolation = 3;

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::vector<std::string> graph6;
    std::vector<std::string> files;
    std::string kind;
    std::string spec;
    std::optional<std::int64_t> budget_nodes;
    std::optional<double> budget_seconds;
    std::uint64_t seed = 1;
    int count = 50;
    int max_vertices = 10;
    int max_edges = 20;
    std::string format = "text";
    std::string out_path;
};

// flags > THICKNESS_LAB_BUDGET > defaults
Budget resolve_budget(const Options& o) {
    Budget b;
    if (const char* env = std::getenv("THICKNESS_LAB_BUDGET"); env != nullptr && *env != '\0') {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(env, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != std::string(env).size() || v <= 0) {
            throw InputError(std::string("THICKNESS_LAB_BUDGET must be a positive node count, got '") + env + "'");
        }
        b.nodes = v;
    }
    if (o.budget_nodes) {
        b.nodes = *o.budget_nodes;
    }
    if (o.budget_seconds) {
        b.seconds = *o.budget_seconds;
    }
    if (b.nodes <= 0 || !(b.seconds > 0.0)) {
        throw InputError("budget must be positive");
    }
    return b;
}

// Inline graph6 strings first, then files, in flag order.
std::vector<std::string> input_texts(const Options& o) {
    std::vector<std::string> texts = o.graph6;
    for (const auto& f : o.files) {
        texts.push_back(read_text_file(f));
    }
    return texts;
}

std::vector<Graph> input_graphs(const Options& o, std::size_t expected) {
    const auto texts = input_texts(o);
    if (texts.size() != expected) {
        throw InputError("expected " + std::to_string(expected) + " input graph(s), got " +
                         std::to_string(texts.size()));
    }
    std::vector<Graph> graphs;
    for (const auto& t : texts) {
        graphs.push_back(parse_graph_text(t));
    }
    return graphs;
}

AmalgamationSpec resolve_spec(const Options& o) {
    if (o.spec.empty()) {
        throw InputError("--spec is required");
    }
    std::string text = o.spec;
    const auto first = text.find_first_not_of(" \t");
    // "--kind edge --spec '0 1 0 1'" is shorthand for "--spec 'edge 0 1 0 1'"
    if (first != std::string::npos && (std::isdigit(static_cast<unsigned char>(text[first])) || text[first] == '-')) {
        if (o.kind.empty()) {
            throw InputError("spec without a kind needs --kind");
        }
        text = o.kind + " " + text;
    }
    const auto spec = parse_amalgamation_spec(text);
    if (!o.kind.empty() && parse_amalgamation_kind(o.kind) != spec.kind) {
        throw InputError("--kind " + o.kind + " does not match spec '" + o.spec + "'");
    }
    return spec;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed) {
        if (o.format == f) {
            return;
        }
    }
    throw InputError("format '" + o.format + "' is not available for this subcommand");
}

int run_thickness(const Options& o, std::ostream& out, std::ostream& err) {
    require_format(o, {"text"});
    const auto g = input_graphs(o, 1).front();
    const auto c = exact_thickness(g, resolve_budget(o));
    out << "theta=" << c.value << "\n"
        << "status=" << to_string(c.status) << "\n"
        << "lower_bound=" << c.lower_bound << "\n"
        << "lower_bound_kind=" << to_string(c.lower_bound_kind) << "\n"
        << "vertices=" << g.order() << "\n"
        << "edges=" << g.size() << "\n"
        << "nodes=" << c.nodes << "\n";
    if (!c.exact()) {
        err << "budget exhausted: thickness is between " << c.lower_bound << " and " << c.value << "\n";
        return kBudgetExhausted;
    }
    return kOk;
}

int run_decompose(const Options& o, std::ostream& out, std::ostream& err) {
    require_format(o, {"text"});
    const auto g = input_graphs(o, 1).front();
    const auto c = exact_thickness(g, resolve_budget(o));
    out << write_certificate(c);
    if (!c.exact()) {
        err << "budget exhausted: emitted a " << c.value << "-part decomposition without a matching lower bound\n";
    }
    return kOk;
}

int run_amalgamate(const Options& o, std::ostream& out, std::ostream&) {
    require_format(o, {"text"});
    const auto spec = resolve_spec(o);
    const auto graphs = input_graphs(o, 2);
    out << emit_graph6(amalgamate(graphs[0], graphs[1], spec).graph) << "\n";
    return kOk;
}

// Operands are decomposition/certificate text or graphs; graphs get solved.
PlanarDecomposition operand_decomposition(const std::string& text, const Budget& budget, std::ostream& err) {
    if (looks_like_decomposition(text)) {
        return read_decomposition(text).decomposition;
    }
    const auto c = exact_thickness(parse_graph_text(text), budget);
    if (!c.exact()) {
        err << "budget exhausted on an operand; composing its " << c.value << "-part heuristic decomposition\n";
    }
    return c.witness;
}

int run_compose(const Options& o, std::ostream& out, std::ostream& err) {
    require_format(o, {"text"});
    const auto spec = resolve_spec(o);
    const auto texts = input_texts(o);
    if (texts.size() != 2) {
        throw InputError("compose needs two operands, got " + std::to_string(texts.size()));
    }
    const auto budget = resolve_budget(o);
    const auto d1 = operand_decomposition(texts[0], budget, err);
    const auto d2 = operand_decomposition(texts[1], budget, err);
    out << write_composition(compose(d1, d2, spec));
    return kOk;
}

int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
    const std::string format = o.format == "text" ? "csv" : o.format;
    if (format != "csv" && format != "jsonl") {
        throw InputError("verify writes csv or jsonl, not '" + o.format + "'");
    }
    if (!o.graph6.empty() || !o.files.empty()) {
        throw InputError("verify generates its own instances and takes no input graphs");
    }
    CampaignConfig config;
    config.kind = parse_amalgamation_kind(o.kind.empty() ? "vertex" : o.kind);
    config.count = o.count;
    config.seed = o.seed;
    config.max_vertices = o.max_vertices;
    config.max_edges = o.max_edges;
    config.budget = resolve_budget(o);
    const auto reports = run_campaign(config);
    out << write_reports(reports, format);

    const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.passed(); });
    const auto unverified = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.verified(); });
    err << reports.size() << " instance(s), " << failed << " bound violation(s), " << unverified
        << " not fully verified\n";
    return failed ? kInvariantViolation : kOk;
}

}  // namespace

int exit_code_for(const std::exception& e) {
    return dynamic_cast<const InvariantViolation*>(&e) != nullptr ? kInvariantViolation : kInvalidInput;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graph thickness and amalgamation toolkit", "thicklab"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget-nodes", o.budget_nodes, "Solver search-node budget (default 2000000)");
        sub->add_option("--budget-seconds", o.budget_seconds, "Solver time budget in seconds (default 600)");
    };
    auto add_inputs = [&](CLI::App* sub) {
        sub->add_option("--graph6", o.graph6, "Inline graph6 input (repeatable)");
        sub->add_option("--file,files", o.files, "Input file (graph6, edge list or decomposition)")
            ->check(CLI::ExistingFile);
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format: text, csv or jsonl");
        sub->add_option("--out", o.out_path, "Write output to this file instead of stdout");
    };

    auto* thickness = app.add_subcommand("thickness", "Exact thickness of a graph");
    auto* decompose = app.add_subcommand("decompose", "Minimum planar decomposition as certificate text");
    auto* amalg = app.add_subcommand("amalgamate", "Build an amalgamation of two graphs (graph6 output)");
    auto* comp = app.add_subcommand("compose", "Compose operand decompositions into one for the amalgam");
    auto* verify = app.add_subcommand("verify", "Run a seeded bound-verification campaign");

    for (auto* sub : {thickness, decompose, amalg, comp}) {
        add_inputs(sub);
        add_common(sub);
        add_budget(sub);
    }
    for (auto* sub : {amalg, comp}) {
        sub->add_option("--kind", o.kind, "Amalgamation kind: vertex, 2vertex, edge or bar");
        sub->add_option("--spec", o.spec, "Amalgamation spec, e.g. \"vertex 0 0\"");
    }
    add_common(verify);
    add_budget(verify);
    verify->add_option("--kind", o.kind, "Amalgamation kind: vertex, 2vertex, edge or bar");
    verify->add_option("--count", o.count, "Number of instances");
    verify->add_option("--seed", o.seed, "Generator seed");
    verify->add_option("--max-vertices", o.max_vertices, "Operand vertex cap");
    verify->add_option("--max-edges", o.max_edges, "Operand edge cap");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }

    std::ostringstream buffer;
    int code = kOk;
    try {
        if (thickness->parsed()) {
            code = run_thickness(o, buffer, err);
        } else if (decompose->parsed()) {
            code = run_decompose(o, buffer, err);
        } else if (amalg->parsed()) {
            code = run_amalgamate(o, buffer, err);
        } else if (comp->parsed()) {
            code = run_compose(o, buffer, err);
        } else {
            code = run_verify(o, buffer, err);
        }
    } catch (const std::exception& e) {
        code = exit_code_for(e);
        err << (code == kInvariantViolation ? "invariant violation: " : "error: ") << e.what() << "\n";
        return code;
    }

    if (o.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.out_path, std::ios::binary);
        file << buffer.str();
        if (!file) {
            err << "error: cannot write " << o.out_path << "\n";
            return kInvalidInput;
        }
    }
    return code;
}

}  // namespace thicklab
