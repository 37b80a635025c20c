#include "mui/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "mui/classifier.hpp"
#include "mui/families.hpp"
#include "mui/grid_search.hpp"
#include "mui/pipeline.hpp"

namespace mui {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in) {
    std::ostringstream ss;
    if (path.empty() || path == "-") {
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open " + path);
    ss << f.rdbuf();
    return ss.str();
}

GraphFormat pick_format(const std::string& flag, const std::string& text) {
    if (flag == "graph6") return GraphFormat::graph6;
    if (flag == "edge-list") return GraphFormat::edge_list;
    return sniff_format(text);
}

Graph load_graph(const std::string& path, const std::string& format, std::istream& in) {
    std::string text = read_source(path, in);
    return parse_graph(text, pick_format(format, text));
}

std::string names(const Graph& g, const std::vector<int>& vs) {
    std::string s;
    for (int v : vs) {
        if (!s.empty()) s += " ";
        s += g.name(v);
    }
    return s;
}

Json witness_json(const Witness& w, const Graph& g) {
    Json j;
    j["family"] = w.family.display();
    Json emb = Json::array();
    for (int v : w.embedding.map) emb.push_back(g.has_labels() ? Json(g.labels()[v]) : Json(v));
    j["embedding"] = std::move(emb);
    return j;
}

// Reads a representation document, either bare or wrapped as
// {"representation": ...}. Labelled entries are matched to g by label.
Representation load_representation(const std::string& text, const Graph& g) {
    Json doc = Json::parse(text);
    if (doc.contains("representation")) doc = doc["representation"];
    Representation rep = representation_from_json(doc);
    if (!g.has_labels()) return rep;
    const auto& vs = doc.at("vertices");
    std::map<std::string, int> by_label;
    for (int v = 0; v < g.n(); ++v) by_label[g.labels()[v]] = v;
    Representation out = rep;
    for (const auto& e : vs) {
        if (!e.contains("label")) return rep;
        auto it = by_label.find(e["label"].get<std::string>());
        if (it == by_label.end()) return rep;
        out[it->second] = rep[e.at("id").get<int>()];
    }
    return out;
}

int run_classify(const Graph& g, bool json, std::ostream& out) {
    auto report = classify(g);
    if (json) {
        out << to_json(report, g).dump(2) << "\n";
        return 0;
    }
    out << "class=" << to_string(report.label) << "\n";
    if (!report.interval_obstruction.empty()) out << "obstruction=" << report.interval_obstruction << "\n";
    for (const auto& [cls, w] : report.witnesses) {
        std::vector<int> orig;
        for (int x : w.embedding.map) orig.push_back(report.twin_reduction.representative[x]);
        out << "outside " << to_string(cls) << ": " << w.family.display() << " at " << names(g, orig) << "\n";
    }
    return 0;
}

bool obeys(const TypeCensus& c, const std::string& target) {
    if (target == "unit") return c.open == 0 && c.closed_open == 0 && c.open_closed == 0;
    if (target == "upm") return c.closed_open == 0 && c.open_closed == 0;
    if (target == "almost-mixed") return c.open_closed == 0;
    return true;
}

int emit_rep(const Representation& rep, const Graph& g, const std::string& target, const std::string& out_path,
             std::ostream& out, std::ostream& err) {
    auto ok = realizes(rep, g);
    if (!ok.ok || !obeys(type_census(rep), target)) {
        err << "internal error: representation failed its self-check\n";
        return 2;
    }
    std::string text = to_json(rep, &g).dump(2) + "\n";
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw UsageError("cannot write " + out_path);
        f << text;
    }
    return 0;
}

int run_represent(const Graph& g, const std::string& target, const std::string& out_path,
                  const std::string& trace_path, std::ostream& out, std::ostream& err) {
    Json fail;
    fail["member"] = false;
    fail["target"] = target;
    if (target == "almost-mixed") {
        auto res = recognize_and_represent(g);
        if (!trace_path.empty()) {
            std::ofstream f(trace_path);
            if (!f) throw UsageError("cannot write " + trace_path);
            f << to_json(res.trace).dump(2) << "\n";
        }
        if (res.member) return emit_rep(*res.rep, g, target, out_path, out, err);
        if (res.witness) {
            fail["witness"] = {to_json(res.witness->first, &g), to_json(res.witness->second, &g)};
        } else if (res.mixed_witness) {
            fail["witness"] = witness_json(*res.mixed_witness, g);
        }
        out << fail.dump(2) << "\n";
        return 1;
    }
    TypeSet types = TypeSet::all();
    ClassLabel cls = ClassLabel::Mixed;
    if (target == "unit") {
        types = TypeSet::unit();
        cls = ClassLabel::Unit;
    } else if (target == "upm") {
        types = TypeSet::upm();
        cls = ClassLabel::UPM;
    }
    auto tw = reduce_twins(g);
    if (auto rep = synthesize(tw.reduced, types)) return emit_rep(expand_twins(tw, *rep), g, target, out_path, out, err);
    if (auto w = screen(tw.reduced, cls)) {
        for (int& v : w->embedding.map) v = tw.representative[v];
        fail["witness"] = witness_json(*w, g);
    }
    out << fail.dump(2) << "\n";
    return 1;
}

int run_family(const std::string& name, const std::vector<int>& params, bool with_rep, const std::string& format,
               std::ostream& out, std::ostream& err) {
    auto fam = family_from_name(name);
    if (!fam) throw UsageError("unknown family: " + name);
    if (static_cast<int>(params.size()) != param_count(*fam))
        throw UsageError("family " + name + " takes " + std::to_string(param_count(*fam)) + " parameter(s)");
    FamilyId id{*fam, params.size() > 0 ? params[0] : 0, params.size() > 1 ? params[1] : 0};
    try {
        check_params(id);
    } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
    }
    auto inst = generate(id);
    GraphFormat fmt = format == "graph6" ? GraphFormat::graph6 : GraphFormat::edge_list;
    std::string graph_text = emit_graph(inst.graph, fmt);
    if (!with_rep) {
        out << graph_text;
        if (graph_text.empty() || graph_text.back() != '\n') out << "\n";
        return 0;
    }
    if (!inst.canonical_rep) {
        err << id.display() << " has no canonical representation\n";
        return 1;
    }
    if (!realizes(*inst.canonical_rep, inst.graph).ok) {
        err << "internal error: canonical representation failed its self-check\n";
        return 2;
    }
    Json doc;
    doc["family"] = id.display();
    doc["graph"] = graph_text;
    doc["representation"] = to_json(*inst.canonical_rep, &inst.graph);
    out << doc.dump(2) << "\n";
    return 0;
}

int run_check(const Graph& g, const std::string& rep_text, std::ostream& out) {
    Representation rep = load_representation(rep_text, g);
    if (rep.size() != g.n()) throw UsageError("representation has " + std::to_string(rep.size()) +
                                              " intervals for " + std::to_string(g.n()) + " vertices");
    auto r = realizes(rep, g);
    if (r.ok) {
        out << "ok\n";
        return 0;
    }
    out << describe(*r.violation, g) << "\n";
    return 1;
}

int run_crosscheck(std::istream& in, int max_n, bool json, std::ostream& out, std::ostream& err) {
    struct Row {
        int graphs = 0;
        int members = 0;
        std::map<ClassLabel, int> labels;
    };
    std::map<int, Row> rows;
    std::vector<std::string> disagreements;
    int skipped = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        Graph g;
        try {
            g = parse_graph(line, GraphFormat::graph6);
        } catch (const ParseError& e) {
            err << "line " << line_no << ": " << e.what() << "\n";
            return 2;
        }
        if (max_n > 0 && g.n() > max_n) {
            ++skipped;
            continue;
        }
        auto label = classify(g).label;
        bool member = recognize_and_represent(g).member;
        Row& row = rows[g.n()];
        ++row.graphs;
        ++row.labels[label];
        row.members += member;
        if (member != contains(label, ClassLabel::AlmostMixed)) disagreements.push_back(line);
    }
    const ClassLabel order[] = {ClassLabel::NotInterval, ClassLabel::IntervalOnly, ClassLabel::Mixed,
                                ClassLabel::AlmostMixed, ClassLabel::UPM,          ClassLabel::Unit};
    if (json) {
        Json j;
        Json rs = Json::array();
        for (const auto& [n, row] : rows) {
            Json r;
            r["n"] = n;
            r["graphs"] = row.graphs;
            Json ls;
            for (ClassLabel c : order) ls[to_string(c)] = row.labels.count(c) ? row.labels.at(c) : 0;
            r["labels"] = std::move(ls);
            r["pipeline_members"] = row.members;
            rs.push_back(std::move(r));
        }
        j["rows"] = std::move(rs);
        j["skipped"] = skipped;
        j["disagreements"] = disagreements;
        out << j.dump(2) << "\n";
    } else {
        out << std::left << std::setw(4) << "n" << std::setw(8) << "graphs";
        for (ClassLabel c : order) out << std::setw(13) << to_string(c);
        out << "members\n";
        for (const auto& [n, row] : rows) {
            out << std::setw(4) << n << std::setw(8) << row.graphs;
            for (ClassLabel c : order) out << std::setw(13) << (row.labels.count(c) ? row.labels.at(c) : 0);
            out << row.members << "\n";
        }
        if (skipped) out << "skipped " << skipped << " graph(s) above --max-n\n";
        out << "disagreements " << disagreements.size() << "\n";
        for (const auto& d : disagreements) out << "  " << d << "\n";
    }
    return disagreements.empty() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mixed unit interval graph toolkit"};
    app.name("mui");
    app.require_subcommand(1, 1);

    std::string format = "auto";
    bool json = false;
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Input graph format")->check(CLI::IsMember({"auto", "graph6", "edge-list"}));
    };

    std::string graph_path;
    auto* classify_cmd = app.add_subcommand("classify", "Place a graph in the class hierarchy");
    classify_cmd->add_option("graph", graph_path, "Graph file, - or absent for stdin");
    classify_cmd->add_flag("--json", json, "Emit the report as JSON");
    add_format(classify_cmd);

    std::string target = "almost-mixed", out_path, trace_path;
    auto* represent_cmd = app.add_subcommand("represent", "Build a representation for a target class");
    represent_cmd->add_option("graph", graph_path, "Graph file, - or absent for stdin");
    represent_cmd->add_option("--target", target, "Target class")
        ->check(CLI::IsMember({"unit", "upm", "almost-mixed", "mixed"}));
    represent_cmd->add_option("--out", out_path, "Write the representation here instead of stdout");
    represent_cmd->add_option("--trace", trace_path, "Write the almost-mixed pipeline trace here");
    add_format(represent_cmd);

    std::string family;
    std::vector<int> params;
    bool with_rep = false;
    std::string out_format = "edge-list";
    auto* family_cmd = app.add_subcommand("family", "Generate a named graph or family member");
    family_cmd->add_option("name", family, "Family name such as a, bprime, c, fig9")->required();
    family_cmd->add_option("params", params, "Integer parameters");
    family_cmd->add_flag("--rep", with_rep, "Emit the graph together with its canonical representation");
    family_cmd->add_option("--format", out_format, "Output graph format")
        ->check(CLI::IsMember({"graph6", "edge-list"}));

    std::string rep_path;
    auto* check_cmd = app.add_subcommand("check", "Check that a representation realizes a graph");
    check_cmd->add_option("graph", graph_path, "Graph file")->required();
    check_cmd->add_option("rep", rep_path, "Representation JSON file, - for stdin")->required();
    add_format(check_cmd);

    int max_n = 0;
    auto* crosscheck_cmd = app.add_subcommand("crosscheck", "Compare both almost-mixed recognizers on a graph6 stream");
    crosscheck_cmd->add_option("--max-n", max_n, "Skip graphs with more vertices (0: no limit)");
    crosscheck_cmd->add_flag("--json", json, "Emit the summary as JSON");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*classify_cmd) return run_classify(load_graph(graph_path, format, in), json, out);
        if (*represent_cmd)
            return run_represent(load_graph(graph_path, format, in), target, out_path, trace_path, out, err);
        if (*family_cmd) return run_family(family, params, with_rep, out_format, out, err);
        if (*check_cmd) {
            if (graph_path == "-" && rep_path == "-") throw UsageError("graph and representation cannot both be stdin");
            Graph g = load_graph(graph_path, format, in);
            return run_check(g, read_source(rep_path, in), out);
        }
        if (*crosscheck_cmd) return run_crosscheck(in, max_n, json, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "bad representation JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace mui
