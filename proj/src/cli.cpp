#include "ic/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>

#include "ic/census.hpp"
#include "ic/errors.hpp"
#include "ic/families.hpp"
#include "ic/formulas.hpp"
#include "ic/game.hpp"
#include "ic/graph6.hpp"
#include "ic/json_io.hpp"
#include "ic/oracle.hpp"
#include "ic/recognition.hpp"

namespace ic {

namespace {

struct Source {
    std::string input;
    std::string g6;
    std::string family;
    int n = 0;
    int variant = 0;
    std::string intra = "empty";
};

struct Loaded {
    Graph g;
    std::optional<ClusterPartition> partition;
    std::optional<FamilyTag> tag;
};

void add_source(CLI::App* sub, Source& s) {
    auto* in = sub->add_option("--input", s.input, "graph6 file holding one graph");
    auto* code = sub->add_option("--g6", s.g6, "inline graph6 code");
    auto* fam = sub->add_option("--family", s.family, "H, G, E, F, Fo, Fe or Gs");
    sub->add_option("--n", s.n, "vertex count for --family");
    sub->add_option("--variant", s.variant, "member index for F, Fo, Fe, Gs");
    sub->add_option("--intra", s.intra, "intra-cluster pattern for F, Fo, Fe")->check(CLI::IsMember({"empty", "full"}));
    in->excludes(code)->excludes(fam);
    code->excludes(fam);
}

IntraPattern intra_of(const std::string& name) { return name == "full" ? IntraPattern::full() : IntraPattern::empty(); }

Loaded load(const Source& s) {
    const int given = !s.input.empty() + !s.g6.empty() + !s.family.empty();
    if (given != 1) throw InputError("give exactly one of --input, --g6, --family");
    if (!s.family.empty()) {
        FamilyTag tag = parse_family_tag(s.family);
        BuiltBraid b = build_family({tag, s.n, s.variant}, intra_of(s.intra));
        return {std::move(b.graph), std::move(b.partition), tag};
    }
    if (!s.g6.empty()) return {parse_graph6(s.g6), std::nullopt, std::nullopt};
    std::ifstream file(s.input);
    if (!file) throw InputError("cannot open " + s.input);
    auto graphs = read_graph6_stream(file);
    if (graphs.size() != 1) throw InputError(s.input + " holds " + std::to_string(graphs.size()) + " graphs, expected 1");
    return {std::move(graphs.front()), std::nullopt, std::nullopt};
}

bool is_path_tag(FamilyTag t) { return t == FamilyTag::F || t == FamilyTag::F_odd || t == FamilyTag::F_even; }

PathParity parse_parity(const std::string& text) {
    if (text == "odd") return PathParity::odd;
    if (text == "even") return PathParity::even;
    return PathParity::all;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n' << std::flush; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Induced cycle and path census, braid recognition, typical-game solver"};
    app.require_subcommand(1);
    unsigned threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = all cores)");

    Source src;

    auto* construct = app.add_subcommand("construct", "build a family member");
    add_source(construct, src);
    std::string out_format = "g6";
    construct->add_option("--out", out_format, "g6 or json")->check(CLI::IsMember({"g6", "json"}));

    auto* count = app.add_subcommand("count", "induced cycle census");
    add_source(count, src);
    std::optional<int> through;
    bool use_oracle = false;
    count->add_option("--vertex", through, "only cycles through this vertex");
    count->add_flag("--oracle", use_oracle, "use the subset oracle (n <= 24)");

    auto* paths = app.add_subcommand("paths", "induced x-y path census");
    add_source(paths, src);
    std::optional<int> px;
    std::optional<int> py;
    bool want_max = false;
    bool want_tree = false;
    std::string parity = "all";
    paths->add_option("--x", px, "first endpoint");
    paths->add_option("--y", py, "second endpoint");
    paths->add_flag("--max", want_max, "maximise over all pairs");
    paths->add_flag("--tree", want_tree, "add x-y path tree statistics");
    paths->add_option("--parity", parity, "all, odd or even")->check(CLI::IsMember({"all", "odd", "even"}));

    auto* recognize = app.add_subcommand("recognize", "verify or discover braid structure");
    add_source(recognize, src);
    std::string partition_text;
    std::string expect;
    bool want_braids = false;
    recognize->add_option("--partition", partition_text, "partition JSON to verify");
    recognize->add_option("--expect", expect, "required family tag (exit 3 otherwise)");
    recognize->add_flag("--braids", want_braids, "list maximal 3-braids");

    auto* game = app.add_subcommand("game", "solve the w-typical game from v");
    add_source(game, src);
    int gv = 0;
    int gw = 0;
    game->add_option("--v", gv, "start vertex")->required();
    game->add_option("--w", gw, "target vertex")->required();

    auto* atypical = app.add_subcommand("atypical", "classify every vertex against v");
    add_source(atypical, src);
    int av = 0;
    atypical->add_option("--v", av, "start vertex")->required();

    auto* verify = app.add_subcommand("verify", "exhaustive sweep over labelled graphs");
    int vn = 0;
    std::string quantity = "p2";
    SweepOptions sweep;
    std::optional<int> one_shard;
    std::optional<std::string> expect_max;
    bool uniqueness = false;
    verify->add_option("--n", vn, "vertex count")->required();
    verify->add_option("--quantity", quantity, "m, m_odd, m_even, m_odd_holes, p2, p2_odd, p2_even");
    verify->add_option("--shards", sweep.shards, "split the code space into K shards");
    verify->add_option("--shard", one_shard, "run only shard I");
    verify->add_flag("--long", sweep.allow_long, "allow n = 8");
    verify->add_option("--expect-max", expect_max, "required maximum (exit 3 otherwise)");
    verify->add_flag("--uniqueness", uniqueness, "check every p2-extremal pair is a path-family braid");

    auto* formula = app.add_subcommand("formula", "evaluate a closed form");
    std::string fname;
    int fn = 0;
    int fd = 0;
    formula->add_option("--name", fname, "f2, f2o, f2e, m_lower, vertex_bound, short_mass")
        ->required()
        ->check(CLI::IsMember({"f2", "f2o", "f2e", "m_lower", "vertex_bound", "short_mass"}));
    formula->add_option("--n", fn, "vertex count")->required();
    formula->add_option("--d", fd, "degree for vertex_bound");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sub->help();
        return kExitInput;
    }

    const CensusOptions census{threads};
    try {
        if (construct->parsed()) {
            if (src.family.empty()) throw InputError("construct needs --family and --n");
            Loaded l = load(src);
            if (out_format == "g6") {
                out << to_graph6(l.g) << '\n';
            } else {
                Json j;
                j["graph6"] = to_graph6(l.g);
                j["partition"] = to_json(*l.partition);
                emit(out, j);
            }
            return kExitOk;
        }
        if (count->parsed()) {
            Loaded l = load(src);
            CycleCensus c = through ? count_cycles_through(l.g, *through, census) : use_oracle ? slow_census(l.g) : count_induced_cycles(l.g, census);
            Json j = to_json(c);
            if (through) j["vertex"] = *through;
            emit(out, j);
            return kExitOk;
        }
        if (paths->parsed()) {
            Loaded l = load(src);
            if (want_max) {
                PathMax m = p2_max(l.g, parse_parity(parity), census);
                Json j;
                j["parity"] = parity;
                j["value"] = to_string(m.value);
                j["x"] = m.x;
                j["y"] = m.y;
                emit(out, j);
                return kExitOk;
            }
            if (l.tag && is_path_tag(*l.tag)) {
                if (!px) px = 0;
                if (!py) py = l.g.order() - 1;
            }
            if (!px || !py) throw InputError("paths needs --x and --y (or --max)");
            Json j = to_json(count_induced_st_paths(l.g, *px, *py), *px, *py);
            if (want_tree) j["tree"] = to_json(path_tree_stats(l.g, *px, *py));
            emit(out, j);
            return kExitOk;
        }
        if (recognize->parsed()) {
            Loaded l = load(src);
            std::optional<ClusterPartition> p;
            if (!partition_text.empty()) {
                Json pj;
                try {
                    pj = Json::parse(partition_text);
                } catch (const nlohmann::json::exception& e) {
                    throw InputError(std::string("bad partition JSON: ") + e.what());
                }
                p = partition_from_json(pj);
            } else if (l.partition) {
                p = l.partition;
            } else {
                p = discover_cyclic_braid(l.g);
            }
            Json j;
            std::vector<std::string> tags;
            if (p) {
                RecognitionReport r = verify_braid(l.g, *p);
                if (r.verified && p->cyclic) {
                    // other partitions of the same graph may satisfy more families
                    r.matching = matching_families(l.g);
                    if (!r.matching.empty() && !r.family) r.family = FamilyId{r.matching.front(), l.g.order(), 0};
                }
                for (FamilyTag t : r.matching) tags.push_back(to_string(t));
                j = to_json(r);
            } else {
                j["verified"] = false;
                j["family"] = nullptr;
                j["matching"] = Json::array();
                j["failure_witness"] = nullptr;
                j["partition"] = nullptr;
                j["note"] = "no cyclic braid partition found";
            }
            if (want_braids) {
                Json list = Json::array();
                for (const auto& b : maximal_3braids(l.g)) list.push_back(to_json(b));
                j["maximal_3braids"] = list;
            }
            emit(out, j);
            if (!expect.empty()) {
                std::string want = to_string(parse_family_tag(expect));
                if (std::find(tags.begin(), tags.end(), want) == tags.end()) {
                    err << "expected family " << want << " not matched\n";
                    return kExitMismatch;
                }
            }
            return kExitOk;
        }
        if (game->parsed()) {
            Loaded l = load(src);
            emit(out, to_json(solve_typical_game(l.g, gv, gw)));
            return kExitOk;
        }
        if (atypical->parsed()) {
            Loaded l = load(src);
            emit(out, to_json(atypical_set(l.g, av, census)));
            return kExitOk;
        }
        if (verify->parsed()) {
            sweep.threads = threads;
            sweep.shard = one_shard;
            if (const char* dir = std::getenv("IC_CHECKPOINT_DIR")) sweep.checkpoint_dir = dir;
            Quantity q = parse_quantity(quantity);
            Count reached = 0;
            bool failed = false;
            if (uniqueness) {
                if (q != Quantity::p2) throw InputError("--uniqueness applies to --quantity p2");
                UniquenessReport r = verify_extremal_uniqueness(vn, sweep);
                emit(out, to_json(r));
                reached = r.max;
                failed = !r.ok();
            } else {
                SweepResult r = exhaustive_max(vn, q, sweep);
                emit(out, to_json(r));
                reached = r.max;
            }
            if (expect_max && *expect_max != to_string(reached)) {
                err << "expected max " << *expect_max << ", got " << to_string(reached) << '\n';
                return kExitMismatch;
            }
            if (failed) {
                err << "extremal pair outside the path family\n";
                return kExitMismatch;
            }
            return kExitOk;
        }
        if (formula->parsed()) {
            if (fname == "vertex_bound") {
                out << std::setprecision(15) << vertex_cycle_bound(fn, fd) << '\n';
                return kExitOk;
            }
            ExactCount v = fname == "f2"         ? f2(fn)
                           : fname == "f2o"      ? f2_odd(fn)
                           : fname == "f2e"      ? f2_even(fn)
                           : fname == "m_lower"  ? m_lower(fn)
                                                 : short_cycle_mass(fn);
            out << v.str() << '\n';
            return kExitOk;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const UnsupportedError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}

}  // namespace ic
