#include "mcr/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcr/attack_sim.hpp"
#include "mcr/core_lattice.hpp"
#include "mcr/errors.hpp"
#include "mcr/metrics.hpp"
#include "mcr/multicorerank.hpp"
#include "mcr/multiplex_network.hpp"

namespace mcr::cli {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Formatting helpers

/// Shortest representation that parses back to the same double.
std::string fmt(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

std::string fmt(std::size_t value) { return std::to_string(value); }

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i != 0) out << ',';
        out << csv_quote(fields[i]);
    }
    out << '\n';
}

/// Splits one CSV line, honoring double-quote escaping.
std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + out_path + "'");
    out << text;
}

// ---------------------------------------------------------------------------
// Shared option bundles

struct CommonOpts {
    std::string input;
    std::string out_path;
    std::string format = "csv";

    bool is_json() const { return format == "json"; }
};

struct BudgetOpts {
    std::uint32_t max_level = 0;
    std::size_t max_cores = 1'000'000;
    double time_budget = std::numeric_limits<double>::infinity();

    LatticeBudget to_budget() const { return {max_level, max_cores, time_budget}; }
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool input_required = true) {
    auto* in = cmd->add_option("--input,-i", opts.input, "input file path");
    if (input_required) in->required();
    cmd->add_option("--out,-o", opts.out_path, "output path (default: stdout)");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

void add_budget(CLI::App* cmd, BudgetOpts& opts) {
    cmd->add_option("--max-level", opts.max_level,
                    "lattice level budget (0 = natural bound)")
        ->capture_default_str();
    cmd->add_option("--max-cores", opts.max_cores, "lattice core-count budget")
        ->capture_default_str();
    cmd->add_option("--time-budget", opts.time_budget, "lattice wall-clock budget in seconds");
}

RankingSource parse_ranking(const std::string& name) {
    if (name == "multicorerank") return RankingSource::kMultiCoreRank;
    if (name == "degree") return RankingSource::kDegree;
    if (name == "eigenvector") return RankingSource::kEigenvector;
    if (name == "betweenness") return RankingSource::kBetweenness;
    if (name == "closeness") return RankingSource::kCloseness;
    throw std::invalid_argument("unknown ranking '" + name + "'");
}

std::vector<double> parse_fractions(const std::string& spec) {
    std::vector<double> fractions;
    std::stringstream stream(spec);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (token.empty()) continue;
        std::size_t used = 0;
        const double f = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument("bad fraction '" + token + "'");
        fractions.push_back(f);
    }
    if (fractions.empty()) throw std::invalid_argument("no fractions given");
    return fractions;
}

// ---------------------------------------------------------------------------
// Subcommand bodies

int do_info(const CommonOpts& common) {
    const MultiplexNetwork net = load_network(common.input);
    std::ostringstream text;
    if (common.is_json()) {
        json j;
        j["nodes"] = net.node_count();
        j["layers"] = net.layer_count();
        j["edges"] = net.total_edge_count();
        j["layer_detail"] = json::array();
        for (std::size_t a = 0; a < net.layer_count(); ++a) {
            const auto deg = net.degree_vector(static_cast<LayerIndex>(a));
            const auto [mn, mx] = std::minmax_element(deg.begin(), deg.end());
            json d;
            d["label"] = net.layer_label(static_cast<LayerIndex>(a));
            d["edges"] = net.edge_count(static_cast<LayerIndex>(a));
            d["min_degree"] = *mn;
            d["max_degree"] = *mx;
            d["mean_degree"] =
                2.0 * static_cast<double>(net.edge_count(static_cast<LayerIndex>(a))) /
                static_cast<double>(net.node_count());
            j["layer_detail"].push_back(d);
        }
        text << j.dump(2) << '\n';
    } else {
        csv_row(text, {"scope", "label", "nodes", "layers", "edges", "min_degree", "max_degree",
                       "mean_degree"});
        csv_row(text, {"network", "", fmt(net.node_count()), fmt(net.layer_count()),
                       fmt(net.total_edge_count()), "", "", ""});
        for (std::size_t a = 0; a < net.layer_count(); ++a) {
            const auto layer = static_cast<LayerIndex>(a);
            const auto deg = net.degree_vector(layer);
            const auto [mn, mx] = std::minmax_element(deg.begin(), deg.end());
            csv_row(text, {"layer", net.layer_label(layer), fmt(net.node_count()), "",
                           fmt(net.edge_count(layer)), fmt(std::size_t{*mn}), fmt(std::size_t{*mx}),
                           fmt(2.0 * static_cast<double>(net.edge_count(layer)) /
                               static_cast<double>(net.node_count()))});
        }
    }
    write_output(text.str(), common.out_path);
    return kExitSuccess;
}

std::vector<std::string> sorted_member_labels(const Core& core, const MultiplexNetwork& net) {
    std::vector<std::string> labels;
    labels.reserve(core.members.size());
    core.members.for_each([&](NodeIndex v) { labels.push_back(net.node_label(v)); });
    std::sort(labels.begin(), labels.end());
    return labels;
}

int do_decompose(const CommonOpts& common, const BudgetOpts& budget) {
    const MultiplexNetwork net = load_network(common.input);
    const CoreLattice lattice = build_lattice(net, budget.to_budget());

    std::ostringstream text;
    if (common.is_json()) {
        json records = json::array();
        for (std::size_t level = 0; level < lattice.level_count(); ++level) {
            for (CoreId id : lattice.cores_at_level(level)) {
                const Core& core = lattice.core(id);
                json r;
                r["level"] = level;
                r["vector"] = std::vector<std::uint32_t>(core.vector.components().begin(),
                                                         core.vector.components().end());
                r["size"] = core.members.size();
                r["members"] = sorted_member_labels(core, net);
                json fathers = json::array();
                for (CoreId f : core.fathers)
                    fathers.push_back(std::vector<std::uint32_t>(
                        lattice.core(f).vector.components().begin(),
                        lattice.core(f).vector.components().end()));
                r["fathers"] = fathers;
                records.push_back(r);
            }
        }
        text << records.dump(2) << '\n';
    } else {
        csv_row(text, {"level", "vector", "size", "members", "fathers"});
        for (std::size_t level = 0; level < lattice.level_count(); ++level) {
            for (CoreId id : lattice.cores_at_level(level)) {
                const Core& core = lattice.core(id);
                std::string members;
                for (const auto& label : sorted_member_labels(core, net)) {
                    if (!members.empty()) members += ' ';
                    members += label;
                }
                std::string fathers;
                for (CoreId f : core.fathers) {
                    if (!fathers.empty()) fathers += ' ';
                    fathers += lattice.core(f).vector.to_string();
                }
                csv_row(text, {fmt(level), core.vector.to_string(), fmt(core.members.size()),
                               members, fathers});
            }
        }
    }
    write_output(text.str(), common.out_path);
    return kExitSuccess;
}

int do_rank(const CommonOpts& common, const BudgetOpts& budget) {
    const MultiplexNetwork net = load_network(common.input);
    const auto ranking = rank(propagate(build_lattice(net, budget.to_budget())), net);

    std::ostringstream text;
    if (common.is_json()) {
        json records = json::array();
        for (const RankedNode& r : ranking) {
            json row;
            row["node_label"] = net.node_label(r.node);
            row["deepest_level"] = r.deepest_level;
            row["log_influence"] = r.log_influence;
            row["rank"] = r.average_rank;
            records.push_back(row);
        }
        text << records.dump(2) << '\n';
    } else {
        csv_row(text, {"node_label", "deepest_level", "log_influence", "rank"});
        for (const RankedNode& r : ranking)
            csv_row(text, {net.node_label(r.node), fmt(std::size_t{r.deepest_level}),
                           fmt(r.log_influence), fmt(r.average_rank)});
    }
    write_output(text.str(), common.out_path);
    return kExitSuccess;
}

int do_centrality(const CommonOpts& common, const BudgetOpts& budget, const std::string& measures,
                  double tolerance, std::size_t max_iters) {
    const MultiplexNetwork net = load_network(common.input);

    std::vector<std::string> names;
    std::stringstream stream(measures);
    std::string token;
    while (std::getline(stream, token, ','))
        if (!token.empty()) names.push_back(token);
    if (names.empty()) throw std::invalid_argument("no measures requested");

    std::vector<std::vector<double>> columns;
    for (const std::string& name : names) {
        if (name == "degree") {
            columns.push_back(degree_centrality(net).aggregate);
        } else if (name == "eigenvector") {
            columns.push_back(eigenvector_centrality(net, tolerance, max_iters).aggregate);
        } else if (name == "betweenness") {
            columns.push_back(betweenness_centrality(net).aggregate);
        } else if (name == "closeness") {
            columns.push_back(closeness_centrality(net).aggregate);
        } else if (name == "multicorerank") {
            const auto ranking = rank(propagate(build_lattice(net, budget.to_budget())), net);
            columns.push_back(rank_scores(ranking, net.node_count()));
        } else {
            throw std::invalid_argument("unknown measure '" + name + "'");
        }
    }

    std::ostringstream text;
    if (common.is_json()) {
        json records = json::array();
        for (std::size_t v = 0; v < net.node_count(); ++v) {
            json row;
            row["node_label"] = net.node_label(static_cast<NodeIndex>(v));
            for (std::size_t m = 0; m < names.size(); ++m) row[names[m]] = columns[m][v];
            records.push_back(row);
        }
        text << records.dump(2) << '\n';
    } else {
        std::vector<std::string> header = {"node_label"};
        header.insert(header.end(), names.begin(), names.end());
        csv_row(text, header);
        for (std::size_t v = 0; v < net.node_count(); ++v) {
            std::vector<std::string> row = {net.node_label(static_cast<NodeIndex>(v))};
            for (const auto& column : columns) row.push_back(fmt(column[v]));
            csv_row(text, row);
        }
    }
    write_output(text.str(), common.out_path);
    return kExitSuccess;
}

int do_assortativity(const CommonOpts& common) {
    const MultiplexNetwork net = load_network(common.input);
    const AssortativityReport report = assortativity(net);

    std::ostringstream text;
    if (common.is_json()) {
        json j;
        j["pairs"] = json::array();
        for (const auto& pair : report.pairwise) {
            json p;
            p["layer_a"] = net.layer_label(pair.alpha);
            p["layer_b"] = net.layer_label(pair.beta);
            if (pair.correlation)
                p["correlation"] = *pair.correlation;
            else
                p["correlation"] = nullptr;
            j["pairs"].push_back(p);
        }
        j["global"] = report.global;
        text << j.dump(2) << '\n';
    } else {
        csv_row(text, {"layer_a", "layer_b", "correlation"});
        for (const auto& pair : report.pairwise)
            csv_row(text, {net.layer_label(pair.alpha), net.layer_label(pair.beta),
                           pair.correlation ? fmt(*pair.correlation) : ""});
        csv_row(text, {"global", "", fmt(report.global)});
    }
    write_output(text.str(), common.out_path);
    return kExitSuccess;
}

int do_compare(const CommonOpts& common, const BudgetOpts& budget, double tolerance,
               std::size_t max_iters) {
    const MultiplexNetwork net = load_network(common.input);
    const auto ranking = rank(propagate(build_lattice(net, budget.to_budget())), net);
    const auto mcr_scores = rank_scores(ranking, net.node_count());

    const std::vector<std::pair<std::string, std::vector<double>>> baselines = {
        {"degree", degree_centrality(net).aggregate},
        {"eigenvector", eigenvector_centrality(net, tolerance, max_iters).aggregate},
        {"betweenness", betweenness_centrality(net).aggregate},
        {"closeness", closeness_centrality(net).aggregate},
    };

    std::ostringstream text;
    if (common.is_json()) {
        json j;
        for (const auto& [name, values] : baselines) j[name] = spearman(mcr_scores, values);
        text << j.dump(2) << '\n';
    } else {
        csv_row(text, {"measure", "spearman"});
        for (const auto& [name, values] : baselines)
            csv_row(text, {name, fmt(spearman(mcr_scores, values))});
    }
    write_output(text.str(), common.out_path);
    return kExitSuccess;
}

struct AttackOpts {
    std::string mode = "sorted";
    std::string ranking = "multicorerank";
    std::string fractions = "0,0.05,0.1,0.15,0.2,0.25,0.3,0.35,0.4,0.45,0.5";
    bool adaptive = false;
    std::size_t trials = 50;
    std::uint64_t seed = 0;
};

int do_attack(const CommonOpts& common, const BudgetOpts& budget, const AttackOpts& opts) {
    const MultiplexNetwork net = load_network(common.input);

    AttackPlan plan;
    plan.mode = opts.mode == "random" ? AttackMode::kRandom : AttackMode::kSorted;
    plan.ranking_source = parse_ranking(opts.ranking);
    plan.adaptivity = opts.adaptive ? Adaptivity::kAdaptive : Adaptivity::kStatic;
    plan.fractions = parse_fractions(opts.fractions);
    plan.trials = opts.trials;
    plan.seed = opts.seed;
    plan.budget = budget.to_budget();

    const AttackTrace trace = run_attack(net, plan);
    const std::string mode_name = plan.mode == AttackMode::kRandom ? "random" : "sorted";

    std::ostringstream text;
    if (common.is_json()) {
        json j;
        j["mode"] = mode_name;
        j["baseline_core_count"] = trace.baseline_core_count;
        j["truncated"] = trace.truncated;
        auto point = [](const auto& p) {
            json row;
            row["fraction"] = p.fraction;
            row["cores_remaining"] = p.cores_remaining;
            row["cores_pct"] = p.cores_pct;
            if (p.assortativity)
                row["assortativity"] = *p.assortativity;
            else
                row["assortativity"] = nullptr;
            return row;
        };
        j["trials"] = json::array();
        for (const auto& trial : trace.trials) {
            json rows = json::array();
            for (const auto& p : trial) rows.push_back(point(p));
            j["trials"].push_back(rows);
        }
        j["mean"] = json::array();
        for (const auto& p : trace.mean) j["mean"].push_back(point(p));
        text << j.dump(2) << '\n';
    } else {
        text << "# baseline_core_count=" << trace.baseline_core_count << '\n';
        text << "# truncated=" << (trace.truncated ? "true" : "false") << '\n';
        csv_row(text, {"mode", "trial", "fraction", "cores_remaining", "cores_pct",
                       "assortativity"});
        for (std::size_t t = 0; t < trace.trials.size(); ++t)
            for (const TrialPoint& p : trace.trials[t])
                csv_row(text, {mode_name, fmt(t), fmt(p.fraction), fmt(p.cores_remaining),
                               fmt(p.cores_pct),
                               p.assortativity ? fmt(*p.assortativity) : ""});
        for (const MeanPoint& p : trace.mean)
            csv_row(text, {mode_name, "mean", fmt(p.fraction), fmt(p.cores_remaining),
                           fmt(p.cores_pct), p.assortativity ? fmt(*p.assortativity) : ""});
    }
    write_output(text.str(), common.out_path);
    return kExitSuccess;
}

/// Pulls (fraction, cores_pct) pairs out of an `attack` table: the mean trace
/// when present, otherwise the first trial.
std::vector<std::pair<double, double>> read_attack_table(const std::string& path, bool as_json) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");

    std::vector<std::pair<double, double>> mean_rows;
    std::vector<std::pair<double, double>> trial_rows;
    if (as_json) {
        json j;
        try {
            j = json::parse(in);
        } catch (const json::parse_error& e) {
            throw ParseError(path + ": " + e.what());
        }
        if (j.contains("mean"))
            for (const auto& row : j["mean"])
                mean_rows.emplace_back(row.at("fraction").get<double>(),
                                       row.at("cores_pct").get<double>());
        if (mean_rows.empty() && j.contains("trials") && !j["trials"].empty())
            for (const auto& row : j["trials"][0])
                trial_rows.emplace_back(row.at("fraction").get<double>(),
                                        row.at("cores_pct").get<double>());
    } else {
        std::string line;
        std::size_t line_no = 0;
        std::optional<std::size_t> trial_col, fraction_col, pct_col;
        std::string first_trial;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty() || line[0] == '#') continue;
            const auto fields = csv_split(line);
            if (!trial_col) {  // header
                for (std::size_t i = 0; i < fields.size(); ++i) {
                    if (fields[i] == "trial") trial_col = i;
                    if (fields[i] == "fraction") fraction_col = i;
                    if (fields[i] == "cores_pct") pct_col = i;
                }
                if (!trial_col || !fraction_col || !pct_col)
                    throw ParseError(path + ": missing trial/fraction/cores_pct columns", line_no);
                continue;
            }
            if (fields.size() <= std::max(*fraction_col, *pct_col))
                throw ParseError(path + ":" + std::to_string(line_no) + ": short row", line_no);
            try {
                const double fraction = std::stod(fields[*fraction_col]);
                const double pct = std::stod(fields[*pct_col]);
                const std::string& trial = fields[*trial_col];
                if (trial == "mean") {
                    mean_rows.emplace_back(fraction, pct);
                } else {
                    if (first_trial.empty()) first_trial = trial;
                    if (trial == first_trial) trial_rows.emplace_back(fraction, pct);
                }
            } catch (const std::exception&) {
                throw ParseError(path + ":" + std::to_string(line_no) + ": bad numeric field",
                                 line_no);
            }
        }
    }
    return mean_rows.empty() ? trial_rows : mean_rows;
}

int do_fit(const CommonOpts& common) {
    const auto rows = read_attack_table(common.input, common.is_json());
    std::vector<std::pair<double, double>> usable;
    for (const auto& row : rows)
        if (row.second > 0.0) usable.push_back(row);
    const std::size_t excluded = rows.size() - usable.size();
    const DecayFit result = fit_decay(usable);

    std::ostringstream text;
    if (common.is_json()) {
        json j;
        j["a"] = result.a;
        j["b"] = result.b;
        j["residual"] = result.residual;
        j["points_used"] = usable.size();
        j["points_excluded"] = excluded;
        text << j.dump(2) << '\n';
    } else {
        csv_row(text, {"a", "b", "residual", "points_used", "points_excluded"});
        csv_row(text, {fmt(result.a), fmt(result.b), fmt(result.residual), fmt(usable.size()),
                       fmt(excluded)});
    }
    write_output(text.str(), common.out_path);
    return kExitSuccess;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"multiplex k-core lattice, MultiCoreRank and attack-robustness toolkit"};
    app.require_subcommand(1);

    CommonOpts common;
    BudgetOpts budget;
    AttackOpts attack;
    std::string measures = "degree,eigenvector,betweenness,closeness";
    double tolerance = 1e-10;
    std::size_t max_iters = 10'000;

    auto* info_cmd = app.add_subcommand("info", "node/layer/edge counts and degree stats");
    add_common(info_cmd, common);

    auto* decompose_cmd = app.add_subcommand("decompose", "export the full non-empty core lattice");
    add_common(decompose_cmd, common);
    add_budget(decompose_cmd, budget);

    auto* rank_cmd = app.add_subcommand("rank", "MultiCoreRank influence table");
    add_common(rank_cmd, common);
    add_budget(rank_cmd, budget);

    auto* centrality_cmd = app.add_subcommand("centrality", "classical multiplex centralities");
    add_common(centrality_cmd, common);
    add_budget(centrality_cmd, budget);
    centrality_cmd->add_option("--measures", measures, "comma-separated measure list")
        ->capture_default_str();
    centrality_cmd->add_option("--tolerance", tolerance, "eigenvector residual tolerance")
        ->capture_default_str();
    centrality_cmd->add_option("--max-iters", max_iters, "eigenvector iteration cap")
        ->capture_default_str();

    auto* assortativity_cmd =
        app.add_subcommand("assortativity", "layer-layer degree correlations and their mean");
    add_common(assortativity_cmd, common);

    auto* compare_cmd =
        app.add_subcommand("compare", "Spearman of MultiCoreRank against each baseline");
    add_common(compare_cmd, common);
    add_budget(compare_cmd, budget);
    compare_cmd->add_option("--tolerance", tolerance, "eigenvector residual tolerance")
        ->capture_default_str();
    compare_cmd->add_option("--max-iters", max_iters, "eigenvector iteration cap")
        ->capture_default_str();

    auto* attack_cmd = app.add_subcommand("attack", "targeted / random node-removal simulation");
    add_common(attack_cmd, common);
    add_budget(attack_cmd, budget);
    attack_cmd->add_option("--mode", attack.mode, "attack mode")
        ->check(CLI::IsMember({"sorted", "random"}))
        ->capture_default_str();
    attack_cmd->add_option("--ranking", attack.ranking, "victim ranking measure")
        ->check(CLI::IsMember(
            {"multicorerank", "degree", "eigenvector", "betweenness", "closeness"}))
        ->capture_default_str();
    attack_cmd->add_option("--fractions", attack.fractions, "comma-separated removal fractions")
        ->capture_default_str();
    attack_cmd->add_flag("--adaptive", attack.adaptive, "re-rank survivors before each batch");
    attack_cmd->add_option("--trials", attack.trials, "trial count (random mode)")
        ->capture_default_str();
    attack_cmd->add_option("--seed", attack.seed, "random-mode seed")->capture_default_str();

    auto* fit_cmd = app.add_subcommand("fit", "exponential decay fit of an attack table");
    add_common(fit_cmd, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitSuccess : kExitParseError;
    }

    try {
        if (*info_cmd) return do_info(common);
        if (*decompose_cmd) return do_decompose(common, budget);
        if (*rank_cmd) return do_rank(common, budget);
        if (*centrality_cmd) return do_centrality(common, budget, measures, tolerance, max_iters);
        if (*assortativity_cmd) return do_assortativity(common);
        if (*compare_cmd) return do_compare(common, budget, tolerance, max_iters);
        if (*attack_cmd) return do_attack(common, budget, attack);
        if (*fit_cmd) return do_fit(common);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParseError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParseError;
    } catch (const ResourceBudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudgetExceeded;
    } catch (const UndefinedMetricError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUndefinedMetric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}

}  // namespace mcr::cli
