#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "vlab/criteria.hpp"
#include "vlab/kernels.hpp"
#include "vlab/montecarlo.hpp"
#include "vlab/ree_hoover.hpp"
#include "vlab/series.hpp"
#include "vlab/tables.hpp"
#include "vlab/trees.hpp"
#include "vlab/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace vlab;

constexpr std::uint64_t kDefaultSeed = 424242;

// ---- configuration -----------------------------------------------------

std::map<std::string, std::string> load_config(const std::string& path) {
    std::map<std::string, std::string> cfg;
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const char* ws = " \t\r";
            s.erase(0, s.find_first_not_of(ws));
            auto end = s.find_last_not_of(ws);
            s.erase(end == std::string::npos ? 0 : end + 1);
            return s;
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (!key.empty()) cfg[key] = value;
    }
    return cfg;
}

struct Config {
    std::map<std::string, std::string> values;

    std::string str(const std::string& key, const std::string& fallback) const {
        auto it = values.find(key);
        return it == values.end() ? fallback : it->second;
    }
    template <class T>
    T num(const std::string& key, T fallback) const {
        auto it = values.find(key);
        if (it == values.end()) return fallback;
        std::istringstream is(it->second);
        T out{};
        if (!(is >> out)) throw CLI::ValidationError("config", "bad value for " + key);
        return out;
    }
};

// options shared by the numeric subcommands
struct PotentialArgs {
    std::string potential = "hard-sphere";
    int dim = 3;
    double sigma = 1.0;
    double lambda = 1.5;
    double beta_eps = 0.5;

    void attach(CLI::App* cmd, const Config& cfg) {
        potential = cfg.str("potential", potential);
        dim = cfg.num("dim", dim);
        sigma = cfg.num("sigma", sigma);
        lambda = cfg.num("lambda", lambda);
        beta_eps = cfg.num("beta_eps", beta_eps);
        cmd->add_option("--potential", potential, "pair potential")
            ->check(CLI::IsMember({"hard-sphere", "square-well"}))
            ->envname("VLAB_POTENTIAL")
            ->capture_default_str();
        cmd->add_option("--dim", dim, "spatial dimension")
            ->check(CLI::Range(1, 3))
            ->envname("VLAB_DIM")
            ->capture_default_str();
        cmd->add_option("--sigma", sigma, "hard-core diameter")
            ->envname("VLAB_SIGMA")
            ->capture_default_str();
        cmd->add_option("--lambda", lambda, "square-well range multiple")
            ->envname("VLAB_LAMBDA")
            ->capture_default_str();
        cmd->add_option("--beta-eps", beta_eps, "square-well reduced depth")
            ->envname("VLAB_BETA_EPS")
            ->capture_default_str();
    }

    PairPotential build() const {
        return potential == "square-well" ? square_well(sigma, dim, lambda, beta_eps)
                                          : hard_sphere(sigma, dim);
    }

    ordered_json json() const {
        ordered_json j;
        j["kind"] = potential;
        j["sigma"] = sigma;
        j["dim"] = dim;
        if (potential == "square-well") {
            j["lambda"] = lambda;
            j["beta_eps"] = beta_eps;
        }
        return j;
    }
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw CLI::ValidationError("--out", "cannot write " + out_path);
    out << text;
}

// ---- tables --------------------------------------------------------------

int cmd_tables(int table_id, int n_max, const std::string& format, const std::string& out) {
    std::vector<int> ids;
    if (table_id == 0)
        ids = {1, 2, 3, 4, 5, 6};
    else
        ids = {table_id};
    std::ostringstream os;
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (int id : ids) arr.push_back(table_to_json(make_table(id, n_max)));
        os << (ids.size() == 1 ? arr[0].dump(2) : arr.dump(2)) << '\n';
    } else if (format == "csv") {
        for (std::size_t i = 0; i < ids.size(); ++i) {
            std::string body = render_csv(make_table(ids[i], n_max));
            if (i > 0) body.erase(0, body.find("\r\n") + 2); // keep one header
            os << body;
        }
    } else {
        for (int id : ids) os << render_markdown(make_table(id, n_max)) << '\n';
    }
    emit(os.str(), out);
    return 0;
}

// ---- trees ---------------------------------------------------------------

ordered_json tree_class_json(const TreeClass& t) {
    ordered_json j;
    j["height"] = t.height;
    j["layers"] = t.layers;
    j["parents"] = t.parent_ranks;
    j["composition"] = t.tail;
    j["multiplicity"] = to_ll(multiplicity(t));
    j["admissible_count"] = admissible_edges(t).size();
    return j;
}

int cmd_trees_list(int n, const std::string& subset, const std::string& format,
                   const std::string& out) {
    auto classes =
        subset == "a" ? enumerate_tr0(n) : enumerate_tr(n);
    std::ostringstream os;
    if (format == "csv") {
        os << "height,layers,parents,composition,multiplicity,admissible_count\r\n";
        for (const TreeClass& t : classes) {
            auto join = [](const std::vector<int>& v) {
                std::string s;
                for (std::size_t i = 0; i < v.size(); ++i)
                    s += (i ? " " : "") + std::to_string(v[i]);
                return s;
            };
            std::string parents;
            for (std::size_t i = 0; i < t.parent_ranks.size(); ++i)
                parents += (i ? ";" : "") + join(t.parent_ranks[i]);
            os << t.height << ',' << join(t.layers) << ',' << parents << ',' << join(t.tail)
               << ',' << multiplicity(t).str() << ',' << admissible_edges(t).size() << "\r\n";
        }
    } else if (format == "md") {
        os << "| height | layers | parents | composition | multiplicity | admissible |\n"
           << "|---|---|---|---|---|---|\n";
        for (const TreeClass& t : classes) {
            ordered_json j = tree_class_json(t);
            os << "| " << t.height << " | " << j["layers"].dump() << " | "
               << j["parents"].dump() << " | " << j["composition"].dump() << " | "
               << j["multiplicity"] << " | " << j["admissible_count"] << " |\n";
        }
    } else {
        for (const TreeClass& t : classes) os << tree_class_json(t).dump() << '\n';
    }
    emit(os.str(), out);
    return 0;
}

int cmd_trees_count(int n, const std::string& subset, const std::string& out) {
    const bool a = subset == "a";
    const Int closed = a ? count_tr0(n) : count_tr(n);
    const std::size_t listed = (a ? enumerate_tr0(n) : enumerate_tr(n)).size();
    ordered_json j;
    j["n"] = n;
    j["subset"] = a ? "a" : "full";
    j["closed_form"] = to_ll(closed);
    j["enumerated"] = listed;
    emit(j.dump(2) + "\n", out);
    return closed == Int(listed) ? 0 : 1;
}

// ---- ree-hoover ------------------------------------------------------------

int cmd_rh_count(int n, const std::string& out) {
    ordered_json j;
    j["n"] = n;
    if (n <= 7) {
        j["count"] = enumerate_rh_diagrams(n).size();
        j["source"] = "computed";
    } else {
        j["count"] = to_ll(rh_reference_count(n));
        j["source"] = "reference";
    }
    emit(j.dump(2) + "\n", out);
    return 0;
}

int cmd_rh_diagrams(int n, const std::string& format, const std::string& out) {
    auto diagrams = enumerate_rh_diagrams(n);
    std::ostringstream os;
    auto edge_text = [](const RhDiagram& d) {
        std::string edges;
        for (std::size_t i = 0; i < d.mayer_edges.size(); ++i)
            edges += (i ? " " : "") + std::to_string(d.mayer_edges[i].u) + "-" +
                     std::to_string(d.mayer_edges[i].v);
        return edges;
    };
    if (format == "csv") {
        os << "f_edges,star_content,class_size\r\n";
        for (const RhDiagram& d : diagrams)
            os << edge_text(d) << ',' << d.star_content << ',' << d.iso_class_size << "\r\n";
    } else if (format == "md") {
        os << "| f_edges | star_content | class_size |\n|---|---|---|\n";
        for (const RhDiagram& d : diagrams)
            os << "| " << edge_text(d) << " | " << d.star_content << " | " << d.iso_class_size
               << " |\n";
    } else {
        for (const RhDiagram& d : diagrams) {
            ordered_json j;
            ordered_json edges = ordered_json::array();
            for (const Edge& e : d.mayer_edges) edges.push_back({e.u, e.v});
            j["f_edges"] = edges;
            j["star_content"] = d.star_content;
            j["class_size"] = d.iso_class_size;
            os << j.dump() << '\n';
        }
    }
    emit(os.str(), out);
    return 0;
}

// ---- compare ---------------------------------------------------------------

struct ComparisonSide {
    std::string kind;
    Int value;
    bool reference = false;
};

ComparisonSide side_value(const std::string& kind, int criterion, int n) {
    ComparisonSide side{kind, 0, false};
    auto tree_value = [&](bool a_subset, int order) -> Int {
        const TreeCriteria& c = tree_criteria(order, a_subset);
        return criterion == 1 ? c.cr1 : criterion == 2 ? c.cr2 : c.cr3;
    };
    if (kind == "tr" || kind == "tr0") {
        side.value = tree_value(kind == "tr0", n);
    } else if (kind == "tr-set" || kind == "tr0-set") {
        for (int k = 2; k <= n; ++k) side.value += tree_value(kind == "tr0-set", k);
    } else if (kind == "rh") {
        if (criterion == 3)
            throw DomainError("cr3 is undefined for the box-domain diagram representation");
        side.value = rh_criterion_value(criterion, n, side.reference);
    } else {
        throw RangeError("unknown representation: " + kind);
    }
    return side;
}

int cmd_compare(int n, const std::string& criterion, const std::string& left,
                const std::string& right, const std::string& format, const std::string& out) {
    static const std::map<std::string, int> criteria = {
        {"cr1", 1}, {"cr2", 2}, {"cr3", 3}, {"cr1p", 1}, {"cr2p", 2}, {"cr3p", 3}};
    const int crit = criteria.at(criterion);
    ComparisonSide lhs = side_value(left, crit, n);
    ComparisonSide rhs = side_value(right, crit, n);
    Verdict verdict = verdict_of(lhs.value, rhs.value);

    std::string annotation;
    if (verdict == Verdict::ApproximatelyEqual) {
        // a full tree sum strictly extends its a-subset at the same order
        if ((left == "tr" && right == "tr0") || (left == "tr0" && right == "tr")) {
            BaseLinearCombination full =
                to_linear_combination(tree_sum(n, TreeSubset::Full));
            BaseLinearCombination sub =
                to_linear_combination(tree_sum(n, TreeSubset::ASubset));
            const bool left_is_full = left == "tr";
            if (entries_strict_superset(full, sub))
                annotation = (left_is_full ? left : right) +
                             " is negligibly more complicated (entry superset)";
        }
    }

    ordered_json j;
    j["n"] = n;
    j["criterion"] = criterion;
    j["left"] = {{"kind", lhs.kind},
                 {"value", to_ll(lhs.value)},
                 {"source", lhs.reference ? "reference" : "computed"}};
    j["right"] = {{"kind", rhs.kind},
                  {"value", to_ll(rhs.value)},
                  {"source", rhs.reference ? "reference" : "computed"}};
    j["verdict"] = verdict_name(verdict);
    if (!annotation.empty()) j["annotation"] = annotation;

    std::ostringstream os;
    if (format == "csv") {
        os << "n,criterion,left,left_value,right,right_value,verdict\r\n"
           << n << ',' << criterion << ',' << lhs.kind << ',' << lhs.value.str() << ','
           << rhs.kind << ',' << rhs.value.str() << ',' << verdict_name(verdict) << "\r\n";
    } else if (format == "md") {
        os << "`" << lhs.kind << "` " << criterion << "=" << lhs.value.str() << " vs `"
           << rhs.kind << "` " << criterion << "=" << rhs.value.str() << ": **"
           << verdict_name(verdict) << "**";
        if (!annotation.empty()) os << " (" << annotation << ")";
        os << '\n';
    } else {
        os << j.dump(2) << '\n';
    }
    emit(os.str(), out);
    return 0;
}

// ---- estimate ----------------------------------------------------------------

int cmd_estimate(const std::string& quantity, int n, const std::string& route,
                 const PotentialArgs& pot, std::uint64_t samples, std::uint64_t seed,
                 int threads, const std::string& out, const ordered_json& effective) {
    const PairPotential p = pot.build();
    McOptions opt;
    opt.threads = threads;

    const auto t0 = std::chrono::steady_clock::now();
    Estimate est;
    ordered_json extra;
    if (quantity == "b") {
        est = estimate_b(n, p, samples, seed, opt);
    } else if (quantity == "a") {
        est = estimate_a(n, p, samples, seed, opt);
    } else {
        VirialEstimate v = estimate_B(n, route == "a" ? Route::ARoute : Route::BRoute, p,
                                      samples, seed, opt);
        est = v.est;
        extra["arith_ops"] = v.polynomial_ops.total();
        if (route == "a") {
            extra["stage_ops"] = {{"e", v.stage2.total()},
                                  {"tau", v.stage3.total()},
                                  {"closing", v.stage4.total()}};
        }
        ordered_json inputs = ordered_json::array();
        for (const Estimate& e : v.inputs)
            inputs.push_back({{"quantity", e.quantity},
                              {"mean", e.mean},
                              {"stderr", e.std_err},
                              {"pair_evals", e.pair_evals}});
        extra["inputs"] = inputs;
    }
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    ordered_json manifest;
    manifest["quantity"] = est.quantity;
    manifest["n"] = n;
    if (quantity == "B") manifest["route"] = route;
    manifest["potential"] = pot.json();
    manifest["samples"] = samples;
    manifest["seed"] = seed;
    manifest["mean"] = est.mean;
    manifest["stderr"] = est.std_err;
    manifest["pair_evals"] = est.pair_evals;
    for (auto& [k, v] : extra.items()) manifest[k] = v;
    manifest["wall_time_s"] = wall;
    manifest["config"] = effective;

    emit(manifest.dump(2) + "\n", out);
    std::cout << est.quantity << ": mean = " << est.mean << ", stderr = " << est.std_err
              << ", samples = " << est.samples << ", pair evals = " << est.pair_evals << '\n';
    if (!out.empty()) std::cout << "manifest written to " << out << '\n';
    return 0;
}

// ---- bounds --------------------------------------------------------------------

int cmd_bounds(int n_max, const std::string& format, const std::string& out) {
    std::ostringstream os;
    ordered_json rows = ordered_json::array();
    for (int n = 2; n <= n_max; ++n) {
        std::vector<double> dummy(n - 1, 0.5);
        OpCounter b_sum;
        mayer_polynomial_sum(dummy, n, &b_sum);
        ARouteResult<double> a = a_to_B_staged(dummy, n);
        ordered_json row;
        row["n"] = n;
        row["a_route_bound"] = to_ll(op_bound(Route::ARoute, n));
        row["a_route_measured"] = a.total().total();
        row["b_route_bound"] = to_ll(op_bound(Route::BRoute, n));
        row["b_sum_measured"] = b_sum.total();
        rows.push_back(std::move(row));
    }
    if (format == "csv") {
        os << "n,a_route_bound,a_route_measured,b_route_bound,b_sum_measured\r\n";
        for (const auto& r : rows)
            os << r["n"] << ',' << r["a_route_bound"] << ',' << r["a_route_measured"] << ','
               << r["b_route_bound"] << ',' << r["b_sum_measured"] << "\r\n";
    } else if (format == "md") {
        os << "| n | a-route bound | a-route measured | b-route bound | b-sum measured |\n"
           << "|---|---|---|---|---|\n";
        for (const auto& r : rows)
            os << "| " << r["n"] << " | " << r["a_route_bound"] << " | "
               << r["a_route_measured"] << " | " << r["b_route_bound"] << " | "
               << r["b_sum_measured"] << " |\n";
    } else {
        os << rows.dump(2) << '\n';
    }
    emit(os.str(), out);
    return 0;
}

// ---- verify ---------------------------------------------------------------------

int cmd_verify(const std::string& suite, const std::string& out) {
    std::vector<std::string> names;
    if (suite == "all")
        names = verify_suite_names();
    else
        names = {suite};
    ordered_json reports = ordered_json::array();
    bool all_pass = true;
    for (const std::string& name : names) {
        SuiteReport r = run_verify_suite(name);
        all_pass = all_pass && r.pass;
        reports.push_back(report_to_json(r));
    }
    emit((names.size() == 1 ? reports[0].dump(2) : reports.dump(2)) + "\n", out);
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for tree-sum and complete-diagram representations of "
                 "virial-series coefficients"};
    app.require_subcommand(1);
    app.fallthrough(); // top-level options (--config) usable after a subcommand

    // config file: lowest-precedence defaults (flags > environment > config)
    Config cfg;
    std::string config_path;
    if (const char* env = std::getenv("VLAB_CONFIG")) config_path = env;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg.rfind("--config=", 0) == 0) config_path = arg.substr(9);
    }
    std::string config_opt;
    app.add_option("--config", config_opt, "key=value configuration file");

    try {
        if (!config_path.empty()) cfg.values = load_config(config_path);

        std::string format = cfg.str("format", "md");
        std::string out_path = cfg.str("out", "");
        int n = cfg.num("n", 4);
        int n_max = cfg.num("n_max", 10);
        std::uint64_t samples = cfg.num("samples", std::uint64_t(1000000));
        std::uint64_t seed = cfg.num("seed", kDefaultSeed);
        int threads = cfg.num("threads", 1);

        auto add_common = [&](CLI::App* cmd, bool with_n, bool with_format = true) {
            if (with_n)
                cmd->add_option("--n", n, "coefficient order")
                    ->envname("VLAB_N")
                    ->capture_default_str();
            if (with_format)
                cmd->add_option("--format", format, "output format")
                    ->check(CLI::IsMember({"csv", "json", "md"}))
                    ->envname("VLAB_FORMAT")
                    ->capture_default_str();
            cmd->add_option("--out", out_path, "write output to this path")
                ->envname("VLAB_OUT")
                ->capture_default_str();
        };

        // tables
        auto* tables_cmd = app.add_subcommand("tables", "emit the six complexity tables");
        int table_id = cfg.num("table", 0);
        tables_cmd->add_option("--table", table_id, "table id 1..6 (0 = all)")
            ->check(CLI::Range(0, 6))
            ->capture_default_str();
        tables_cmd->add_option("--n-max", n_max, "largest order")
            ->check(CLI::Range(2, 10))
            ->envname("VLAB_N_MAX")
            ->capture_default_str();
        add_common(tables_cmd, false);

        // trees
        auto* trees_cmd = app.add_subcommand("trees", "tree-class enumeration");
        trees_cmd->require_subcommand(1);
        std::string subset = cfg.str("subset", "full");
        auto* trees_list = trees_cmd->add_subcommand("list", "list the classes");
        trees_list->add_option("--subset", subset, "full or a")
            ->check(CLI::IsMember({"full", "a"}))
            ->envname("VLAB_SUBSET")
            ->capture_default_str();
        add_common(trees_list, true);
        auto* trees_count = trees_cmd->add_subcommand("count", "closed form vs enumeration");
        trees_count->add_option("--subset", subset, "full or a")
            ->check(CLI::IsMember({"full", "a"}));
        add_common(trees_count, true, false);

        // rh
        auto* rh_cmd = app.add_subcommand("rh", "complete-diagram enumeration");
        rh_cmd->require_subcommand(1);
        auto* rh_count = rh_cmd->add_subcommand("count", "diagram class count");
        add_common(rh_count, true, false);
        auto* rh_diagrams = rh_cmd->add_subcommand("diagrams", "list diagram classes");
        add_common(rh_diagrams, true);

        // compare
        auto* compare_cmd = app.add_subcommand("compare", "criterion comparison");
        std::string criterion = cfg.str("criterion", "cr1");
        std::string left = cfg.str("left", "tr-set");
        std::string right = cfg.str("right", "rh");
        compare_cmd->add_option("--criterion", criterion, "cr1|cr2|cr3|cr1p|cr2p|cr3p")
            ->check(CLI::IsMember({"cr1", "cr2", "cr3", "cr1p", "cr2p", "cr3p"}))
            ->envname("VLAB_CRITERION")
            ->capture_default_str();
        compare_cmd->add_option("--left", left, "tr|tr0|rh|tr-set|tr0-set")
            ->check(CLI::IsMember({"tr", "tr0", "rh", "tr-set", "tr0-set"}))
            ->capture_default_str();
        compare_cmd->add_option("--right", right, "tr|tr0|rh|tr-set|tr0-set")
            ->check(CLI::IsMember({"tr", "tr0", "rh", "tr-set", "tr0-set"}))
            ->capture_default_str();
        add_common(compare_cmd, true);

        // estimate
        auto* estimate_cmd = app.add_subcommand("estimate", "Monte Carlo estimation");
        std::string quantity = cfg.str("quantity", "B");
        std::string route = cfg.str("route", "b");
        std::string manifest_path = cfg.str("out", "estimate-manifest.json");
        estimate_cmd->add_option("--quantity", quantity, "b, a or B")
            ->check(CLI::IsMember({"b", "a", "B"}))
            ->envname("VLAB_QUANTITY")
            ->capture_default_str();
        estimate_cmd->add_option("--n", n, "coefficient order")
            ->envname("VLAB_N")
            ->capture_default_str();
        estimate_cmd->add_option("--route", route, "assembly route for B")
            ->check(CLI::IsMember({"b", "a"}))
            ->envname("VLAB_ROUTE")
            ->capture_default_str();
        estimate_cmd->add_option("--samples", samples, "per-coefficient sample budget")
            ->envname("VLAB_SAMPLES")
            ->capture_default_str();
        estimate_cmd->add_option("--seed", seed, "stream seed")
            ->envname("VLAB_SEED")
            ->capture_default_str();
        estimate_cmd->add_option("--threads", threads, "worker threads (results unchanged)")
            ->envname("VLAB_THREADS")
            ->capture_default_str();
        estimate_cmd->add_option("--out", manifest_path, "manifest path")
            ->envname("VLAB_OUT")
            ->capture_default_str();
        PotentialArgs pot;
        pot.attach(estimate_cmd, cfg);

        // bounds
        auto* bounds_cmd = app.add_subcommand("bounds", "operation bounds vs measured ops");
        bounds_cmd->add_option("--n", n_max, "largest order")
            ->check(CLI::Range(2, 10))
            ->envname("VLAB_N")
            ->capture_default_str();
        add_common(bounds_cmd, false);

        // verify
        auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
        std::string suite = cfg.str("suite", "all");
        verify_cmd
            ->add_option("--suite", suite,
                         "tables|partition|rh-expansion|recurrence|routes|bounds|all")
            ->envname("VLAB_SUITE")
            ->capture_default_str();
        add_common(verify_cmd, false, false);

        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e);
        } catch (const CLI::CallForAllHelp& e) {
            return app.exit(e);
        } catch (const CLI::ParseError& e) {
            app.exit(e);
            return 2;
        }

        if (tables_cmd->parsed()) return cmd_tables(table_id, n_max, format, out_path);
        if (trees_cmd->parsed()) {
            if (trees_list->parsed()) return cmd_trees_list(n, subset, format, out_path);
            return cmd_trees_count(n, subset, out_path);
        }
        if (rh_cmd->parsed()) {
            if (rh_count->parsed()) return cmd_rh_count(n, out_path);
            return cmd_rh_diagrams(n, format, out_path);
        }
        if (compare_cmd->parsed())
            return cmd_compare(n, criterion, left, right, format, out_path);
        if (estimate_cmd->parsed()) {
            ordered_json effective;
            effective["quantity"] = quantity;
            effective["n"] = n;
            effective["route"] = route;
            effective["samples"] = samples;
            effective["seed"] = seed;
            effective["threads"] = threads;
            effective["potential"] = pot.json();
            effective["simd"] = kernels::isa_name(kernels::active_isa());
            return cmd_estimate(quantity, n, route, pot, samples, seed, threads,
                                manifest_path, effective);
        }
        if (bounds_cmd->parsed()) return cmd_bounds(n_max, format, out_path);
        if (verify_cmd->parsed()) return cmd_verify(suite, out_path);
        return 2;
    } catch (const UnknownSuiteError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.get_name() << ": " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
