#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <mmcc/approx4.hxx>
#include <mmcc/bench.hxx>
#include <mmcc/clb.hxx>
#include <mmcc/exact.hxx>
#include <mmcc/graph.hxx>
#include <mmcc/greedy.hxx>
#include <mmcc/intersection_table.hxx>
#include <mmcc/partition.hxx>
#include <mmcc/synth.hxx>

namespace {

using nlohmann::json;

mmcc::ParseResult load_graph(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open file: " + path);
    return mmcc::parse_edge_list(in);
}

void write_partition_file(const std::string& path, const mmcc::Partition& p,
                          const std::vector<std::uint64_t>& labels)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write file: " + path);
    mmcc::write_partition(out, p, &labels);
}

double ms_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

json choices_to_json(const mmcc::DesignChoices& c)
{
    return json{{"dc1", mmcc::to_string(c.worst_node_tie)},
                {"dc2", mmcc::to_string(c.neighbor_order)},
                {"dc3", mmcc::to_string(c.neighbor_key)},
                {"dc4", mmcc::to_string(c.join_guard)}};
}

int run_parse(const std::string& path, const std::string& out_path, const std::string& labels_path)
{
    auto const parsed = load_graph(path);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out)
            throw std::runtime_error("cannot write file: " + out_path);
        mmcc::write_edge_list(out, parsed.graph, &parsed.original_label);
    }
    if (!labels_path.empty()) {
        std::ofstream out(labels_path);
        if (!out)
            throw std::runtime_error("cannot write file: " + labels_path);
        for (std::size_t v = 0; v < parsed.original_label.size(); ++v)
            out << parsed.original_label[v] << '\t' << v << '\n';
    }
    json j{{"n", parsed.graph.node_count()},
           {"m", parsed.graph.edge_count()},
           {"delta", parsed.graph.max_degree()},
           {"self_loops_dropped", parsed.self_loops_dropped},
           {"duplicate_edges_merged", parsed.duplicate_edges_merged}};
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_clb(const std::string& path, const std::string& pi_d_path, bool linear_verify,
            std::size_t table_limit)
{
    auto const parsed = load_graph(path);
    auto const table = mmcc::build_intersection_table(parsed.graph, table_limit);
    auto const cert = mmcc::compute_clb(parsed.graph, table, linear_verify);
    if (!pi_d_path.empty())
        write_partition_file(pi_d_path, cert.pi_d, parsed.original_label);
    json j{{"d", cert.d},
           {"witness", cert.witness == mmcc::ClbCertificate::no_witness ? json(nullptr)
                                                                        : json(cert.witness)},
           {"witness_bound", cert.max_bound},
           {"pi_d_clusters", cert.pi_d.cluster_count()},
           {"feasible", cert.feasible}};
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_approx4(const std::string& path, const std::string& partition_path,
                std::size_t table_limit)
{
    auto const parsed = load_graph(path);
    auto const table = mmcc::build_intersection_table(parsed.graph, table_limit);
    auto const result = mmcc::approx_4(parsed.graph, table);
    if (!partition_path.empty())
        write_partition_file(partition_path, result.partition, parsed.original_label);
    json j{{"phi", mmcc::max_disagreement(parsed.graph, result.partition)},
           {"iterations", result.iterations},
           {"terminated_early", result.terminated_early}};
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_greedy(const std::string& path, const std::string& partition_path, bool all_variants,
               const std::string& named, const mmcc::DesignChoices& choices,
               std::size_t table_limit)
{
    auto const parsed = load_graph(path);
    auto const table = mmcc::build_intersection_table(parsed.graph, table_limit);
    json j;
    mmcc::Partition result_partition;
    if (all_variants) {
        auto const t0 = std::chrono::steady_clock::now();
        auto best = mmcc::run_best_variant(parsed.graph, table, true);
        j["wall_time_ms"] = ms_since(t0);
        j["phi"] = best.best.phi;
        j["joins_performed"] = best.best.joins;
        j["choices"] = choices_to_json(best.best.choices);
        json variants = json::array();
        for (auto const& v : best.variants)
            variants.push_back({{"choices", choices_to_json(v.choices)},
                                {"phi", v.phi},
                                {"joins_performed", v.joins}});
        j["variants"] = variants;
        result_partition = std::move(best.best.partition);
    } else {
        mmcc::DesignChoices const effective =
            named.empty() ? choices : mmcc::variant_a_choices();
        auto const t0 = std::chrono::steady_clock::now();
        auto result = mmcc::greedy_join(
            parsed.graph, mmcc::approx_4(parsed.graph, table).partition, effective);
        j["wall_time_ms"] = ms_since(t0);
        j["phi"] = result.phi;
        j["joins_performed"] = result.joins;
        j["choices"] = choices_to_json(effective);
        result_partition = std::move(result.partition);
    }
    if (!partition_path.empty())
        write_partition_file(partition_path, result_partition, parsed.original_label);
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_exact(const std::string& path, std::size_t limit, const std::string& witness_path)
{
    auto const parsed = load_graph(path);
    auto const result = mmcc::brute_force_opt(parsed.graph, limit);
    if (!witness_path.empty())
        write_partition_file(witness_path, result.argmin, parsed.original_label);
    json j{{"opt", result.opt},
           {"witness_file", witness_path.empty() ? json(nullptr) : json(witness_path)},
           {"bell_n", result.partitions_examined}};
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_synth(const mmcc::SynthSpec& spec, const std::string& out_path)
{
    auto const g = mmcc::planted_partition_graph(spec);
    std::ofstream out(out_path);
    if (!out)
        throw std::runtime_error("cannot write file: " + out_path);
    mmcc::write_edge_list(out, g);
    json j{{"n", g.node_count()},
           {"m", g.edge_count()},
           {"flips", spec.flips},
           {"seed", spec.seed},
           {"out", out_path}};
    std::cout << j.dump(2) << '\n';
    return 0;
}

void emit_records(const std::vector<mmcc::BenchRecord>& records, const std::string& out_path,
                  const std::string& format)
{
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file)
            throw std::runtime_error("cannot write file: " + out_path);
        out = &file;
    }
    if (format == "json") {
        json array = json::array();
        for (auto const& r : records)
            array.push_back(mmcc::record_to_json(r));
        *out << array.dump(2) << '\n';
    } else {
        mmcc::write_csv(*out, records);
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"min max correlation clustering: combinatorial lower bound, 4-approximation, "
                 "greedy joining"};
    app.require_subcommand(1);

    std::string in_path, out_path, labels_path, partition_path, witness_path, format = "csv";
    std::string named;
    bool all_variants = false, linear_verify = false, skip_clb = false;
    std::size_t table_limit = mmcc::IntersectionTable::default_max_nodes;
    std::size_t exact_limit = 13;
    std::string dc1 = "largest", dc2 = "decreasing", dc3 = "combined", dc4 = "strict";

    auto* parse_cmd = app.add_subcommand("parse", "read an edge list and report basic stats");
    parse_cmd->add_option("file", in_path)->required();
    parse_cmd->add_option("--out", out_path, "rewrite the canonical edge list");
    parse_cmd->add_option("--labels", labels_path, "write the original-label/id mapping");

    auto* clb_cmd = app.add_subcommand("clb", "compute the combinatorial lower bound");
    clb_cmd->add_option("file", in_path)->required();
    clb_cmd->add_option("--partition", partition_path, "dump the forced-together partition");
    clb_cmd->add_flag("--linear-verify", linear_verify,
                      "additionally scan all levels linearly and demand agreement");
    clb_cmd->add_option("--table-limit", table_limit, "dense table node limit");

    auto* approx_cmd = app.add_subcommand("approx4", "run the 4-approximation");
    approx_cmd->add_option("file", in_path)->required();
    approx_cmd->add_option("--partition", partition_path, "write the resulting partition");
    approx_cmd->add_option("--table-limit", table_limit, "dense table node limit");

    auto* greedy_cmd = app.add_subcommand("greedy", "run greedy joining from the 4-approximation");
    greedy_cmd->add_option("file", in_path)->required();
    greedy_cmd->add_option("--partition", partition_path, "write the resulting partition");
    greedy_cmd->add_flag("--all", all_variants, "run all 24 design-choice variants, keep the best");
    greedy_cmd->add_option("--named", named, "named configuration (only: A)")
        ->check(CLI::IsMember({"A"}));
    greedy_cmd->add_option("--dc1", dc1)->check(CLI::IsMember({"largest", "smallest"}));
    greedy_cmd->add_option("--dc2", dc2)->check(CLI::IsMember({"increasing", "decreasing"}));
    greedy_cmd->add_option("--dc3", dc3)
        ->check(CLI::IsMember({"combined", "intersection", "neg_symdiff"}));
    greedy_cmd->add_option("--dc4", dc4)->check(CLI::IsMember({"base", "strict"}));
    greedy_cmd->add_option("--table-limit", table_limit, "dense table node limit");

    auto* exact_cmd = app.add_subcommand("exact", "exhaustive optimum (small graphs only)");
    exact_cmd->add_option("file", in_path)->required();
    exact_cmd->add_option("--limit", exact_limit, "node limit guarding the enumeration");
    exact_cmd->add_option("--witness", witness_path, "write one optimal partition");

    mmcc::SynthSpec spec;
    auto* synth_cmd = app.add_subcommand("synth", "generate a planted-partition instance");
    synth_cmd->add_option("--cliques", spec.cliques)->required();
    synth_cmd->add_option("--size", spec.clique_size)->required();
    synth_cmd->add_option("--flips", spec.flips)->required();
    synth_cmd->add_option("--seed", spec.seed)->required();
    synth_cmd->add_option("--out", out_path)->required();

    std::vector<std::string> bench_files;
    auto* bench_cmd = app.add_subcommand("bench", "benchmark a list of edge-list files");
    bench_cmd->add_option("files", bench_files)->required();
    bench_cmd->add_option("--out", out_path, "output file (default stdout)");
    bench_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    bench_cmd->add_flag("--skip-clb", skip_clb, "skip the lower bound (no dense table)");
    bench_cmd->add_flag("--all-variants", all_variants, "also run the 24-variant search");
    bench_cmd->add_option("--table-limit", table_limit, "dense table node limit");

    std::vector<std::size_t> f_values;
    std::size_t repeats = 10;
    std::uint64_t base_seed = 1;
    auto* sweep_cmd = app.add_subcommand("sweep", "planted-partition sweep over flip counts");
    sweep_cmd->add_option("--flips", f_values, "flip counts (default 0 50 ... 1000)");
    sweep_cmd->add_option("--repeats", repeats, "instances per flip count");
    sweep_cmd->add_option("--seed", base_seed, "base seed");
    sweep_cmd->add_option("--out", out_path, "output file (default stdout)");
    sweep_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_flag("--all-variants", all_variants, "also run the 24-variant search");

    CLI11_PARSE(app, argc, argv);

    try {
        if (parse_cmd->parsed())
            return run_parse(in_path, out_path, labels_path);
        if (clb_cmd->parsed())
            return run_clb(in_path, partition_path, linear_verify, table_limit);
        if (approx_cmd->parsed())
            return run_approx4(in_path, partition_path, table_limit);
        if (greedy_cmd->parsed()) {
            mmcc::DesignChoices choices;
            choices.worst_node_tie = dc1 == "largest" ? mmcc::WorstNodeTie::largest_degree
                                                      : mmcc::WorstNodeTie::smallest_degree;
            choices.neighbor_order = dc2 == "increasing"
                                         ? mmcc::NeighborOrder::increasing_degree
                                         : mmcc::NeighborOrder::decreasing_degree;
            choices.neighbor_key = dc3 == "combined" ? mmcc::NeighborKey::combined
                                   : dc3 == "intersection"
                                       ? mmcc::NeighborKey::intersection_only
                                       : mmcc::NeighborKey::neg_symdiff_only;
            choices.join_guard =
                dc4 == "base" ? mmcc::JoinGuard::base : mmcc::JoinGuard::strict;
            return run_greedy(in_path, partition_path, all_variants, named, choices, table_limit);
        }
        if (exact_cmd->parsed())
            return run_exact(in_path, exact_limit, witness_path);
        if (synth_cmd->parsed())
            return run_synth(spec, out_path);
        if (bench_cmd->parsed()) {
            mmcc::BenchConfig config;
            config.skip_clb = skip_clb;
            config.all_variants = all_variants;
            config.table_max_nodes = table_limit;
            std::vector<mmcc::BenchInstance> instances;
            for (auto const& file : bench_files)
                instances.push_back({file, file});
            emit_records(mmcc::run_bench(instances, config), out_path, format);
            return 0;
        }
        if (sweep_cmd->parsed()) {
            if (f_values.empty())
                for (std::size_t f = 0; f <= 1000; f += 50)
                    f_values.push_back(f);
            mmcc::BenchConfig config;
            config.all_variants = all_variants;
            emit_records(mmcc::sweep_synthetic(f_values, repeats, base_seed, config), out_path,
                         format);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
