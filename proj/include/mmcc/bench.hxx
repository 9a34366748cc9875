#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "clb.hxx"
#include "graph.hxx"
#include "greedy.hxx"
#include "intersection_table.hxx"
#include "synth.hxx"

namespace mmcc {

struct BenchConfig {
    bool skip_clb = false;      // for graphs where the dense table is too costly
    bool all_variants = false;  // also run the 24-variant search
    bool parallel_variants = true;
    std::size_t table_max_nodes = IntersectionTable::default_max_nodes;
    std::size_t exact_node_limit = 13;
};

struct BenchRecord {
    std::string instance;
    std::optional<std::size_t> n, m, delta;
    std::optional<std::size_t> clb;
    std::optional<std::size_t> phi_a, phi_a_star;
    std::optional<std::string> best_choices;
    std::optional<double> t_clb_ms, t_a_ms, t_a_star_ms;
    std::optional<std::uint64_t> seed;
    std::string timestamp;
    std::string error; // empty on success

    bool operator==(const BenchRecord&) const = default;
};

// A benchmark input: either an edge-list file or a synthetic spec.
struct BenchInstance {
    std::string name;
    std::variant<std::string, SynthSpec> source; // file path or generator spec
};

inline std::string utc_timestamp_now()
{
    std::time_t const now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

namespace detail {

inline double elapsed_ms(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

} // namespace detail

// Runs the bound and the greedy variants on one already-parsed graph. The
// timestamp and any seed are recorded; timing covers the algorithm calls
// only (the table build is charged to the bound, which is what needs it).
inline BenchRecord bench_graph(const std::string& name, const Graph& g, const BenchConfig& config,
                               std::optional<std::uint64_t> seed = std::nullopt)
{
    BenchRecord rec;
    rec.instance = name;
    rec.seed = seed;
    rec.timestamp = utc_timestamp_now();
    rec.n = g.node_count();
    rec.m = g.edge_count();
    rec.delta = g.max_degree();
    try {
        auto const t_table = std::chrono::steady_clock::now();
        IntersectionTable const table = build_intersection_table(g, config.table_max_nodes);
        double const table_ms = detail::elapsed_ms(t_table);

        if (!config.skip_clb) {
            auto const t0 = std::chrono::steady_clock::now();
            auto const cert = compute_clb(g, table);
            rec.t_clb_ms = table_ms + detail::elapsed_ms(t0);
            rec.clb = cert.d;
        }

        auto const t1 = std::chrono::steady_clock::now();
        auto const a = run_variant_a(g, table);
        rec.t_a_ms = detail::elapsed_ms(t1);
        rec.phi_a = a.phi;

        if (config.all_variants) {
            auto const t2 = std::chrono::steady_clock::now();
            auto const best = run_best_variant(g, table, config.parallel_variants);
            rec.t_a_star_ms = detail::elapsed_ms(t2);
            rec.phi_a_star = best.best.phi;
            rec.best_choices = to_string(best.best.choices);
        }
    } catch (const std::exception& e) {
        rec.error = e.what();
    }
    return rec;
}

// Benchmarks a list of files and synthetic specs; per-instance failures are
// recorded in the error column, never thrown.
inline std::vector<BenchRecord> run_bench(const std::vector<BenchInstance>& instances,
                                          const BenchConfig& config)
{
    std::vector<BenchRecord> records;
    records.reserve(instances.size());
    for (auto const& instance : instances) {
        if (auto const* path = std::get_if<std::string>(&instance.source)) {
            std::ifstream in(*path);
            if (!in) {
                BenchRecord rec;
                rec.instance = instance.name;
                rec.timestamp = utc_timestamp_now();
                rec.error = "cannot open file: " + *path;
                records.push_back(std::move(rec));
                continue;
            }
            try {
                auto const parsed = parse_edge_list(in);
                records.push_back(bench_graph(instance.name, parsed.graph, config));
            } catch (const std::exception& e) {
                BenchRecord rec;
                rec.instance = instance.name;
                rec.timestamp = utc_timestamp_now();
                rec.error = e.what();
                records.push_back(std::move(rec));
            }
        } else {
            auto const& spec = std::get<SynthSpec>(instance.source);
            try {
                Graph const g = planted_partition_graph(spec);
                records.push_back(bench_graph(instance.name, g, config, spec.seed));
            } catch (const std::exception& e) {
                BenchRecord rec;
                rec.instance = instance.name;
                rec.timestamp = utc_timestamp_now();
                rec.seed = spec.seed;
                rec.error = e.what();
                records.push_back(std::move(rec));
            }
        }
    }
    return records;
}

// Grid of planted-partition instances with 10 cliques of 10 nodes, one
// record per (f, repeat). Seeds are derived as base_seed + 10007*f + repeat
// and recorded per row.
inline std::vector<BenchRecord> sweep_synthetic(const std::vector<std::size_t>& f_values,
                                                std::size_t repeats, std::uint64_t base_seed,
                                                const BenchConfig& config)
{
    std::vector<BenchInstance> instances;
    instances.reserve(f_values.size() * repeats);
    for (std::size_t f : f_values)
        for (std::size_t r = 0; r < repeats; ++r) {
            SynthSpec spec;
            spec.cliques = 10;
            spec.clique_size = 10;
            spec.flips = f;
            spec.seed = base_seed + 10007ull * f + r;
            instances.push_back({"synth-k10-s10-f" + std::to_string(f) + "-r" + std::to_string(r),
                                 spec});
        }
    return run_bench(instances, config);
}

// --- CSV serialization -----------------------------------------------------
//
// First line is a versioned format marker, second line the column header.
// Fields containing separators are quoted RFC-4180 style. Doubles are written
// with enough digits to round-trip exactly.

inline constexpr const char* csv_format_marker = "# mmcc bench csv v1";
inline constexpr const char* csv_column_header =
    "instance,n,m,delta,clb,phi_A,phi_A_star,best_choices,t_clb_ms,t_A_ms,t_A_star_ms,seed,"
    "timestamp,error";

namespace detail {

inline std::string csv_escape(const std::string& field)
{
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

inline std::string format_double(double value)
{
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

template <class T>
inline std::string opt_to_string(const std::optional<T>& value)
{
    if (!value)
        return "";
    if constexpr (std::is_same_v<T, double>)
        return format_double(*value);
    else if constexpr (std::is_same_v<T, std::string>)
        return *value;
    else
        return std::to_string(*value);
}

inline std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char const c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

template <class T>
inline std::optional<T> parse_optional(const std::string& field)
{
    if (field.empty())
        return std::nullopt;
    if constexpr (std::is_same_v<T, std::string>) {
        return field;
    } else if constexpr (std::is_same_v<T, double>) {
        return std::stod(field);
    } else {
        return static_cast<T>(std::stoull(field));
    }
}

} // namespace detail

inline void write_csv(std::ostream& out, const std::vector<BenchRecord>& records)
{
    out << csv_format_marker << '\n' << csv_column_header << '\n';
    for (auto const& r : records) {
        out << detail::csv_escape(r.instance) << ',' << detail::opt_to_string(r.n) << ','
            << detail::opt_to_string(r.m) << ',' << detail::opt_to_string(r.delta) << ','
            << detail::opt_to_string(r.clb) << ',' << detail::opt_to_string(r.phi_a) << ','
            << detail::opt_to_string(r.phi_a_star) << ','
            << detail::csv_escape(detail::opt_to_string(r.best_choices)) << ','
            << detail::opt_to_string(r.t_clb_ms) << ',' << detail::opt_to_string(r.t_a_ms) << ','
            << detail::opt_to_string(r.t_a_star_ms) << ',' << detail::opt_to_string(r.seed) << ','
            << detail::csv_escape(r.timestamp) << ',' << detail::csv_escape(r.error) << '\n';
    }
}

inline std::vector<BenchRecord> read_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line != csv_format_marker)
        throw std::runtime_error("not a mmcc bench csv: missing format marker");
    if (!std::getline(in, line) || line != csv_column_header)
        throw std::runtime_error("not a mmcc bench csv: unexpected column header");
    std::vector<BenchRecord> records;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        auto const fields = detail::split_csv_line(line);
        if (fields.size() != 14)
            throw std::runtime_error("bad csv row: expected 14 fields, got " +
                                     std::to_string(fields.size()));
        BenchRecord r;
        r.instance = fields[0];
        r.n = detail::parse_optional<std::size_t>(fields[1]);
        r.m = detail::parse_optional<std::size_t>(fields[2]);
        r.delta = detail::parse_optional<std::size_t>(fields[3]);
        r.clb = detail::parse_optional<std::size_t>(fields[4]);
        r.phi_a = detail::parse_optional<std::size_t>(fields[5]);
        r.phi_a_star = detail::parse_optional<std::size_t>(fields[6]);
        r.best_choices = detail::parse_optional<std::string>(fields[7]);
        r.t_clb_ms = detail::parse_optional<double>(fields[8]);
        r.t_a_ms = detail::parse_optional<double>(fields[9]);
        r.t_a_star_ms = detail::parse_optional<double>(fields[10]);
        r.seed = detail::parse_optional<std::uint64_t>(fields[11]);
        r.timestamp = fields[12];
        r.error = fields[13];
        records.push_back(std::move(r));
    }
    return records;
}

inline nlohmann::json record_to_json(const BenchRecord& r)
{
    nlohmann::json j;
    auto set = [&j](const char* key, const auto& opt) {
        if (opt)
            j[key] = *opt;
        else
            j[key] = nullptr;
    };
    j["instance"] = r.instance;
    set("n", r.n);
    set("m", r.m);
    set("delta", r.delta);
    set("clb", r.clb);
    set("phi_A", r.phi_a);
    set("phi_A_star", r.phi_a_star);
    set("best_choices", r.best_choices);
    set("t_clb_ms", r.t_clb_ms);
    set("t_A_ms", r.t_a_ms);
    set("t_A_star_ms", r.t_a_star_ms);
    set("seed", r.seed);
    j["timestamp"] = r.timestamp;
    j["error"] = r.error;
    return j;
}

} // namespace mmcc
