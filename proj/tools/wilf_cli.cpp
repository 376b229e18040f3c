// Command-line front end. Talks to the library only through wilf/wilf.h.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wilf/wilf.h"

namespace {

using json = nlohmann::ordered_json;

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitNoCover = 2,
    kExitInfeasible = 3,
    kExitLimit = 4,
};

// Failure carrying the exit code it maps to.
struct CliFailure {
    int code;
    std::string message;
};

int exit_code_for(wilf_status status) {
    switch (status) {
        case WILF_OK: return kExitOk;
        case WILF_ERR_NO_COVER: return kExitNoCover;
        case WILF_ERR_INFEASIBLE: return kExitInfeasible;
        case WILF_ERR_LIMIT: return kExitLimit;
        default: return kExitUsage;
    }
}

void check(wilf_status status) {
    if (status != WILF_OK) throw CliFailure{exit_code_for(status), wilf_last_error()};
}

struct TextDeleter {
    void operator()(wilf_text* t) const { wilf_text_free(t); }
};
struct PartitionDeleter {
    void operator()(wilf_partition* p) const { wilf_partition_free(p); }
};
struct ListDeleter {
    void operator()(wilf_partition_list* l) const { wilf_partition_list_free(l); }
};
struct CoverDeleter {
    void operator()(wilf_cover_set* c) const { wilf_cover_set_free(c); }
};
struct FamilyDeleter {
    void operator()(wilf_family* f) const { wilf_family_free(f); }
};

using TextPtr = std::unique_ptr<wilf_text, TextDeleter>;
using PartitionPtr = std::unique_ptr<wilf_partition, PartitionDeleter>;
using ListPtr = std::unique_ptr<wilf_partition_list, ListDeleter>;
using CoverPtr = std::unique_ptr<wilf_cover_set, CoverDeleter>;
using FamilyPtr = std::unique_ptr<wilf_family, FamilyDeleter>;

std::string take(wilf_text* raw) {
    TextPtr text(raw);
    return std::string(wilf_text_data(text.get()), wilf_text_size(text.get()));
}

std::string to_text(const wilf_partition* p) {
    wilf_text* out = nullptr;
    check(wilf_partition_to_text(p, &out));
    return take(out);
}

json to_json(const wilf_partition* p) {
    wilf_text* out = nullptr;
    check(wilf_partition_to_json(p, &out));
    return json::parse(take(out));
}

// Counts stay exact: plain JSON numbers when they fit, strings otherwise.
json count_json(const std::string& decimal) {
    if (decimal.size() < 20) return std::stoull(decimal);
    return decimal;
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string count_value(const std::string& kind, std::uint64_t n, std::uint64_t limit) {
    const wilf_count_kind k = kind == "f" ? WILF_COUNT_WILF : WILF_COUNT_FIXED;
    wilf_text* out = nullptr;
    check(wilf_count(k, n, limit, &out));
    return take(out);
}

std::vector<std::uint64_t> parse_list(const std::string& text) {
    std::vector<std::uint64_t> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
            throw CliFailure{kExitUsage, "expected a comma-separated list of nonnegative integers, got '" + text + "'"};
        }
        values.push_back(std::stoull(item));
    }
    return values;
}

struct Options {
    std::string format = "text";
    std::string out_file;

    std::string kind = "F";
    std::optional<std::uint64_t> n;
    std::optional<std::uint64_t> n_max;
    std::uint64_t n_min = 1;
    std::uint64_t step = 1;
    std::uint64_t limit = 0;
    std::uint64_t wilf_limit = WILF_DEFAULT_WILF_LIMIT;
    std::uint64_t fixed_limit = WILF_DEFAULT_FIXED_LIMIT;

    bool wilf_only = false;
    bool fixed_only = false;

    std::string partition;

    std::optional<std::uint64_t> k;
    std::uint64_t seed = 0;
    std::uint64_t count = 1;
    std::uint64_t r_override = 0;
    std::string xs;
    std::string n_values;
};

std::string run_count(const Options& o) {
    std::vector<std::uint64_t> ns;
    if (o.n) {
        ns.push_back(*o.n);
    } else if (o.n_max) {
        for (std::uint64_t n = o.n_min; n <= *o.n_max; ++n) ns.push_back(n);
    } else {
        throw CliFailure{kExitUsage, "count needs --n or --n-max"};
    }
    std::vector<std::string> values;
    for (std::uint64_t n : ns) values.push_back(count_value(o.kind, n, o.limit));

    std::string out;
    if (o.format == "json") {
        json arr = json::array();
        for (std::size_t i = 0; i < ns.size(); ++i) {
            arr.push_back({{"n", ns[i]}, {"kind", o.kind}, {"count", count_json(values[i])}});
        }
        return (o.n ? arr[0] : arr).dump(2) + "\n";
    }
    if (o.format == "csv") {
        out = "n,count\n";
        for (std::size_t i = 0; i < ns.size(); ++i) out += std::to_string(ns[i]) + ',' + values[i] + '\n';
        return out;
    }
    if (o.n) return values[0] + "\n";
    for (std::size_t i = 0; i < ns.size(); ++i) out += std::to_string(ns[i]) + ' ' + values[i] + '\n';
    return out;
}

std::string run_enumerate(const Options& o) {
    if (!o.n) throw CliFailure{kExitUsage, "enumerate needs --n"};
    if (o.wilf_only && o.fixed_only) throw CliFailure{kExitUsage, "--wilf-only and --fixed-only are exclusive"};
    const wilf_enum_mode mode = o.fixed_only ? WILF_ENUM_FIXED : o.wilf_only ? WILF_ENUM_WILF : WILF_ENUM_ALL;
    wilf_partition_list* raw = nullptr;
    check(wilf_enumerate(mode, *o.n, o.limit, &raw));
    ListPtr list(raw);
    const std::size_t size = wilf_partition_list_size(list.get());

    if (o.format == "json") {
        json arr = json::array();
        for (std::size_t i = 0; i < size; ++i) arr.push_back(to_json(wilf_partition_list_get(list.get(), i)));
        return arr.dump() + "\n";
    }
    std::string out = o.format == "csv" ? "partition\n" : "";
    for (std::size_t i = 0; i < size; ++i) out += to_text(wilf_partition_list_get(list.get(), i)) + '\n';
    return out;
}

std::string run_involute(const Options& o) {
    wilf_partition* raw = nullptr;
    check(wilf_partition_parse(o.partition.c_str(), &raw));
    PartitionPtr input(raw);
    wilf_partition* image_raw = nullptr;
    check(wilf_partition_involute(input.get(), &image_raw));
    PartitionPtr image(image_raw);
    if (o.format == "json") return to_json(image.get()).dump() + "\n";
    return to_text(image.get()) + "\n";
}

std::string run_cover(const Options& o) {
    if (!o.n) throw CliFailure{kExitUsage, "cover needs --n"};
    wilf_cover_set* cs_raw = nullptr;
    check(wilf_cover_set_for_weight(*o.n, &cs_raw));
    CoverPtr cs(cs_raw);
    wilf_partition* raw = nullptr;
    check(wilf_fixed_point_cover(cs.get(), *o.n, &raw));
    PartitionPtr cover(raw);

    std::uint64_t weight = 0;
    check(wilf_partition_weight(cover.get(), &weight));
    const bool fixed = wilf_partition_is_fixed_point(cover.get()) == 1;
    const bool in_set = wilf_cover_labels_in_set(cs.get(), cover.get()) == 1;
    if (weight != *o.n || !fixed || !in_set) {
        throw CliFailure{kExitUsage, "internal error: cover certificate failed verification"};
    }
    const std::size_t depth = wilf_cover_set_depth(cs.get());

    if (o.format == "json") {
        json obj{{"n", *o.n},
                 {"partition", to_json(cover.get())},
                 {"fixed_point", fixed},
                 {"labels_in_cover_set", in_set},
                 {"cover_depth", depth}};
        return obj.dump(2) + "\n";
    }
    if (o.format == "csv") {
        return "n,partition,fixed_point,labels_in_cover_set,cover_depth\n" + std::to_string(*o.n) + ',' +
               to_text(cover.get()) + ",true,true," + std::to_string(depth) + '\n';
    }
    return to_text(cover.get()) + "\n# attestation: weight=" + std::to_string(weight) +
           " fixed_point=yes labels_subset_of_A=yes (A built to depth " + std::to_string(depth) + ")\n";
}

std::string run_family(const Options& o) {
    if (!o.n) throw CliFailure{kExitUsage, "family needs --n"};
    std::vector<std::uint64_t> xs;
    if (!o.xs.empty()) xs = parse_list(o.xs);
    wilf_family_options opts{};
    opts.n = *o.n;
    opts.k = o.k ? *o.k : wilf_log_preset_k(*o.n);
    opts.r_override = o.r_override;
    opts.xs = xs.empty() ? nullptr : xs.data();
    opts.xs_count = xs.size();
    opts.seed = o.seed;
    wilf_family* raw = nullptr;
    check(wilf_family_create(&opts, &raw));
    FamilyPtr family(raw);

    const std::uint64_t K = wilf_family_k(family.get());
    const std::uint64_t R = wilf_family_r(family.get());
    const std::string log_size = fixed6(wilf_family_log_size_of(family.get()));

    std::vector<std::string> members;
    std::vector<json> members_json;
    std::vector<std::uint64_t> masses;
    for (std::uint64_t i = 0; i < o.count; ++i) {
        wilf_partition* member_raw = nullptr;
        std::uint64_t mass = 0;
        const wilf_status status = wilf_family_next(family.get(), &member_raw, &mass);
        if (status == WILF_ERR_INFEASIBLE) {
            throw CliFailure{kExitInfeasible, "member " + std::to_string(i) + " (n=" + std::to_string(*o.n) +
                                                  ", K=" + std::to_string(K) + ", R=" + std::to_string(R) +
                                                  ", seed=" + std::to_string(o.seed) + ") is infeasible: " +
                                                  wilf_last_error()};
        }
        check(status);
        PartitionPtr member(member_raw);
        members.push_back(to_text(member.get()));
        members_json.push_back(to_json(member.get()));
        masses.push_back(mass);
    }

    if (o.format == "json") {
        json arr = json::array();
        for (std::size_t i = 0; i < members.size(); ++i) {
            arr.push_back({{"index", i}, {"mass", masses[i]}, {"partition", members_json[i]}});
        }
        json obj{{"n", *o.n}, {"K", K}, {"R", R}, {"seed", o.seed}, {"ln_family_size", std::stod(log_size)},
                 {"members", arr}};
        return obj.dump(2) + "\n";
    }
    std::string out;
    if (o.format == "csv") {
        out = "n,K,R,seed,index,ln_family_size,mass,member\n";
        for (std::size_t i = 0; i < members.size(); ++i) {
            out += std::to_string(*o.n) + ',' + std::to_string(K) + ',' + std::to_string(R) + ',' +
                   std::to_string(o.seed) + ',' + std::to_string(i) + ',' + log_size + ',' +
                   std::to_string(masses[i]) + ',' + members[i] + '\n';
        }
        return out;
    }
    out = "# n=" + std::to_string(*o.n) + " K=" + std::to_string(K) + " R=" + std::to_string(R) +
          " seed=" + std::to_string(o.seed) + " ln_family_size=" + log_size + "\n";
    for (const std::string& m : members) out += m + '\n';
    return out;
}

std::string run_report(const Options& o) {
    std::vector<std::uint64_t> ns;
    if (!o.n_values.empty()) {
        ns = parse_list(o.n_values);
    } else if (o.n_max) {
        if (o.step == 0) throw CliFailure{kExitUsage, "--step must be positive"};
        for (std::uint64_t n = o.n_min; n <= *o.n_max; n += o.step) ns.push_back(n);
    } else {
        throw CliFailure{kExitUsage, "report needs --n-values or --n-max"};
    }
    wilf_text* out = nullptr;
    check(wilf_report(ns.data(), ns.size(), o.format == "json" ? WILF_REPORT_JSON : WILF_REPORT_CSV, o.wilf_limit,
                      o.fixed_limit, &out));
    return take(out);
}

constexpr const char* kTableNote =
    "# f(n) is a direct count; the commonly printed f-row is shifted by one and lists f(n-1) under label n";

std::string run_table(const Options& o) {
    if (!o.n_max) throw CliFailure{kExitUsage, "table needs --n-max"};
    std::vector<std::string> f, F;
    for (std::uint64_t n = 1; n <= *o.n_max; ++n) {
        f.push_back(count_value("f", n, o.limit));
        F.push_back(count_value("F", n, 0));
    }
    if (o.format == "json") {
        json rows = json::array();
        for (std::uint64_t n = 1; n <= *o.n_max; ++n) {
            rows.push_back({{"n", n}, {"f", count_json(f[n - 1])}, {"F", count_json(F[n - 1])}});
        }
        json obj{{"note", std::string(kTableNote).substr(2)}, {"rows", rows}};
        return obj.dump(2) + "\n";
    }
    const char sep = o.format == "csv" ? ',' : ' ';
    std::string out = std::string(kTableNote) + "\n";
    out += o.format == "csv" ? "n,f,F\n" : "# n f(n) F(n)\n";
    for (std::uint64_t n = 1; n <= *o.n_max; ++n) {
        out += std::to_string(n) + sep + f[n - 1] + sep + F[n - 1] + '\n';
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wilf partitions: counting, enumeration, involution, fixed-point covers and families"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--out", o.out_file, "Write output to FILE instead of standard output");

    auto* count = app.add_subcommand("count", "Count Wilf partitions (f) or involution fixed points (F)");
    count->add_option("--kind", o.kind, "f or F")->check(CLI::IsMember({"f", "F"}));
    auto* count_n = count->add_option("--n", o.n, "Single weight");
    count->add_option("--n-max", o.n_max, "Sweep 1..N (or --n-min..N)")->excludes(count_n);
    count->add_option("--n-min", o.n_min, "Start of the sweep");
    count->add_option("--limit", o.limit, "Feasibility guard (default 200 for f, 400 for F)");

    auto* enumerate = app.add_subcommand("enumerate", "List partitions of n");
    enumerate->add_option("--n", o.n, "Weight")->required();
    enumerate->add_flag("--wilf-only", o.wilf_only, "Only Wilf partitions");
    enumerate->add_flag("--fixed-only", o.fixed_only, "Only fixed points of the involution");
    enumerate->add_option("--limit", o.limit, "Feasibility guard");

    auto* involute = app.add_subcommand("involute", "Swap parts and multiplicities");
    involute->add_option("--partition", o.partition, "Partition such as 5^2+4^1+3^3+1^6")->required();

    auto* cover = app.add_subcommand("cover", "Fixed point of weight n built from the sparse cover set");
    cover->add_option("--n", o.n, "Weight")->required();

    auto* family = app.add_subcommand("family", "Members of the permutation-indexed family of fixed points");
    family->add_option("--n", o.n, "Weight")->required();
    family->add_option("--k", o.k, "Number of permutations K (default floor(ln n))");
    family->add_option("--seed", o.seed, "Sampler seed");
    family->add_option("--count", o.count, "Number of members to draw");
    family->add_option("--r-override", o.r_override, "Block size R instead of the formula value");
    family->add_option("--xs", o.xs, "Comma-separated labels instead of the smallest non-members");

    auto* report = app.add_subcommand("report", "Exact counts against the asymptotic estimates");
    auto* report_values = report->add_option("--n-values", o.n_values, "Comma-separated weights");
    report->add_option("--n-max", o.n_max, "Sweep --n-min..N")->excludes(report_values);
    report->add_option("--n-min", o.n_min, "Start of the sweep");
    report->add_option("--step", o.step, "Sweep step");
    report->add_option("--wilf-limit", o.wilf_limit, "Largest n with an exact f column (0 for none)");
    report->add_option("--fixed-limit", o.fixed_limit, "Largest n with an exact F column (0 for none)");

    auto* table = app.add_subcommand("table", "Table of f(n) and F(n) for n = 1..N");
    table->add_option("--n-max", o.n_max, "Largest n")->required();
    table->add_option("--limit", o.limit, "Feasibility guard for f");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        std::string output;
        if (*count) output = run_count(o);
        else if (*enumerate) output = run_enumerate(o);
        else if (*involute) output = run_involute(o);
        else if (*cover) output = run_cover(o);
        else if (*family) output = run_family(o);
        else if (*report) output = run_report(o);
        else if (*table) output = run_table(o);

        if (o.out_file.empty()) {
            std::cout << output;
        } else {
            std::ofstream file(o.out_file, std::ios::binary);
            if (!file) throw CliFailure{kExitUsage, "cannot open " + o.out_file};
            file << output;
        }
        return kExitOk;
    } catch (const CliFailure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    }
}
