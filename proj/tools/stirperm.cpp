// Command-line front end: counting, enumeration, sampling, classification,
// conversions, the series engine, statistics and the verification suites.
//
// Exit codes: 0 success, 1 usage or malformed input, 2 verification failure.

#include "stirperm/bijections.hpp"
#include "stirperm/core.hpp"
#include "stirperm/enumerate.hpp"
#include "stirperm/io.hpp"
#include "stirperm/localtypes.hpp"
#include "stirperm/series.hpp"
#include "stirperm/stats.hpp"
#include "stirperm/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string read_stdin() {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
}

int run(int argc, char** argv) {
    CLI::App app{"k-Stirling permutations, increasing trees and path diagrams"};
    app.require_subcommand(1);

    std::string klass = "stirling", from, to, suite = "all";
    int k = 2, n = 0, max_deg = 4, h = -1, max_n = 5, count = 1;
    std::uint64_t seed = 0;
    bool json = false, all_ones = false, mark_last_leaf = false;

    auto* cmd_count = app.add_subcommand("count", "exact object count");
    cmd_count->add_option("--class", klass)->check(CLI::IsMember({"stirling", "kary", "port"}));
    cmd_count->add_option("--k", k);
    cmd_count->add_option("--n", n)->required();

    auto* cmd_enum = app.add_subcommand("enumerate", "one formatted object per line");
    cmd_enum->add_option("--class", klass)->check(CLI::IsMember({"stirling", "kary", "port"}));
    cmd_enum->add_option("--k", k);
    cmd_enum->add_option("--n", n)->required();

    auto* cmd_random = app.add_subcommand("random", "seeded uniform objects");
    cmd_random->add_option("--class", klass)->check(CLI::IsMember({"stirling", "kary", "port"}));
    cmd_random->add_option("--k", k);
    cmd_random->add_option("--n", n)->required();
    cmd_random->add_option("--seed", seed)->required();
    cmd_random->add_option("--count", count);

    auto* cmd_classify = app.add_subcommand("classify", "local/node types of a stdin object");
    cmd_classify->add_option("--k", k)->required();
    cmd_classify->add_flag("--json", json);

    auto* cmd_convert = app.add_subcommand("convert", "convert a stdin object between encodings");
    cmd_convert->add_option("--from", from)
        ->required()
        ->check(CLI::IsMember({"perm", "tree", "pathdiagram"}));
    cmd_convert->add_option("--to", to)
        ->required()
        ->check(CLI::IsMember({"perm", "tree", "pathdiagram"}));
    cmd_convert->add_option("--k", k);
    // PORT conversions: convert --class port --from tree --to pathdiagram
    std::string conv_class = "kary";
    cmd_convert->add_option("--class", conv_class)->check(CLI::IsMember({"kary", "port"}));

    auto* cmd_series = app.add_subcommand("series", "continued-fraction type series");
    cmd_series->set_help_flag("--help", "print help and exit");  // frees -h for the height option
    cmd_series->add_option("--k", k)->required();
    cmd_series->add_option("--max-deg", max_deg)->required();
    cmd_series->add_option("--h", h);
    cmd_series->add_flag("--all-ones", all_ones);
    cmd_series->add_flag("--mark-last-leaf", mark_last_leaf);

    auto* cmd_verify = app.add_subcommand("verify", "self-contained verification suites");
    cmd_verify->add_option("--suite", suite)
        ->check(CLI::IsMember(
            {"counts", "gessel", "types", "pathdiagram", "series", "words", "stats", "all"}));
    cmd_verify->add_option("--max-n", max_n);

    auto* cmd_stats = app.add_subcommand("stats", "statistic profile of a stdin object");
    cmd_stats->add_option("--class", klass)
        ->required()
        ->check(CLI::IsMember({"stirling", "kary", "port"}));
    cmd_stats->add_option("--k", k);
    cmd_stats->add_flag("--json", json);

    CLI11_PARSE(app, argc, argv);
    using namespace stirperm;

    if (cmd_count->parsed()) {
        if (klass == "port")
            std::cout << count_port(n) << '\n';
        else
            std::cout << count_stirling(n, k) << '\n';
        return 0;
    }

    if (cmd_enum->parsed()) {
        if (klass == "stirling")
            for_each_stirling(n, k, [](const KStirlingPermutation& p) { std::cout << format(p) << '\n'; });
        else if (klass == "kary")
            for_each_kary_tree(n, k, [](const KaryIncreasingTree& t) { std::cout << format(t) << '\n'; });
        else
            for_each_port(n, [](const PortTree& t) { std::cout << format(t) << '\n'; });
        return 0;
    }

    if (cmd_random->parsed()) {
        for (int i = 0; i < count; ++i) {
            const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
            if (klass == "stirling")
                std::cout << format(random_stirling(n, k, s)) << '\n';
            else if (klass == "kary")
                std::cout << format(random_kary_tree(n, k, s)) << '\n';
            else
                std::cout << format(random_port(n, s)) << '\n';
        }
        return 0;
    }

    if (cmd_classify->parsed()) {
        const std::string in = read_stdin();
        std::vector<LocalTypeString> types;
        TypeHistogram hist;
        if (in.find('(') != std::string::npos) {
            const auto t = parse_kary_tree(in, k);
            types = node_types(t);
            hist = type_histogram(t);
        } else {
            const auto p = parse_stirling(in, k);
            types = local_types(p);
            hist = type_histogram(p);
        }
        if (json) {
            nlohmann::json out = to_json(hist);
            out["types"] = types;
            std::cout << out.dump(2) << '\n';
        } else {
            for (std::size_t i = 0; i < types.size(); ++i)
                std::cout << (i + 1) << ": " << types[i] << '\n';
            std::cout << "histogram:\n" << format(hist);
        }
        return 0;
    }

    if (cmd_convert->parsed()) {
        const std::string in = read_stdin();
        if (conv_class == "port") {
            if (from == "tree" && to == "pathdiagram") {
                std::cout << format(port_tree_to_pathdiagram(parse_port(in))) << '\n';
            } else if (from == "pathdiagram" && to == "tree") {
                std::cout << format(port_pathdiagram_to_tree(parse_pathdiagram(in, 0))) << '\n';
            } else {
                std::cerr << "error: PORT conversions are tree <-> pathdiagram\n";
                return 1;
            }
            return 0;
        }
        KaryIncreasingTree t;
        if (from == "perm")
            t = perm_to_tree(parse_stirling(in, k));
        else if (from == "tree")
            t = parse_kary_tree(in, k);
        else
            t = pathdiagram_to_tree(parse_pathdiagram(in, k));
        if (to == "perm")
            std::cout << format(tree_to_perm(t)) << '\n';
        else if (to == "tree")
            std::cout << format(t) << '\n';
        else
            std::cout << format(tree_to_pathdiagram(t)) << '\n';
        return 0;
    }

    if (cmd_series->parsed()) {
        TruncatedSeries s = cf_series(k, max_deg, h);
        if (mark_last_leaf) s = s.mark_last_leaf();
        if (all_ones) {
            const auto coeffs = s.all_ones();
            for (std::size_t d = 0; d < coeffs.size(); ++d)
                std::cout << "t^" << d << ' ' << coeffs[d] << '\n';
        } else {
            std::cout << format(s);
        }
        return 0;
    }

    if (cmd_verify->parsed()) {
        bool pass = true;
        for (const auto& result : verify::run_suites(suite, max_n)) {
            for (const auto& line : result.lines) std::cout << result.name << ": " << line.text << '\n';
            pass = pass && result.pass();
        }
        std::cout << (pass ? "PASS" : "FAIL") << '\n';
        return pass ? 0 : 2;
    }

    if (cmd_stats->parsed()) {
        const std::string in = read_stdin();
        StatProfile p;
        if (klass == "stirling")
            p = block_profile(parse_stirling(in, 2));
        else if (klass == "kary")
            p = lr_profile(parse_kary_tree(in, 2));
        else
            p = outdegree_profile(parse_port(in));
        if (json)
            std::cout << to_json(p).dump(2) << '\n';
        else
            std::cout << format(p);
        return 0;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const stirperm::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
