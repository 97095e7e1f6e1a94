// Command line front end: sweep, invert, enumerate, verify, stats, render.
//
// Exit codes: 0 success, 1 invalid input, 2 no preimage found,
// 3 invariant failure in verify.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sweepmap/inversion.hpp"
#include "sweepmap/oracle.hpp"
#include "sweepmap/ranks.hpp"
#include "sweepmap/sweep.hpp"

using nlohmann::json;
using namespace sweepmap;

namespace {

Frame parse_frame(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) {
        fail(errc::bad_alphabet, "frame must be written m,n");
    }
    try {
        long long m = std::stoll(text.substr(0, comma));
        long long n = std::stoll(text.substr(comma + 1));
        return make_frame(m, n);
    } catch (const std::invalid_argument&) {
        fail(errc::bad_alphabet, "frame must be written m,n");
    } catch (const std::out_of_range&) {
        fail(errc::non_positive, "frame sides out of range");
    }
}

std::vector<std::string> gather_words(const std::string& word, const std::string& file) {
    std::vector<std::string> words;
    if (!word.empty()) words.push_back(word);
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) fail(errc::bad_alphabet, "cannot open " + file);
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (!line.empty()) words.push_back(line);
        }
    }
    if (words.empty()) fail(errc::bad_alphabet, "no input word given");
    return words;
}

std::vector<std::string> spaced_letters(const std::string& word) {
    std::vector<std::string> cells;
    cells.reserve(word.size());
    for (char ch : word) cells.emplace_back(1, ch);
    return cells;
}

std::vector<std::string> spaced_numbers(const std::vector<int>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (int v : values) cells.push_back(std::to_string(v));
    return cells;
}

// paper-style two line array: rows aligned column by column
void print_rows(std::ostream& os, const std::vector<std::pair<std::string, std::vector<std::string>>>& rows) {
    std::size_t label_width = 0;
    for (const auto& [label, cells] : rows) label_width = std::max(label_width, label.size());
    std::size_t columns = rows.empty() ? 0 : rows.front().second.size();
    std::vector<std::size_t> widths(columns, 0);
    for (const auto& [label, cells] : rows) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            widths[i] = std::max(widths[i], cells[i].size());
        }
    }
    for (const auto& [label, cells] : rows) {
        os << label << std::string(label_width - label.size(), ' ');
        for (std::size_t i = 0; i < cells.size(); ++i) {
            os << ' ' << std::string(widths[i] - cells[i].size(), ' ') << cells[i];
        }
        os << '\n';
    }
}

json ranks_json(const RankSet& rs) { return json(rs.sorted); }

std::string join(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(values[i]);
    }
    return out;
}

struct Options {
    std::string frame_text;
    std::string word;
    std::string file;
    std::string format = "plain";
    std::string algorithm = "auto";
    bool all = false;
    bool count_only = false;
    bool properties = false;
    unsigned long long budget = 1000000;
};

Algorithm parse_algorithm(const std::string& name) {
    if (name == "auto") return Algorithm::automatic;
    if (name == "fuss") return Algorithm::fuss;
    if (name == "recip") return Algorithm::recip;
    if (name == "brute") return Algorithm::brute;
    fail(errc::bad_alphabet, "unknown algorithm '" + name + "'");
}

json telemetry_json(const InversionOutcome& out) {
    json branching = json::array();
    for (std::size_t depth = 0; depth < out.by_depth.size(); ++depth) {
        const DepthStats& d = out.by_depth[depth];
        branching.push_back({{"depth", depth},
                             {"nodes", d.nodes},
                             {"branching_nodes", d.branching_nodes},
                             {"candidates_total", d.candidates_total},
                             {"candidates_max", d.candidates_max}});
    }
    return json{{"nodes", out.nodes_visited},
                {"max_depth", out.max_depth},
                {"max_branching", out.max_branching()},
                {"branching", branching}};
}

int cmd_sweep(const Options& opt) {
    Frame frame = parse_frame(opt.frame_text);
    json results = json::array();
    for (const std::string& word : gather_words(opt.word, opt.file)) {
        PathWord path = parse_path(word, frame);
        RankWalk walk = rank_walk(path);
        PathWord swept = phi(path);
        bool dyck = is_dyck(path);
        if (opt.format == "plain") {
            print_rows(std::cout, {{"path", spaced_letters(to_string(path))},
                                   {"rank", spaced_numbers(walk.values)}});
            std::cout << '\n';
            RankSet rs = rank_set(path);
            std::vector<std::pair<std::string, std::vector<std::string>>> rows = {
                {"sweep", spaced_letters(to_string(swept))},
                {"sorted", spaced_numbers(rs.sorted)}};
            if (dyck) {
                rows.emplace_back("sigma", spaced_letters(sw_word(rs).letters));
                rows.emplace_back("rho", spaced_letters(en_word(rs).letters));
            }
            print_rows(std::cout, rows);
            if (!dyck) std::cout << "(not a Dyck path: sigma/rho undefined)\n";
        } else {
            RankSet rs = rank_set(path);
            json r{{"path", to_string(path)},
                   {"phi", to_string(swept)},
                   {"rank_walk", walk.values},
                   {"sorted_ranks", rs.sorted},
                   {"dyck", dyck}};
            if (dyck) {
                r["sigma"] = sw_word(rs).letters;
                r["rho"] = en_word(rs).letters;
            }
            results.push_back(r);
        }
    }
    if (opt.format != "plain") {
        json doc{{"m", frame.m}, {"n", frame.n}, {"command", "sweep"},
                 {"input", opt.word.empty() ? opt.file : opt.word},
                 {"result", results.size() == 1 ? results.front() : results}};
        std::cout << doc.dump(2) << '\n';
    }
    return 0;
}

int cmd_invert(const Options& opt) {
    Frame frame = parse_frame(opt.frame_text);
    Algorithm alg = parse_algorithm(opt.algorithm);
    SearchMode mode = opt.all ? SearchMode::find_all : SearchMode::find_first;
    json results = json::array();
    for (const std::string& word : gather_words(opt.word, opt.file)) {
        SWWord sigma = make_sw_word(frame, word);
        InvertReport report = invert_phi_report(sigma, alg, mode);
        if (opt.format == "plain") {
            for (std::size_t i = 0; i < report.paths.size(); ++i) {
                std::cout << "preimage: " << to_string(report.paths[i]) << '\n';
                std::cout << "ranks:    " << to_string(report.outcome.preimages[i]) << '\n';
            }
            std::cout << "algorithm: " << algorithm_name(report.used)
                      << "  nodes: " << report.outcome.nodes_visited
                      << "  max depth: " << report.outcome.max_depth
                      << "  max branching: " << report.outcome.max_branching() << '\n';
        } else {
            json preimages = json::array();
            for (std::size_t i = 0; i < report.paths.size(); ++i) {
                preimages.push_back({{"word", to_string(report.paths[i])},
                                     {"ranks", ranks_json(report.outcome.preimages[i])}});
            }
            results.push_back({{"input", word},
                               {"preimages", preimages},
                               {"algorithm", algorithm_name(report.used)},
                               {"telemetry", telemetry_json(report.outcome)}});
        }
    }
    if (opt.format != "plain") {
        json doc{{"m", frame.m}, {"n", frame.n}, {"command", "invert"},
                 {"input", opt.word.empty() ? opt.file : opt.word},
                 {"result", results.size() == 1 ? results.front() : results}};
        std::cout << doc.dump(2) << '\n';
    }
    return 0;
}

int cmd_enumerate(const Options& opt) {
    Frame frame = parse_frame(opt.frame_text);
    unsigned long long total = count_dyck(frame);
    if (opt.count_only) {
        if (opt.format == "plain") {
            std::cout << total << '\n';
        } else {
            json doc{{"m", frame.m}, {"n", frame.n}, {"command", "enumerate"},
                     {"input", ""}, {"result", {{"count", total}}}};
            std::cout << doc.dump(2) << '\n';
        }
        return 0;
    }
    if (total > opt.budget) {
        fail(errc::budget_exceeded, "frame has " + std::to_string(total) +
                                        " paths, budget is " + std::to_string(opt.budget));
    }
    if (opt.format == "plain") {
        for_each_dyck(frame, [](const PathWord& p) {
            std::cout << to_string(p) << '\n';
            return true;
        });
    } else {
        json words = json::array();
        for_each_dyck(frame, [&](const PathWord& p) {
            words.push_back(to_string(p));
            return true;
        });
        json doc{{"m", frame.m}, {"n", frame.n}, {"command", "enumerate"},
                 {"input", ""}, {"result", {{"count", total}, {"words", words}}}};
        std::cout << doc.dump(2) << '\n';
    }
    return 0;
}

int cmd_verify(const Options& opt) {
    Frame frame = parse_frame(opt.frame_text);
    VerificationReport report = verify_bijection(frame, opt.budget);
    VerificationReport props;
    bool all_ok = report.bijective;
    if (opt.properties) {
        props = verify_properties(frame, opt.budget);
        all_ok = all_ok && props.failures.empty();
    }
    if (opt.format == "plain") {
        std::cout << "frame " << frame.m << "," << frame.n << ": " << report.paths_checked
                  << " paths, image size " << report.phi_image_size << ", "
                  << (report.bijective ? "bijective" : "NOT bijective") << " ("
                  << report.elapsed_seconds << "s)\n";
        for (const auto& [check, witness] : report.failures) {
            std::cout << "failure: " << check << " witness " << witness << '\n';
        }
        if (opt.properties) {
            std::cout << "properties: " << (props.failures.empty() ? "all pass" : "FAILED")
                      << " (" << props.elapsed_seconds << "s)\n";
            for (const auto& [check, witness] : props.failures) {
                std::cout << "failure: " << check << " witness " << witness << '\n';
            }
        }
    } else {
        json doc{{"m", frame.m}, {"n", frame.n}, {"command", "verify"}, {"input", ""},
                 {"result", json::parse(report_to_json(report))}};
        if (opt.properties) doc["properties"] = json::parse(report_to_json(props));
        std::cout << doc.dump(2) << '\n';
    }
    return all_ok ? 0 : 3;
}

int cmd_stats(const Options& opt) {
    Frame frame = parse_frame(opt.frame_text);
    json results = json::array();
    for (const std::string& word : gather_words(opt.word, opt.file)) {
        PathWord path = parse_path(word, frame);
        if (!is_dyck(path)) fail(errc::not_dyck, "stats needs a Dyck path");
        RankSet rs = rank_set(path);
        EndSets ends = end_sets(rs);
        RankSet comp = complement(rs);
        if (opt.format == "plain") {
            std::cout << "word:             " << to_string(path) << '\n'
                      << "rank walk:        " << join(rank_walk(path).values) << '\n'
                      << "sorted ranks:     " << to_string(rs) << '\n'
                      << "area (squares):   " << area_by_squares(path) << '\n'
                      << "area (rank sum):  " << area_from_ranks(rs) << '\n'
                      << "key:              " << key_of(rs) << '\n'
                      << "delta:            " << delta_of(rs) << '\n'
                      << "south ends:       " << join(ends.south) << '\n'
                      << "west ends:        " << join(ends.west) << '\n'
                      << "east ends:        " << join(ends.east) << '\n'
                      << "north ends:       " << join(ends.north) << '\n'
                      << "complement:       " << to_string(comp) << '\n';
        } else {
            results.push_back({{"word", to_string(path)},
                               {"rank_walk", rank_walk(path).values},
                               {"sorted_ranks", rs.sorted},
                               {"area_by_squares", area_by_squares(path)},
                               {"area_from_ranks", area_from_ranks(rs)},
                               {"key", key_of(rs)},
                               {"delta", delta_of(rs)},
                               {"south", ends.south},
                               {"west", ends.west},
                               {"east", ends.east},
                               {"north", ends.north},
                               {"complement", comp.sorted}});
        }
    }
    if (opt.format != "plain") {
        json doc{{"m", frame.m}, {"n", frame.n}, {"command", "stats"},
                 {"input", opt.word.empty() ? opt.file : opt.word},
                 {"result", results.size() == 1 ? results.front() : results}};
        std::cout << doc.dump(2) << '\n';
    }
    return 0;
}

int cmd_render(const Options& opt) {
    Frame frame = parse_frame(opt.frame_text);
    json results = json::array();
    for (const std::string& word : gather_words(opt.word, opt.file)) {
        PathWord path = parse_path(word, frame);
        std::string grid = render_ascii(path);
        if (opt.format == "plain") {
            std::cout << grid;
        } else {
            results.push_back({{"word", to_string(path)}, {"grid", grid}});
        }
    }
    if (opt.format != "plain") {
        json doc{{"m", frame.m}, {"n", frame.n}, {"command", "render"},
                 {"input", opt.word.empty() ? opt.file : opt.word},
                 {"result", results.size() == 1 ? results.front() : results}};
        std::cout << doc.dump(2) << '\n';
    }
    return 0;
}

void add_common(CLI::App* cmd, Options& opt, bool wants_word) {
    cmd->add_option("frame", opt.frame_text, "frame as m,n")->required();
    if (wants_word) {
        cmd->add_option("word", opt.word, "input word");
        cmd->add_option("--file", opt.file, "file with one word per line");
    }
    cmd->add_option("--format", opt.format, "plain or structured")
        ->check(CLI::IsMember({"plain", "structured"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sweep map toolkit for rational Dyck paths"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* sweep = app.add_subcommand("sweep", "sweep a path and show its rank data");
    add_common(sweep, opt, true);

    CLI::App* invert = app.add_subcommand("invert", "find the path(s) a word is swept from");
    add_common(invert, opt, true);
    invert->add_option("--algorithm", opt.algorithm, "auto, fuss, recip or brute")
        ->check(CLI::IsMember({"auto", "fuss", "recip", "brute"}));
    invert->add_flag("--all", opt.all, "report every preimage");

    CLI::App* enumerate = app.add_subcommand("enumerate", "list the Dyck paths of a frame");
    add_common(enumerate, opt, false);
    enumerate->add_flag("--count-only", opt.count_only, "print only the count");
    enumerate->add_option("--budget", opt.budget, "largest path count to materialize");

    CLI::App* verify = app.add_subcommand("verify", "exhaustively check the sweep bijection");
    add_common(verify, opt, false);
    verify->add_flag("--properties", opt.properties, "also run the per-path identity checks");
    verify->add_option("--budget", opt.budget, "largest path count to enumerate");

    CLI::App* stats = app.add_subcommand("stats", "rank statistics of a Dyck path");
    add_common(stats, opt, true);

    CLI::App* render = app.add_subcommand("render", "draw a path in its frame");
    add_common(render, opt, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) return cmd_sweep(opt);
        if (invert->parsed()) return cmd_invert(opt);
        if (enumerate->parsed()) return cmd_enumerate(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (stats->parsed()) return cmd_stats(opt);
        if (render->parsed()) return cmd_render(opt);
    } catch (const sweep_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == errc::no_preimage ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
