#pragma once

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lietorus/io.hpp"
#include "lietorus/report.hpp"

namespace cli {

struct GlobalOpts {
    std::uint64_t seed = 0;
    long long window = -1; // -1: per-model default
    bool json = false;
    bool timings = false;
    std::string out;
};

inline void add_global(CLI::App& app, GlobalOpts& opts) {
    app.fallthrough();
    app.add_option("--seed", opts.seed, "deterministic sampling seed");
    app.add_option("--window", opts.window, "degree window half-width");
    app.add_flag("--json", opts.json, "emit JSON instead of text");
    app.add_flag("--timings", opts.timings, "include wall-clock durations in JSON output");
    app.add_option("--out", opts.out, "write the output to a file as well");
}

inline lietorus::Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    lietorus::Json j;
    in >> j;
    return j;
}

inline void write_out(const GlobalOpts& opts, const std::string& text) {
    if (opts.out.empty()) return;
    std::ofstream out(opts.out);
    if (!out) throw std::invalid_argument("cannot write " + opts.out);
    out << text << "\n";
}

inline int emit_report(const lietorus::Report& rep, const GlobalOpts& opts) {
    std::string text = opts.json ? rep.to_json(opts.timings).dump(2) : rep.text();
    std::cout << text;
    if (opts.json) std::cout << "\n";
    write_out(opts, text);
    return rep.all_pass() ? 0 : 1;
}

inline int emit_json(const lietorus::Json& j, const GlobalOpts& opts) {
    std::string text = j.dump(2);
    std::cout << text << "\n";
    write_out(opts, text);
    return 0;
}

/// Exit code contract: 0 all checks pass, 1 a check failed, 2 usage or
/// schema error.
template <class Fn>
int guarded_main(CLI::App& app, int argc, char** argv, Fn body) {
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        return body();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace cli
