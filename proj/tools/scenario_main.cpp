#include "cli_common.hpp"

#include "lietorus/scenario.hpp"

using namespace lietorus;

int main(int argc, char** argv) {
    CLI::App app{"named verification scenarios (the acceptance catalogue)"};
    app.require_subcommand(1);
    cli::GlobalOpts opts;
    cli::add_global(app, opts);

    std::string name;
    bool all = false;

    auto* run = app.add_subcommand("run", "run one scenario (or --all)");
    run->add_option("name", name, "scenario name");
    run->add_flag("--all", all, "run the whole catalogue");

    app.add_subcommand("list", "list the scenario catalogue");

    return cli::guarded_main(app, argc, argv, [&]() {
        if (!run->parsed()) {
            for (const auto& s : scenario_catalogue())
                std::cout << s.name << "\n    " << s.description << "\n";
            return 0;
        }
        RunOptions ropts{opts.seed, opts.window};
        if (all) {
            bool ok = true;
            Json out = Json::array();
            for (const auto& s : scenario_catalogue()) {
                Report rep = run_scenario(s, ropts);
                ok = ok && rep.all_pass();
                if (opts.json)
                    out.push_back(rep.to_json(opts.timings));
                else
                    std::cout << rep.text();
            }
            if (opts.json) cli::emit_json(out, opts);
            return ok ? 0 : 1;
        }
        if (name.empty()) throw std::invalid_argument("run: pass a scenario name or --all");
        const Scenario* s = find_scenario(name);
        if (!s) throw std::invalid_argument("unknown scenario: " + name);
        return cli::emit_report(run_scenario(*s, ropts), opts);
    });
}
