#include "cli_common.hpp"

#include "lietorus/quadform.hpp"

using namespace lietorus;

int main(int argc, char** argv) {
    CLI::App app{"mod-2 quadratic forms: classification and isometry"};
    app.require_subcommand(1);
    cli::GlobalOpts opts;
    cli::add_global(app, opts);

    int n = 2;
    std::string a_path, b_path;

    auto* classify = app.add_subcommand("classify", "isometry classes in rank n");
    classify->add_option("--n", n, "rank")->required();

    auto* isometric = app.add_subcommand("isometric", "decide isometry and print a witness");
    isometric->add_option("--a", a_path, "first form JSON")->required();
    isometric->add_option("--b", b_path, "second form JSON")->required();

    return cli::guarded_main(app, argc, argv, [&]() {
        if (classify->parsed()) {
            auto classes = classify_quadforms(n);
            Json out = Json::array();
            for (const auto& c : classes)
                out.push_back(Json{{"representative", c.representative.to_json()},
                                   {"orbit_size", c.orbit_size}});
            if (opts.json) return cli::emit_json(Json{{"n", n}, {"classes", out}}, opts);
            std::cout << classes.size() << " classes in rank " << n << ":\n";
            for (const auto& c : classes)
                std::cout << "  " << c.representative.to_json().dump()
                          << "  orbit size " << c.orbit_size << "\n";
            cli::write_out(opts, Json{{"n", n}, {"classes", out}}.dump(2));
            return 0;
        }
        QuadFormF2 ka = QuadFormF2::from_json(cli::load_json(a_path));
        QuadFormF2 kb = QuadFormF2::from_json(cli::load_json(b_path));
        auto tau = is_isometric(ka, kb);
        Json out;
        out["isometric"] = tau.has_value();
        if (tau) out["witness"] = *tau;
        if (opts.json) return cli::emit_json(out, opts);
        if (tau) {
            std::cout << "isometric; witness tau =";
            for (const auto& row : *tau) {
                std::cout << " [";
                for (int bit : row) std::cout << bit;
                std::cout << "]";
            }
            std::cout << "\n";
        } else {
            std::cout << "not isometric\n";
        }
        cli::write_out(opts, out.dump(2));
        return 0;
    });
}
