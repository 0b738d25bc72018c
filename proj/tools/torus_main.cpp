#include "cli_common.hpp"

using namespace lietorus;

namespace {

Json invariants_json(const TorusInvariants& inv) {
    Json gens = Json::array();
    for (const auto& g : inv.gamma_generators) gens.push_back(lattice_vec_to_json(g));
    Json table = Json::array();
    for (const auto& [deg, central] : inv.centrality)
        table.push_back(Json{{"degree", lattice_vec_to_json(deg)}, {"centroidal", central}});
    Json j;
    j["support"] = inv.support_desc;
    j["gamma_generators"] = gens;
    if (inv.finite) {
        j["coset_count"] = inv.coset_count;
        j["sigma"] = lattice_vec_to_json(inv.sigma);
    }
    j["centrality_table"] = table;
    j["crosscheck"] = inv.crosscheck.to_json();
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coordinate torus checks, isotopes and invariants"};
    app.require_subcommand(1);
    cli::GlobalOpts opts;
    cli::add_global(app, opts);

    std::string spec_path, jordan_u, alt_u1, alt_u2;
    bool opposite = false;

    auto* check = app.add_subcommand("check", "verify the flavor laws on a window");
    check->add_option("--spec", spec_path, "torus spec JSON")->required();

    auto* isotope = app.add_subcommand("isotope", "build an isotope and verify its flavor laws");
    isotope->add_option("--spec", spec_path, "torus spec JSON")->required();
    isotope->add_option("--jordan-u", jordan_u, "degree of u for a Jordan u-isotope, e.g. \"-1,0,0\"");
    isotope->add_option("--alt-u1", alt_u1, "degree of u1 for an alternative (u1,u2)-isotope");
    isotope->add_option("--alt-u2", alt_u2, "degree of u2 for an alternative (u1,u2)-isotope");
    isotope->add_flag("--opposite", opposite, "build the opposite torus instead");

    auto* inv_cmd = app.add_subcommand("invariants", "support, centroid and coset-sum invariants");
    inv_cmd->add_option("--spec", spec_path, "torus spec JSON")->required();

    return cli::guarded_main(app, argc, argv, [&]() {
        Torus t = torus_from_json(cli::load_json(spec_path));
        long long w = opts.window < 0 ? 2 : opts.window;
        if (check->parsed()) return cli::emit_report(check_flavor_laws(t, w), opts);
        if (isotope->parsed()) {
            Torus iso = t;
            if (opposite) {
                iso = t.opposite();
            } else if (!jordan_u.empty()) {
                iso = jordan_isotope(t, parse_vec(jordan_u));
            } else if (!alt_u1.empty() || !alt_u2.empty()) {
                LatticeVec u1 = alt_u1.empty() ? zero_vec(t.rank()) : parse_vec(alt_u1);
                LatticeVec u2 = alt_u2.empty() ? zero_vec(t.rank()) : parse_vec(alt_u2);
                iso = alternative_isotope(t, u1, u2);
            } else {
                throw std::invalid_argument("isotope: pass --jordan-u, --alt-u1/--alt-u2 or --opposite");
            }
            std::cout << "isotope: " << iso.kind() << "\nsupport: " << iso.support_desc() << "\n";
            return cli::emit_report(check_flavor_laws(iso, w), opts);
        }
        auto inv = invariants(t, opts.window < 0 ? 1 : opts.window);
        if (opts.json) return cli::emit_json(invariants_json(inv), opts) == 0 &&
                                  inv.crosscheck.all_pass()
                           ? 0
                           : 1;
        std::cout << "support: " << inv.support_desc << "\n";
        std::cout << "Gamma generators:";
        for (const auto& g : inv.gamma_generators) std::cout << " " << vec_str(g);
        std::cout << "\n";
        if (inv.finite)
            std::cout << "|S/Gamma| = " << inv.coset_count << ", Sigma(S/Gamma) = " << vec_str(inv.sigma)
                      << "\n";
        std::cout << "centrality table (window):\n";
        for (const auto& [deg, central] : inv.centrality)
            std::cout << "  " << vec_str(deg) << (central ? "  centroidal" : "  -") << "\n";
        return cli::emit_report(inv.crosscheck, opts);
    });
}
