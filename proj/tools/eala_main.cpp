#include "cli_common.hpp"

#include "lietorus/chi.hpp"

using namespace lietorus;

int main(int argc, char** argv) {
    CLI::App app{"the EALA construction E(L, SCDer, 0) = D (+) L (+) C on degree windows"};
    app.require_subcommand(1);
    cli::GlobalOpts opts;
    cli::add_global(app, opts);

    std::string spec_path, shift_str, report_path;

    auto* build = app.add_subcommand("build", "construct E and run the window invariants");
    build->add_option("--spec", spec_path, "model spec JSON")->required();
    build->add_option("--report", report_path, "write the report JSON to a file");

    auto* chi_cmd = app.add_subcommand("chi", "build and verify the isotope isomorphism chi");
    chi_cmd->add_option("--spec", spec_path, "model spec JSON")->required();
    chi_cmd->add_option("--shift", shift_str, "base images, e.g. \"1\"")->required();

    return cli::guarded_main(app, argc, argv, [&]() {
        AnyModel model = model_from_json(cli::load_json(spec_path));
        auto* sl = std::get_if<SlModel>(&model);
        if (!sl)
            throw std::domain_error(
                "no invariant graded form is shipped for this model (sl over a group algebra or "
                "quantum torus required)");
        long long w = opts.window < 0 ? 2 : opts.window;

        if (build->parsed()) {
            EalaSpace e(*sl);
            std::size_t deg0 = 0;
            for (const auto& b : e.window(w))
                if (vec_is_zero(b.lambda)) ++deg0;
            std::cout << "E(" << sl->name() << "): degree-0 dimension " << deg0
                      << ", dim H = " << e.h_space().size() << "\n";
            Report rep = check_eala(e, {.window = w, .seed = opts.seed});
            if (!report_path.empty()) {
                std::ofstream out(report_path);
                if (!out) throw std::invalid_argument("cannot write " + report_path);
                out << rep.to_json(opts.timings).dump(2) << "\n";
            }
            return cli::emit_report(rep, opts);
        }

        ShiftHom s = parse_shift(shift_str, sl->lambda_rank());
        ChiMap chi(*sl, s);
        return cli::emit_report(verify_chi(chi, {.window = w, .seed = opts.seed}), opts);
    });
}
