#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qcorr/sweep.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw qcorr::UsageError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum correlations of two Dirac modes under Hawking decoherence"};
    app.require_subcommand(1);

    // point
    auto* point = app.add_subcommand("point", "evaluate one parameter point, CSV to stdout");
    double lambda = 0.0, psi = 0.0, omega = 1.0, temp = 0.0;
    std::string region_str, convention_str = "strict";
    point->add_option("--lambda", lambda, "mixing parameter in [0,1]")->required();
    point->add_option("--psi", psi, "Bell-like angle in [0,pi/2] (radians)")->required();
    point->add_option("--omega", omega, "Dirac mode frequency, > 0")->required();
    point->add_option("--temp", temp, "Hawking temperature, >= 0 (0 = no evaporation)")
        ->required();
    point->add_option("--region", region_str, "initial|accessible|inaccessible|spacetime")
        ->required();
    point->add_option("--convention", convention_str, "strict|radial-limit (default strict)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run a sweep described by a JSON config");
    std::string config_path, sweep_out = ".";
    sweep->add_option("--config", config_path, "sweep config file (JSON)")->required();
    sweep->add_option("--out", sweep_out, "output directory (default .)");

    // figure
    auto* figure = app.add_subcommand("figure", "regenerate a figure preset");
    std::string figure_id, figure_out = ".";
    bool with_svg = false;
    figure->add_option("id", figure_id, "fig1|fig3|fig4|fig5|fig6|fig7|fig8")->required();
    figure->add_option("--out", figure_out, "output directory (default .)");
    figure->add_flag("--svg", with_svg, "also render an SVG chart");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (point->parsed()) {
            const auto region = qcorr::bipartition_from_string(region_str);
            if (!region) throw qcorr::UsageError("unknown region '" + region_str + "'");
            const auto convention = qcorr::convention_from_string(convention_str);
            if (!convention)
                throw qcorr::UsageError("unknown convention '" + convention_str + "'");
            const qcorr::MeasureRecord rec =
                qcorr::run_point(lambda, psi, omega, temp, *region, *convention);
            std::cout << qcorr::csv_string({rec});
        } else if (sweep->parsed()) {
            const qcorr::SweepSpec spec = qcorr::parse_sweep_config(read_file(config_path));
            const auto records = qcorr::run_sweep(spec);
            std::filesystem::create_directories(sweep_out);
            const std::string path =
                (std::filesystem::path(sweep_out) / "sweep.csv").string();
            qcorr::write_csv(records, path);
            std::cout << "wrote " << path << " (" << records.size() << " rows)\n";
        } else if (figure->parsed()) {
            for (const std::string& path :
                 qcorr::run_figure_command(figure_id, figure_out, with_svg))
                std::cout << "wrote " << path << "\n";
        }
    } catch (const qcorr::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qcorr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
