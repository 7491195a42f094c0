#include "certify/checkfile.hpp"
#include "certify/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int emit(const certify::Report& rep, const std::string& format, const std::string& out_path) {
    std::string payload;
    if (format == "json")
        payload = certify::report_to_json(rep).dump(2) + "\n";
    else
        payload = certify::report_to_text(rep);
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot open output path '" << out_path << "'\n";
            return 3;
        }
        out << payload;
    }
    return certify::report_exit_code(rep);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certificate checker for cylinder cancellation constructions"};
    app.require_subcommand(1);

    certify::PipelineConfig config;
    std::string format = "text";
    std::string out_path;

    auto* pipe = app.add_subcommand("pipeline", "run a built-in verification pipeline");
    std::string name;
    pipe->add_option("name", name, "kr-cylinder | danielewski | remarks | all")->required();
    pipe->add_option("--report", format, "report format: json | text")
        ->check(CLI::IsMember({"json", "text"}));
    pipe->add_option("--out", out_path, "write the report to a file instead of stdout");
    pipe->add_option("--kernel-degree", config.kernel_degree, "bounded-degree kernel slice degree");
    pipe->add_option("--ansatz-degree", config.ansatz_degree, "splitting ansatz degree bound");
    pipe->add_option("--lnd-cap", config.lnd_cap, "iteration cap for nilpotency certificates");
    pipe->add_flag("--negative-controls", config.negative_controls,
                   "include corrupted variants that must be refuted");

    auto* chk = app.add_subcommand("check-file", "run a declarative check list");
    std::string path;
    chk->add_option("file", path, "check list file")->required();
    chk->add_option("--report", format, "report format: json | text")
        ->check(CLI::IsMember({"json", "text"}));
    chk->add_option("--out", out_path, "write the report to a file instead of stdout");
    chk->add_option("--lnd-cap", config.lnd_cap, "iteration cap for nilpotency certificates");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (pipe->parsed()) {
            if (name == "all") {
                int worst = 0;
                for (const char* n : {"kr-cylinder", "danielewski", "remarks"}) {
                    const certify::Report rep = certify::run_pipeline(n, config);
                    const int code = emit(rep, format, out_path.empty() ? "" : out_path + "." + n);
                    worst = std::max(worst, code);
                }
                return worst;
            }
            return emit(certify::run_pipeline(name, config), format, out_path);
        }
        return emit(certify::run_check_file_path(path, config), format, out_path);
    } catch (const certify::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
