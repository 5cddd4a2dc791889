// softdress: batch front-end for the dressed-qubit soft-photon library.
//
// Exit codes: 0 success, 2 config error, 3 numerical-contract violation,
// 4 I/O error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "softdress/runner.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open config file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const softdress::ResultTable& table, const std::string& format,
          const std::string& out_path)
{
    const std::string bytes = softdress::write_output(table, format);
    if (out_path.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open output file '" + out_path + "'");
    out << bytes;
    if (!out) throw std::ios_base::failure("write failed for '" + out_path + "'");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"soft-photon dressing factors and charged-qubit entanglement"};
    app.require_subcommand(1);

    std::string config_path, out_path, format, preset;
    double lambda_override = 0.0, offshell = 0.0;
    int workers = 1;

    const std::vector<std::string> names = {"kin",    "phase", "soft", "scan",
                                            "cancel", "cloud", "fock", "entangle"};
    for (const auto& name : names) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "run configuration file")->required();
        sub->add_option("--out", out_path, "output file (default: stdout)");
        sub->add_option("--format", format, "csv or json (overrides config)");
        sub->add_option("--lambda", lambda_override, "single IR cutoff (overrides lambda_list)");
        sub->add_option("--workers", workers, "scan worker count");
        if (name == "cancel")
            sub->add_option("--offshell", offshell, "shrink |dv1| by this amount");
        if (name == "entangle")
            sub->add_option("--preset", preset, "spin-state preset (overrides config)");
    }

    CLI11_PARSE(app, argc, argv);
    const std::string subcommand = app.get_subcommands().front()->get_name();

    try {
        softdress::RunConfig cfg = softdress::parse_config(read_file(config_path));
        if (lambda_override != 0.0) cfg.lambda_list = {lambda_override};
        if (!preset.empty()) cfg.preset = preset;
        if (!format.empty()) cfg.format = format;
        softdress::validate_config(cfg);

        softdress::RunOptions opts;
        opts.offshell = offshell;
        opts.workers = workers;

        const softdress::ResultTable table = softdress::run(subcommand, cfg, opts);
        emit(table, cfg.format, out_path.empty() ? cfg.out_path : out_path);
        return 0;
    } catch (const softdress::ConfigError& e) {
        std::cerr << "softdress " << subcommand << ": " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "softdress " << subcommand << ": I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "softdress " << subcommand << ": " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "softdress " << subcommand << ": " << e.what() << "\n";
        return kExitNumerical;
    }
}
