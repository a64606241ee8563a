#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "feq/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact spectral analyzer for linear two-point functional equations\n"
                 "  F(y) - F(x) = (y - x) * sum_i a_i f(alpha_i x + beta_i y)"};
    app.require_subcommand(1);

    feq::CliConfig config;
    std::string format = "text";
    int max_degree = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", config.input_path, "equation description file")->required();
        cmd->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* analyze =
        app.add_subcommand("analyze", "per-degree classification and solution basis");
    add_common(analyze);
    analyze->add_option("--max-degree", max_degree, "analyze degrees 1..P only")
        ->check(CLI::PositiveNumber);
    analyze
        ->add_option("--precision-bits", config.precision_bits,
                     "starting precision for embedding evaluations")
        ->check(CLI::Range(16, 65536));

    CLI::App* validate = app.add_subcommand("validate", "check the equation hypotheses only");
    add_common(validate);

    CLI::App* verify =
        app.add_subcommand("verify", "check a claimed (f, F) pair against the equation");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 64;
    }

    if (analyze->parsed()) config.command = feq::CliConfig::Command::Analyze;
    if (validate->parsed()) config.command = feq::CliConfig::Command::Validate;
    if (verify->parsed()) config.command = feq::CliConfig::Command::Verify;
    config.format = (format == "json") ? feq::OutputFormat::Json : feq::OutputFormat::Text;
    if (max_degree > 0) config.max_degree = max_degree;

    try {
        return feq::run(config, std::cout, std::cerr);
    } catch (const feq::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
