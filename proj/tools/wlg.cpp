#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wlg/cli.hpp"

int main(int argc, char** argv)
{
    using namespace wlg;

    CLI::App app{"Laurent polynomial mirrors of complete intersections in weighted projective spaces"};
    app.require_subcommand(1);

    std::string spec_arg;
    auto* check = app.add_subcommand("check", "Normalize a spec and report its numeric criteria");
    check->add_option("spec", spec_arg, "Spec as inline JSON, a file path, or - for stdin")->required();

    cli::MirrorOptions mirror_opts;
    std::string strategy = "exhaustive";
    auto* mirror = app.add_subcommand("mirror", "Build the Laurent polynomial mirror and verify its period");
    mirror->add_option("spec", spec_arg, "Spec as inline JSON, a file path, or - for stdin")->required();
    mirror->add_option("--N", mirror_opts.N, "Verify the series identity through t^N")->default_val(8);
    mirror->add_option("--strategy", strategy, "Partition search strategy")
        ->check(CLI::IsMember({"exhaustive", "reduction"}))
        ->default_val("exhaustive");
    mirror->add_flag("--emit-polytope", mirror_opts.emit_polytope, "Also print the Newton polytope");

    EnumerateOptions enum_opts;
    std::string require;
    std::string out_path;
    auto* enumerate = app.add_subcommand("enumerate", "Sweep normalized specs and classify them");
    enumerate->add_option("--max-weight-sum", enum_opts.max_weight_sum)->default_val(10);
    enumerate->add_option("--max-k", enum_opts.max_k)->default_val(1);
    enumerate->add_option("--require", require, "Comma-separated flags, ! negates (e.g. smooth,cartier,!relaxed)");
    enumerate->add_option("--verify-N", enum_opts.verify_N, "Verify the series identity per row through t^N")
        ->default_val(0);
    enumerate->add_option("--out", out_path, "Write JSON lines here instead of stdout");

    std::string poly_arg;
    auto* polytope = app.add_subcommand("polytope", "Newton polytope of a polynomial JSON file");
    polytope->add_option("polynomial", poly_arg)->required();

    unsigned period_N = 8;
    auto* period = app.add_subcommand("period", "Period sequence of a polynomial JSON file");
    period->add_option("polynomial", poly_arg)->required();
    period->add_option("--N", period_N)->default_val(8);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::exit_code::parse_error;
    }

    const unsigned threads = cli::worker_threads();
    if (*check) {
        return cli::cmd_check(spec_arg, std::cout, std::cerr);
    }
    if (*mirror) {
        mirror_opts.strategy = strategy == "reduction" ? PartitionStrategy::reduction : PartitionStrategy::exhaustive;
        mirror_opts.threads = threads;
        return cli::cmd_mirror(spec_arg, mirror_opts, std::cout, std::cerr);
    }
    if (*enumerate) {
        try {
            enum_opts.filter = RowFilter::parse(require);
        } catch (const ParseError& e) {
            std::cerr << "error: " << e.what() << '\n';
            return cli::exit_code::parse_error;
        }
        enum_opts.threads = threads;
        return cli::cmd_enumerate(enum_opts, out_path.empty() ? std::nullopt : std::optional(out_path), std::cout,
                                  std::cerr);
    }
    if (*polytope) {
        return cli::cmd_polytope(poly_arg, std::cout, std::cerr);
    }
    return cli::cmd_period(poly_arg, period_N, threads, std::cout, std::cerr);
}
