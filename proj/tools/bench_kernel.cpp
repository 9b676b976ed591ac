// Times the pruned and naive constant-term kernels on a Laurent mirror.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wlg/benchmark.hpp"
#include "wlg/hori_vafa.hpp"
#include "wlg/io.hpp"
#include "wlg/nef_partition.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Constant-term kernel benchmark"};
    std::string spec_arg = R"({"weights":[1,1,2,3],"degrees":[6]})";
    unsigned N = 14;
    app.add_option("spec", spec_arg, "Spec as inline JSON or a file path")->default_val(spec_arg);
    app.add_option("--N", N)->default_val(14);
    CLI11_PARSE(app, argc, argv);

    try {
        const auto spec = wlg::normalize(wlg::io::spec_from_json(wlg::io::read_json_argument(spec_arg)));
        const auto pc = wlg::find_partition_exhaustive(spec, true);
        if (!pc.has_strong_partition) {
            std::cerr << wlg::to_string(spec) << " has no strong partition\n";
            return 3;
        }
        const auto lg = wlg::laurentize(wlg::build_model(spec, *pc.witness));
        const auto t = wlg::time_period_kernels(lg.polynomial, N);
        std::cout << wlg::io::json{{"spec", wlg::io::to_json(spec)},
                                   {"N", N},
                                   {"terms", lg.polynomial.size()},
                                   {"pruned_seconds", t.pruned_seconds},
                                   {"naive_seconds", t.naive_seconds},
                                   {"speedup", t.speedup()},
                                   {"same_result", t.same_result}}
                         .dump()
                  << '\n';
        return t.same_result ? 0 : 1;
    } catch (const wlg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
