#ifndef WLG_CLI_HPP
#define WLG_CLI_HPP

// Command implementations behind the `wlg` executable. Each returns the
// process exit code and writes JSON to `out`, diagnostics to `err`.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <thread>

#include "enumerate.hpp"
#include "errors.hpp"
#include "hori_vafa.hpp"
#include "io.hpp"
#include "laurent.hpp"
#include "nef_partition.hpp"
#include "polytope.hpp"
#include "series.hpp"
#include "spec.hpp"

namespace wlg::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int parse_error = 2;
inline constexpr int no_strong_partition = 3;
inline constexpr int not_fano = 4;
inline constexpr int identity_mismatch = 5;
inline constexpr int proposition_violation = 6;
} // namespace exit_code

/// Worker count: WLG_THREADS when set to a positive integer, else the
/// hardware concurrency.
inline unsigned worker_threads()
{
    if (const char* env = std::getenv("WLG_THREADS")) {
        try {
            const auto v = std::stoul(env);
            if (v > 0) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

inline io::json row_to_json(const EnumerationRow& row)
{
    const auto& f = row.flags;
    io::json out = {{"spec", io::to_json(row.spec)},
                    {"flags",
                     {{"cartier", f.cartier},
                      {"smooth", f.smooth},
                      {"relaxed", f.relaxed},
                      {"fano", f.fano},
                      {"gorenstein", f.gorenstein},
                      {"has_partition", f.has_partition},
                      {"has_strong_partition", f.has_strong_partition}}},
                    {"verified", row.verified ? io::json(*row.verified) : io::json(nullptr)}};
    if (row.error) {
        out["error"] = *row.error;
    }
    return out;
}

namespace detail {

inline CISpec normalized_or_raw(const CISpec& spec, std::ostream& err)
{
    try {
        return normalize(spec);
    } catch (const NonIntegralRescale& e) {
        err << "warning: cannot normalize " << to_string(spec) << " (" << e.what() << "); using it as given\n";
        return spec;
    }
}

template <typename F>
int guarded(std::ostream& err, F&& body)
{
    try {
        return body();
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::parse_error;
    } catch (const PropositionViolation& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::proposition_violation;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::failure;
    }
}

} // namespace detail

inline int cmd_check(const std::string& spec_arg, std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        const auto input = io::spec_from_json(io::read_json_argument(spec_arg));
        const auto spec = detail::normalized_or_raw(input, err);
        auto report = make_report(spec);
        report.is_normalized = is_normalized(input);
        err << to_string(input);
        if (spec != input) {
            err << " ~ " << to_string(spec);
        }
        err << ": cartier=" << report.is_cartier << " smooth=" << report.is_smooth
            << " relaxed=" << report.satisfies_relaxed_condition << " fano=" << report.is_fano;
        if (report.fano_index) {
            err << " d0=" << *report.fano_index;
        }
        err << '\n';
        out << io::to_json(report).dump() << '\n';
        return exit_code::ok;
    });
}

struct MirrorOptions {
    unsigned N = 8;
    PartitionStrategy strategy = PartitionStrategy::exhaustive;
    bool emit_polytope = false;
    unsigned threads = 1;
};

inline int cmd_mirror(const std::string& spec_arg, const MirrorOptions& options, std::ostream& out,
                      std::ostream& err)
{
    return detail::guarded(err, [&] {
        const auto input = io::spec_from_json(io::read_json_argument(spec_arg));
        const auto spec = detail::normalized_or_raw(input, err);
        io::json doc = {{"spec", io::to_json(spec)}};

        const auto fano = check_fano(spec);
        if (!fano.is_fano) {
            doc["error"] = "NotFano";
            out << doc.dump() << '\n';
            err << to_string(spec) << " is not Fano\n";
            return exit_code::not_fano;
        }

        auto partition = find_strong_partition(spec, options.strategy, default_search_budget,
                                               [&](const CISpec& s, const std::string& why) {
                                                   err << "reduction failed for " << to_string(s) << ": " << why
                                                       << "; using exhaustive search\n";
                                               });
        if (!partition.has_strong_partition) {
            doc["partition_class"] = io::to_json(partition);
            doc["error"] = "NoStrongPartition";
            out << doc.dump() << '\n';
            err << to_string(spec) << (partition.has_partition ? " has a Q-nef-partition, but none is strong\n"
                                                               : " has no Q-nef-partition\n");
            return exit_code::no_strong_partition;
        }
        doc["partition_class"] = io::to_json(partition);

        const auto model = laurentize(build_model(spec, *partition.witness));
        check_legend(spec, model);
        const auto expected = i_series(spec, options.N);
        const auto period = period_sequence(model.polynomial, options.N, {ConstantTermKernel::pruned, options.threads});
        const auto report = compare_series(expected.coefficients, period.coefficients);

        doc["model"] = io::to_json(model);
        doc["i_series"] = io::to_json(expected);
        doc["period"] = io::to_json(period);
        doc["verification"] = io::to_json(report);
        if (options.emit_polytope) {
            doc["polytope"] = io::to_json(newton_polytope(model.polynomial));
        }
        out << doc.dump() << '\n';
        if (!report.verdict) {
            err << "series identity fails at index " << report.first_mismatch->index << '\n';
            return exit_code::identity_mismatch;
        }
        err << "series identity holds through t^" << options.N << '\n';
        return exit_code::ok;
    });
}

inline int cmd_enumerate(const EnumerateOptions& options, const std::optional<std::string>& out_path,
                         std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        const auto rows = enumerate_specs(options);
        std::ofstream file;
        if (out_path) {
            file.open(*out_path);
            if (!file) {
                throw Error("cannot write '" + *out_path + "'");
            }
        }
        std::ostream& sink = out_path ? static_cast<std::ostream&>(file) : out;
        for (const auto& row : rows) {
            sink << row_to_json(row).dump() << '\n';
        }
        err << rows.size() << " rows\n";
        return exit_code::ok;
    });
}

inline int cmd_polytope(const std::string& poly_arg, std::ostream& out, std::ostream& err)
{
    return detail::guarded(err, [&] {
        const auto f = io::polynomial_from_json(io::read_json_argument(poly_arg));
        out << io::to_json(newton_polytope(f)).dump() << '\n';
        return exit_code::ok;
    });
}

inline int cmd_period(const std::string& poly_arg, unsigned N, unsigned threads, std::ostream& out,
                      std::ostream& err)
{
    return detail::guarded(err, [&] {
        const auto f = io::polynomial_from_json(io::read_json_argument(poly_arg));
        out << io::to_json(period_sequence(f, N, {ConstantTermKernel::pruned, threads})).dump() << '\n';
        return exit_code::ok;
    });
}

} // namespace wlg::cli

#endif // WLG_CLI_HPP
