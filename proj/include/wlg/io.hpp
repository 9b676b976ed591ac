#ifndef WLG_IO_HPP
#define WLG_IO_HPP

// JSON forms of the toolkit's values. Big integers travel as decimal strings.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "hori_vafa.hpp"
#include "laurent.hpp"
#include "nef_partition.hpp"
#include "polytope.hpp"
#include "series.hpp"
#include "spec.hpp"

namespace wlg::io {

using json = nlohmann::json;

inline json to_json(const CISpec& s) { return {{"weights", s.weights()}, {"degrees", s.degrees()}}; }

inline json to_json(const SpecReport& r)
{
    return {{"is_normalized", r.is_normalized},
            {"is_cartier", r.is_cartier},
            {"is_smooth", r.is_smooth},
            {"satisfies_relaxed_condition", r.satisfies_relaxed_condition},
            {"is_fano", r.is_fano},
            {"fano_index", r.fano_index ? json(*r.fano_index) : json(nullptr)}};
}

inline json to_json(const QNefPartition& p) { return {{"blocks", p.blocks}, {"free", p.free}}; }

inline json to_json(const PartitionClass& c)
{
    return {{"has_partition", c.has_partition},
            {"has_strong_partition", c.has_strong_partition},
            {"witness", c.witness ? to_json(*c.witness) : json(nullptr)}};
}

inline json to_json(const LaurentPolynomial& f)
{
    json terms = json::array();
    for (const auto& t : f.terms()) {
        terms.push_back({{"coeff", to_decimal(t.coeff)}, {"exps", t.exps}});
    }
    return {{"num_vars", f.num_vars()}, {"terms", std::move(terms)}};
}

inline json to_json(const LGModel& m)
{
    auto out = to_json(m.polynomial);
    json legend = json::array();
    for (const auto& e : m.legend) {
        legend.push_back({{"var", e.var}, {"orig_index", e.orig_index}, {"block", e.block}});
    }
    out["legend"] = std::move(legend);
    out["charts"] = m.charts;
    out["solved"] = m.solved;
    return out;
}

inline json decimal_array(const std::vector<Integer>& xs)
{
    json out = json::array();
    for (const auto& x : xs) {
        out.push_back(to_decimal(x));
    }
    return out;
}

inline json to_json(const PeriodSequence& p) { return {{"coeffs", decimal_array(p.coefficients)}}; }

inline json to_json(const ISeries& s) { return {{"d0", s.d0}, {"coeffs", decimal_array(s.coefficients)}}; }

inline json to_json(const VerificationReport& r)
{
    json mismatch = nullptr;
    if (r.first_mismatch) {
        mismatch = {{"index", r.first_mismatch->index},
                    {"expected", to_decimal(r.first_mismatch->expected)},
                    {"actual", to_decimal(r.first_mismatch->actual)}};
    }
    return {{"matched_up_to", r.matched_up_to}, {"first_mismatch", std::move(mismatch)}, {"verdict", r.verdict}};
}

inline json to_json(const Polytope& p) { return {{"vertices", p.vertices}}; }

namespace detail {

template <typename F>
auto guarded(const char* what, F&& parse)
{
    try {
        return parse();
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed ") + what + ": " + e.what());
    } catch (const InvalidSpec& e) {
        throw ParseError(std::string("invalid ") + what + ": " + e.what());
    } catch (const InvalidPolynomial& e) {
        throw ParseError(std::string("invalid ") + what + ": " + e.what());
    }
}

inline Integer integer_from_json(const json& j)
{
    if (j.is_string()) {
        return parse_integer(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Integer(std::to_string(j.get<std::int64_t>()));
    }
    throw ParseError("coefficient must be a decimal string or an integer");
}

} // namespace detail

inline CISpec spec_from_json(const json& j)
{
    return detail::guarded("spec", [&] {
        return CISpec(j.at("weights").get<std::vector<std::int64_t>>(),
                      j.at("degrees").get<std::vector<std::int64_t>>());
    });
}

inline QNefPartition partition_from_json(const json& j)
{
    return detail::guarded("partition", [&] {
        return QNefPartition{j.at("blocks").get<std::vector<IndexSet>>(), j.at("free").get<IndexSet>()};
    });
}

inline LaurentPolynomial polynomial_from_json(const json& j)
{
    return detail::guarded("polynomial", [&] {
        const auto n = j.at("num_vars").get<std::size_t>();
        std::vector<Term> terms;
        for (const auto& t : j.at("terms")) {
            terms.push_back({t.at("exps").get<Exponent>(), detail::integer_from_json(t.at("coeff"))});
        }
        return LaurentPolynomial::from_terms(n, std::move(terms));
    });
}

inline LGModel lg_model_from_json(const json& j)
{
    return detail::guarded("Landau-Ginzburg model", [&] {
        LGModel m;
        m.polynomial = polynomial_from_json(j);
        for (const auto& e : j.at("legend")) {
            m.legend.push_back({e.at("var").get<std::size_t>(), e.at("orig_index").get<std::size_t>(),
                                e.at("block").get<std::size_t>()});
        }
        m.charts = j.at("charts").get<std::vector<std::size_t>>();
        m.solved = j.at("solved").get<std::size_t>();
        return m;
    });
}

inline std::vector<Integer> coefficients_from_json(const json& j)
{
    return detail::guarded("series", [&] {
        std::vector<Integer> out;
        for (const auto& c : j.at("coeffs")) {
            out.push_back(detail::integer_from_json(c));
        }
        return out;
    });
}

inline Polytope polytope_from_json(const json& j)
{
    return detail::guarded("polytope", [&] { return Polytope{j.at("vertices").get<std::vector<Exponent>>()}; });
}

/// Parses `source` as inline JSON when it starts with '{', reads standard
/// input for "-", and otherwise treats it as a file path.
inline json read_json_argument(const std::string& source)
{
    std::string text;
    const auto first = source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && source[first] == '{') {
        text = source;
    } else if (source == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(source);
        if (!in) {
            throw ParseError("cannot open '" + source + "'");
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace wlg::io

#endif // WLG_IO_HPP
