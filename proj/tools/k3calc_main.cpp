/* k3calc command-line front end. Talks to the library exclusively through
 * the C interface in k3calc.h. Identical invocations produce byte-identical
 * output.
 *
 * Exit codes: 0 success, 1 verification failure, 2 usage error.
 */

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "k3calc.h"

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kFormatVersion = "1";

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void usage_error(const std::string& message) {
    throw CliError{2, message};
}

enum class Format { table, json, csv };

Format parse_format(const std::string& name) {
    if (name == "table") return Format::table;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    usage_error("unknown format '" + name + "' (expected table, json or csv)");
}

/* Wrappers that surface library failures as usage errors. */

void check(k3_status status) {
    if (status != K3_OK) usage_error(k3_last_error());
}

std::string owned_string(k3_status status, char* value) {
    check(status);
    std::string out(value);
    k3_string_free(value);
    return out;
}

using SeriesHandle = std::unique_ptr<k3_series, void (*)(k3_series*)>;

SeriesHandle eta_series(int64_t k, size_t order) {
    k3_series* raw = nullptr;
    check(k3_series_eta_product(k, order, &raw));
    return SeriesHandle(raw, k3_series_free);
}

std::string coefficient(const k3_series* s, size_t n) {
    char* raw = nullptr;
    const k3_status status = k3_series_coefficient(s, n, &raw);
    return owned_string(status, raw);
}

/* Series truncation order for a command that needs `needed` coefficients:
 * the explicit --order if given (rejected when too small), otherwise
 * auto-sized with 10% headroom and a floor of 256. */
size_t effective_order(uint64_t needed, int64_t requested) {
    if (requested < 0) usage_error("--order must be positive");
    if (requested > 0) {
        if (static_cast<uint64_t>(requested) < needed)
            usage_error("--order " + std::to_string(requested) +
                        " is too small; this computation needs at least " +
                        std::to_string(needed));
        return static_cast<size_t>(requested);
    }
    return static_cast<size_t>(std::max<uint64_t>(256, needed + needed / 10 + 1));
}

/* ---- output helpers ------------------------------------------------------ */

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void print_csv(const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::string line;
    for (size_t i = 0; i < header.size(); ++i) {
        if (i > 0) line += ',';
        line += csv_escape(header[i]);
    }
    std::fputs((line + "\n").c_str(), stdout);
    for (const auto& row : rows) {
        line.clear();
        for (size_t i = 0; i < row.size(); ++i) {
            if (i > 0) line += ',';
            line += csv_escape(row[i]);
        }
        std::fputs((line + "\n").c_str(), stdout);
    }
}

void print_table(const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width(header.size());
    for (size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& row : rows)
        for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());

    auto print_row = [&](const std::vector<std::string>& row) {
        std::string line;
        for (size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line.append(width[i] - row[i].size() + 2, ' ');
        }
        std::fputs((line + "\n").c_str(), stdout);
    };
    print_row(header);
    for (const auto& row : rows) print_row(row);
}

void print_envelope(const std::string& command, const ordered_json& params,
                    const ordered_json& result) {
    ordered_json envelope;
    envelope["command"] = command;
    envelope["params"] = params;
    envelope["result"] = result;
    envelope["format_version"] = kFormatVersion;
    std::fputs((envelope.dump(2) + "\n").c_str(), stdout);
}

void emit_rows(Format format, const std::string& command, const ordered_json& params,
               const ordered_json& result, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    switch (format) {
        case Format::table: print_table(header, rows); break;
        case Format::csv: print_csv(header, rows); break;
        case Format::json: print_envelope(command, params, result); break;
    }
}

/* ---- subcommands ---------------------------------------------------------- */

int cmd_yau_zaslow(uint64_t max_g, int64_t order_flag, Format format) {
    const size_t order = effective_order(max_g + 1, order_flag);
    const SeriesHandle series = eta_series(-24, order);

    std::vector<std::vector<std::string>> rows;
    ordered_json counts = ordered_json::array();
    for (uint64_t g = 0; g <= max_g; ++g) {
        const std::string value = coefficient(series.get(), g);
        rows.push_back({std::to_string(g), value});
        counts.push_back({{"g", g}, {"N_g", value}});
    }
    emit_rows(format, "yau-zaslow",
              {{"max_g", max_g}, {"order", order}}, counts, {"g", "N_g"}, rows);
    return 0;
}

int cmd_partitions(uint64_t max_n, int64_t order_flag, Format format) {
    const size_t order = effective_order(max_n + 1, order_flag);
    const SeriesHandle series = eta_series(-1, order);

    std::vector<std::vector<std::string>> rows;
    ordered_json counts = ordered_json::array();
    for (uint64_t n = 0; n <= max_n; ++n) {
        const std::string value = coefficient(series.get(), n);
        rows.push_back({std::to_string(n), value});
        counts.push_back({{"n", n}, {"p_n", value}});
    }
    emit_rows(format, "partitions",
              {{"max_n", max_n}, {"order", order}}, counts, {"n", "p_n"}, rows);
    return 0;
}

int cmd_bl_count(int64_t r, bool list_sequences, int64_t order_flag, Format format) {
    if (r < 1) usage_error("bl-count: r must be >= 1");
    const size_t order = effective_order(static_cast<uint64_t>(r), order_flag);
    const SeriesHandle series = eta_series(-48, order);
    const std::string count = coefficient(series.get(), static_cast<size_t>(r - 1));

    std::vector<std::vector<std::string>> fiber_rows;
    ordered_json per_fiber = ordered_json::array();
    if (list_sequences) {
        const SeriesHandle partitions = eta_series(-1, order);
        for (int64_t a = 0; a < r; ++a) {
            const std::string p = coefficient(partitions.get(), static_cast<size_t>(a));
            fiber_rows.push_back({std::to_string(a), p});
            per_fiber.push_back({{"a", a}, {"p_a", p}});
        }
    }

    ordered_json result = {{"r", r}, {"count", count}};
    if (list_sequences) result["per_fiber"] = per_fiber;

    if (format == Format::json) {
        print_envelope("bl-count",
                       {{"r", r}, {"list_sequences", list_sequences}, {"order", order}},
                       result);
    } else {
        const auto print =
            format == Format::csv ? print_csv : print_table;
        print({"r", "count"}, {{std::to_string(r), count}});
        if (list_sequences) {
            std::fputs("\n", stdout);
            print({"a", "p_a"}, fiber_rows);
        }
    }
    return 0;
}

int cmd_severi_bound(int64_t g, Format format) {
    k3_bound_report* raw = nullptr;
    check(k3_severi_lower_bound(g, &raw));
    std::unique_ptr<k3_bound_report, void (*)(k3_bound_report*)> report(raw,
                                                                        k3_bound_report_free);

    char* s = nullptr;
    k3_status st = k3_bound_report_bl_count(report.get(), &s);
    const std::string bl_count = owned_string(st, s);
    st = k3_bound_report_severi_genus_lb(report.get(), &s);
    const std::string bound = owned_string(st, s);
    st = k3_bound_report_json(report.get(), &s);
    const std::string json_text = owned_string(st, s);

    const std::vector<std::string> header = {"g", "r", "bl_count", "omega_genus_lb",
                                             "severi_genus_lb"};
    const std::vector<std::vector<std::string>> rows = {
        {std::to_string(k3_bound_report_g(report.get())),
         std::to_string(k3_bound_report_r(report.get())), bl_count,
         std::to_string(k3_bound_report_omega_genus_lb(report.get())), bound}};
    emit_rows(format, "severi-bound", {{"g", g}}, ordered_json::parse(json_text), header,
              rows);
    return 0;
}

int cmd_appendix_genus(int64_t r, bool cross_check, Format format) {
    char* s = nullptr;
    k3_status st = k3_appendix_genus_closed_form(r, &s);
    const std::string closed = owned_string(st, s);

    std::string summation, bracket;
    int match = 1;
    if (cross_check) {
        st = k3_degeneracy_genus(9, 2 * r, 4 * r + 4, &s);
        summation = owned_string(st, s);
        st = k3_degeneracy_bracket_json(9, 2 * r, 4 * r + 4, &s);
        bracket = owned_string(st, s);
        check(k3_appendix_genus_crosscheck(r, &match));
    }

    ordered_json result = {{"r", r}, {"conjectural_p_a", closed}, {"conjectural", true}};
    std::vector<std::string> header = {"r", "conjectural_p_a"};
    std::vector<std::string> row = {std::to_string(r), closed};
    if (cross_check) {
        result["summation_p_a"] = summation;
        result["bracket"] = ordered_json::parse(bracket);
        result["cross_check"] = match == 1 ? "MATCH" : "MISMATCH";
        header.insert(header.end(), {"summation_p_a", "cross_check"});
        row.insert(row.end(), {summation, match == 1 ? "MATCH" : "MISMATCH"});
    }
    emit_rows(format, "appendix-genus", {{"r", r}, {"cross_check", cross_check}}, result,
              header, {row});
    return match == 1 ? 0 : 1;
}

int cmd_admissible_list(int64_t a, Format format) {
    k3_seq_list* raw = nullptr;
    check(k3_enumerate_one_admissible(a, &raw));
    std::unique_ptr<k3_seq_list, void (*)(k3_seq_list*)> list(raw, k3_seq_list_free);

    std::vector<std::vector<std::string>> rows;
    ordered_json sequences = ordered_json::array();
    for (size_t i = 0; i < k3_seq_list_size(list.get()); ++i) {
        const int64_t left = k3_seq_list_left(list.get(), i);
        std::string joined;
        ordered_json values = ordered_json::array();
        for (size_t j = 0; j < k3_seq_list_length(list.get(), i); ++j) {
            const int64_t v = k3_seq_list_value(list.get(), i, j);
            if (j > 0) joined += ' ';
            joined += std::to_string(v);
            values.push_back(v);
        }
        rows.push_back({std::to_string(left), joined});
        sequences.push_back({{"left", left}, {"values", values}});
    }

    const ordered_json result = {
        {"a", a}, {"count", rows.size()}, {"sequences", sequences}};
    emit_rows(format, "admissible-list", {{"a", a}}, result, {"left", "values"}, rows);
    return 0;
}

int cmd_verify(const std::string& suite, int64_t max_n, Format format) {
    k3_verify_result* raw = nullptr;
    check(k3_verify(suite.c_str(), max_n, &raw));
    std::unique_ptr<k3_verify_result, void (*)(k3_verify_result*)> result(raw,
                                                                          k3_verify_free);

    const size_t count = k3_verify_count(result.get());
    const bool all_passed = k3_verify_all_passed(result.get()) == 1;

    if (format == Format::json) {
        ordered_json checks = ordered_json::array();
        for (size_t i = 0; i < count; ++i) {
            checks.push_back({{"name", k3_verify_name(result.get(), i)},
                              {"passed", k3_verify_passed(result.get(), i) == 1},
                              {"detail", k3_verify_detail(result.get(), i)}});
        }
        print_envelope("verify", {{"suite", suite}, {"max_n", max_n}},
                       {{"suite", suite}, {"checks", checks}, {"all_passed", all_passed}});
    } else if (format == Format::csv) {
        std::vector<std::vector<std::string>> rows;
        for (size_t i = 0; i < count; ++i) {
            rows.push_back({k3_verify_name(result.get(), i),
                            k3_verify_passed(result.get(), i) == 1 ? "pass" : "fail",
                            k3_verify_detail(result.get(), i)});
        }
        print_csv({"name", "status", "detail"}, rows);
    } else {
        for (size_t i = 0; i < count; ++i) {
            std::fputs((std::string(k3_verify_passed(result.get(), i) == 1 ? "[PASS] "
                                                                           : "[FAIL] ") +
                        k3_verify_name(result.get(), i) + ": " +
                        k3_verify_detail(result.get(), i) + "\n")
                           .c_str(),
                       stdout);
        }
        std::fputs((std::string(all_passed ? "all checks passed" : "CHECKS FAILED") + " (" +
                    std::to_string(count) + " run)\n")
                       .c_str(),
                   stdout);
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact curve-count series, admissible-sequence combinatorics and genus "
                 "lower bounds for nodal elliptic curves on K3 surfaces"};
    app.require_subcommand(1);

    std::string format_name;
    if (const char* env = std::getenv("K3CALC_FORMAT")) format_name = env;
    if (format_name.empty()) format_name = "table";
    app.add_option("--format", format_name, "output format: table, json or csv")
        ->envname("K3CALC_FORMAT");
    int64_t order_flag = 0;
    app.add_option("--order", order_flag,
                   "series truncation order (default: auto-sized with headroom, floor 256)");

    uint64_t max_g = 0;
    auto* yz = app.add_subcommand("yau-zaslow", "rational-curve counts N_0..N_g");
    yz->add_option("max_g", max_g, "largest genus to print")->required();

    int64_t bl_r = 0;
    bool list_sequences = false;
    auto* bl = app.add_subcommand("bl-count",
                                  "fixed-fiber intersection count for genus g = 2r + 1");
    bl->add_option("r", bl_r, "half-genus parameter (g = 2r + 1)")->required();
    bl->add_flag("--list-sequences", list_sequences,
                 "also print the per-fiber 1-admissible counts p(a)");

    int64_t severi_g = 0;
    auto* severi = app.add_subcommand("severi-bound",
                                      "genus lower bound for the compactified Severi curve");
    severi->add_option("g", severi_g, "odd polarization genus (g = 2r + 1 >= 3)")->required();

    int64_t appendix_r = 0;
    bool cross_check = false;
    auto* appendix = app.add_subcommand(
        "appendix-genus", "conjectural degeneracy-locus arithmetic genus (odd g = 2r + 1)");
    appendix->add_option("r", appendix_r, "half-genus parameter, r >= 5")->required();
    appendix->add_flag("--cross-check", cross_check,
                       "also evaluate the summation formula and compare");

    uint64_t max_n = 0;
    auto* parts = app.add_subcommand("partitions", "partition numbers p(0)..p(n)");
    parts->add_option("max_n", max_n, "largest argument to print")->required();

    int64_t adm_a = 0;
    auto* adm = app.add_subcommand("admissible-list",
                                   "all 1-admissible sequences of a given weight");
    adm->add_option("a", adm_a, "weight (a >= 1)")->required();

    std::string suite;
    int64_t verify_max_n = 0;
    auto* verify = app.add_subcommand("verify", "run cross-verification suites");
    verify->add_option("suite", suite, "qseries, admissible, chow, bounds or all")
        ->required();
    verify->add_option("--max-n", verify_max_n, "depth of the exhaustive checks");

    // let --format/--order appear after the subcommand name
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const Format format = parse_format(format_name);
        if (yz->parsed()) return cmd_yau_zaslow(max_g, order_flag, format);
        if (bl->parsed()) return cmd_bl_count(bl_r, list_sequences, order_flag, format);
        if (severi->parsed()) return cmd_severi_bound(severi_g, format);
        if (appendix->parsed()) return cmd_appendix_genus(appendix_r, cross_check, format);
        if (parts->parsed()) return cmd_partitions(max_n, order_flag, format);
        if (adm->parsed()) return cmd_admissible_list(adm_a, format);
        if (verify->parsed()) return cmd_verify(suite, verify_max_n, format);
    } catch (const CliError& e) {
        std::fputs(("k3calc: " + e.message + "\n").c_str(), stderr);
        return e.code;
    }
    return 2;
}
