#include "dyckmat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dyckmat/census.hpp"
#include "dyckmat/errors.hpp"
#include "dyckmat/expand.hpp"
#include "dyckmat/overlap.hpp"
#include "dyckmat/setgen.hpp"
#include "dyckmat/words.hpp"

namespace dyckmat {
namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

SetSpec make_spec(int m, int n, const std::string& anchor) {
    if (anchor.empty()) return SetSpec::with_default_anchor(m, n);
    return SetSpec(m, n, DyckWord::parse(anchor));
}

json matrix_json(const SetSpec& spec, const BinaryMatrix& mat) {
    json rows = json::array();
    for (int i = 0; i < mat.rows(); ++i) rows.push_back(mat.row(i).str());
    return json{{"m", spec.m()},
                {"n", spec.n()},
                {"parity", spec.odd_n() ? "odd" : "even"},
                {"anchor", spec.anchor().bits().str()},
                {"rows", rows}};
}

json report_json(const VerifyReport& report) {
    json violations = json::array();
    for (const Violation& v : report.violations) {
        violations.push_back(json{{"a", v.a},
                                  {"b", v.b},
                                  {"dr", v.witness.offset.dr},
                                  {"dc", v.witness.offset.dc},
                                  {"kind", witness_kind_name(v.witness.kind)}});
    }
    return json{{"pass", report.pass},
                {"matrix_count", report.matrix_count},
                {"checked_pairs", report.checked_pairs},
                {"violations", violations}};
}

void print_report_text(const VerifyReport& report, std::ostream& out) {
    out << (report.pass ? "pass" : "fail") << ": " << report.matrix_count
        << " matrices, " << report.checked_pairs << " pairs checked\n";
    for (const Violation& v : report.violations) {
        out << "violation a=" << v.a << " b=" << v.b
            << " dr=" << v.witness.offset.dr << " dc=" << v.witness.offset.dc
            << " kind=" << witness_kind_name(v.witness.kind) << "\n";
    }
}

json count_json(const CountReport& r) {
    json j{{"m", r.m},
           {"n", r.n},
           {"agrees", agreement_name(r.agrees)},
           {"table_agrees", agreement_name(r.table_agrees)},
           {"known_reference_discrepancy", r.known_reference_discrepancy}};
    j["formula"] = r.formula_value ? json(*r.formula_value) : json(nullptr);
    j["enumerated"] = r.enumerated_value ? json(*r.enumerated_value) : json(nullptr);
    j["table"] = r.table_value ? json(r.table_value->str()) : json(nullptr);
    return j;
}

std::vector<BinaryMatrix> collect(const SetEnumeration& members) {
    std::vector<BinaryMatrix> mats;
    mats.reserve(static_cast<std::size_t>(members.size()));
    for (std::uint64_t i = 0; i < members.size(); ++i) mats.push_back(members.at(i));
    return mats;
}

int run_dyck(int len, int limit, const std::string& format, std::ostream& out) {
    std::vector<DyckWord> words = enumerate_dyck(len, limit);
    if (format == "json") {
        json names = json::array();
        for (const DyckWord& w : words) names.push_back(w.bits().str());
        json j{{"length", len}, {"count", words.size()}, {"words", names}};
        out << j.dump(2) << "\n";
    } else {
        for (const DyckWord& w : words) out << w.bits().str() << "\n";
    }
    return kExitOk;
}

int run_build(const SetSpec& spec, std::optional<std::uint64_t> index,
              std::uint64_t limit, const std::string& format, std::ostream& out) {
    if (index) {
        BinaryMatrix mat = unrank(spec, *index);
        if (format == "json") {
            out << matrix_json(spec, mat).dump(2) << "\n";
        } else {
            out << mat.text();
        }
        return kExitOk;
    }
    SetEnumeration members(spec, limit);
    if (format == "json") {
        out << "[";
        for (std::uint64_t i = 0; i < members.size(); ++i) {
            out << (i == 0 ? "\n" : ",\n") << matrix_json(spec, members.at(i)).dump();
        }
        out << "\n]\n";
    } else {
        for (std::uint64_t i = 0; i < members.size(); ++i) {
            if (i != 0) out << "\n";
            out << members.at(i).text();
        }
    }
    return kExitOk;
}

int run_verify(const SetSpec& spec, bool fail_fast, std::uint64_t limit,
               const std::string& format, std::ostream& out) {
    SetEnumeration members(spec, limit);
    VerifyReport report = verify_set(collect(members), VerifyOptions{fail_fast});
    if (format == "json") {
        out << report_json(report).dump(2) << "\n";
    } else {
        print_report_text(report, out);
    }
    return report.pass ? kExitOk : kExitFail;
}

int run_count(int m, int n, const std::string& anchor, std::uint64_t limit,
              const std::string& format, std::ostream& out, std::ostream& err) {
    std::optional<DyckWord> word;
    if (!anchor.empty()) word = DyckWord::parse(anchor);
    CountReport report = cross_check(m, n, word, limit);
    if (format == "json") {
        out << count_json(report).dump(2) << "\n";
    } else if (report.enumerated_value) {
        out << *report.enumerated_value << "\n";
    } else if (report.formula_value) {
        out << *report.formula_value << "\n";
    } else {
        out << "overflow\n";
    }
    if (report.agrees == Agreement::Mismatch) {
        err << "error: cross-check: formula " << *report.formula_value
            << " != enumeration " << *report.enumerated_value << "\n";
        return kExitFail;
    }
    if (report.table_agrees == Agreement::Mismatch) {
        err << "note: published reference prints " << report.table_value->str()
            << " for m=" << m << " n=" << n << "; the construction yields "
            << (report.enumerated_value ? *report.enumerated_value : *report.formula_value);
        err << (report.known_reference_discrepancy ? " (known discrepancy)\n" : "\n");
        if (!report.known_reference_discrepancy) return kExitFail;
    }
    return kExitOk;
}

int run_table(int m_max, int n_max, const std::string& format, std::ostream& out) {
    std::vector<CountReport> cells = emit_table(m_max, n_max);
    if (format == "json") {
        json rows = json::array();
        for (const CountReport& cell : cells) rows.push_back(count_json(cell));
        out << rows.dump(2) << "\n";
    } else if (format == "csv") {
        out << render_table_csv(cells);
    } else {
        out << render_table_text(cells);
    }
    for (const CountReport& cell : cells) {
        if (cell.table_agrees == Agreement::Mismatch && !cell.known_reference_discrepancy)
            return kExitFail;
        if (cell.agrees == Agreement::Mismatch) return kExitFail;
    }
    return kExitOk;
}

int run_expand(const SetSpec& spec, bool search, const std::string& x_str,
               std::uint64_t limit, bool limit_set, const std::string& format,
               std::ostream& out) {
    if (search == !x_str.empty()) {
        throw std::invalid_argument("expand needs exactly one of --search or --x");
    }
    if (search) {
        int cap = limit_set ? static_cast<int>(std::min<std::uint64_t>(limit, 62))
                            : default_expand_guard;
        std::vector<BitString> found = find_expansion_strings(spec, cap);
        if (format == "json") {
            json names = json::array();
            for (const BitString& x : found) names.push_back(x.str());
            json j{{"m", spec.m()}, {"n", spec.n()},
                   {"anchor", spec.anchor().bits().str()}, {"candidates", names}};
            out << j.dump(2) << "\n";
        } else {
            for (const BitString& x : found) out << x.str() << "\n";
        }
        return kExitOk;
    }
    BitString x = BitString::parse(x_str);
    std::uint64_t guard = limit_set ? limit : default_set_guard;
    VerifyReport report = verify_expansion(spec, x, guard);
    if (format == "text") {
        print_report_text(report, out);
    } else {
        out << report_json(report).dump(2) << "\n";
    }
    return report.pass ? kExitOk : kExitFail;
}

int run_rows(const SetSpec& spec, std::uint64_t limit, bool limit_set,
             const std::string& format, std::ostream& out) {
    int cap = limit_set ? static_cast<int>(std::min<std::uint64_t>(limit, 62))
                        : default_expand_guard;
    std::vector<CompatibleRow> rows = find_compatible_rows(spec, cap);
    if (format == "json") {
        json names = json::array();
        for (const CompatibleRow& r : rows) {
            names.push_back(json{{"row", r.row.str()}, {"kind", row_kind_name(r.kind)}});
        }
        out << names.dump(2) << "\n";
    } else {
        for (const CompatibleRow& r : rows) {
            out << r.row.str() << " " << row_kind_name(r.kind) << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Builds and checks non-overlapping binary matrix sets"};
    app.name("dyckmat");
    app.require_subcommand(1);

    std::string format = "text";
    // Shared option state; each subcommand binds the pieces it needs.
    int m = 0;
    int n = 0;
    std::string anchor;
    std::uint64_t limit = 0;
    std::uint64_t index = 0;
    bool fail_fast = false;

    auto add_format = [&](CLI::App* cmd, std::vector<std::string> choices) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember(choices))
            ->capture_default_str();
    };
    auto add_shape = [&](CLI::App* cmd) {
        cmd->add_option("--m", m, "number of rows")->required();
        cmd->add_option("--n", n, "number of columns")->required();
        cmd->add_option("--anchor", anchor,
                        "balanced word the first row is derived from");
    };

    CLI::App* dyck = app.add_subcommand("dyck", "list balanced words of a given length");
    int dyck_len = 0;
    int dyck_limit = default_dyck_guard;
    dyck->add_option("--len", dyck_len, "word length")->required();
    dyck->add_option("--limit", dyck_limit, "largest length the enumeration accepts")
        ->capture_default_str();
    add_format(dyck, {"text", "json"});

    CLI::App* build = app.add_subcommand("build", "emit set members");
    add_shape(build);
    CLI::Option* index_opt =
        build->add_option("--index,--seed-index", index, "emit only the member at this rank");
    build->add_option("--limit", limit, "largest set size the enumeration accepts");
    add_format(build, {"text", "json"});

    CLI::App* verify = app.add_subcommand("verify", "exhaustively check a set for overlaps");
    add_shape(verify);
    verify->add_flag("--fail-fast", fail_fast, "stop at the first violating offset");
    verify->add_option("--limit", limit, "largest set size the enumeration accepts");
    add_format(verify, {"text", "json"});

    CLI::App* count = app.add_subcommand("count", "cross-check set size against the closed form");
    add_shape(count);
    count->add_option("--limit", limit, "largest set size the enumeration accepts");
    add_format(count, {"text", "json"});

    CLI::App* table = app.add_subcommand("table", "tabulate set sizes over a range of shapes");
    int m_max = 10;
    int n_max = 10;
    table->add_option("--m-max", m_max, "largest row count")->capture_default_str();
    table->add_option("--n-max", n_max, "largest column count")->capture_default_str();
    add_format(table, {"text", "json", "csv"});

    CLI::App* expand = app.add_subcommand("expand", "search for or check set-expanding rows");
    add_shape(expand);
    bool search = false;
    std::string x_str;
    expand->add_flag("--search", search, "list every candidate expansion row");
    expand->add_option("--x", x_str, "expansion row to check against the whole set");
    CLI::Option* expand_limit = expand->add_option(
        "--limit", limit, "scan width cap with --search, set size cap with --x");
    add_format(expand, {"text", "json"});

    CLI::App* rows = app.add_subcommand("rows", "list rows compatible with a first row");
    int rows_m = 2;
    rows->add_option("--m", rows_m, "number of rows (irrelevant to compatibility)")
        ->capture_default_str();
    rows->add_option("--n", n, "number of columns")->required();
    rows->add_option("--anchor", anchor, "balanced word the first row is derived from");
    CLI::Option* rows_limit =
        rows->add_option("--limit", limit, "largest row length the scan accepts");
    add_format(rows, {"text", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: usage: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (dyck->parsed()) return run_dyck(dyck_len, dyck_limit, format, out);
        if (build->parsed()) {
            std::optional<std::uint64_t> at;
            if (index_opt->count() > 0) at = index;
            std::uint64_t guard = build->count("--limit") > 0 ? limit : default_set_guard;
            return run_build(make_spec(m, n, anchor), at, guard, format, out);
        }
        if (verify->parsed()) {
            std::uint64_t guard = verify->count("--limit") > 0 ? limit : default_set_guard;
            return run_verify(make_spec(m, n, anchor), fail_fast, guard, format, out);
        }
        if (count->parsed()) {
            std::uint64_t guard = count->count("--limit") > 0 ? limit : default_set_guard;
            return run_count(m, n, anchor, guard, format, out, err);
        }
        if (table->parsed()) return run_table(m_max, n_max, format, out);
        if (expand->parsed()) {
            return run_expand(make_spec(m, n, anchor), search, x_str, limit,
                              expand_limit->count() > 0, format, out);
        }
        if (rows->parsed()) {
            return run_rows(make_spec(rows_m, n, anchor), limit,
                            rows_limit->count() > 0, format, out);
        }
        err << "error: usage: no subcommand given\n";
        return kExitUsage;
    } catch (const ResourceLimitError& e) {
        err << "error: resource-limit: " << e.what() << "\n";
        return kExitLimit;
    } catch (const std::overflow_error& e) {
        err << "error: overflow: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: invalid-argument: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: invalid-argument: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace dyckmat
