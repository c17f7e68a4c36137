#include "latticecount/document.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "latticecount/error.hpp"

namespace latticecount::document {

using nlohmann::json;

namespace {

json envelope(const PatternProfile& pr, const char* command) {
    json profile_json = {
        {"r_count", pr.r_count},
        {"u_count", pr.u_count},
        {"depth", pr.depth},
        {"depth_zero", pr.depth_zero},
    };
    json bifixes = json::array();
    for (const auto& b : pr.bifixes)
        bifixes.push_back({{"bifix", b.bifix.str()}, {"trunc_r", b.trunc_r}, {"trunc_u", b.trunc_u}});
    profile_json["bifixes"] = std::move(bifixes);
    return {{"schema_version", kSchemaVersion},
            {"pattern", pr.pattern.str()},
            {"command", command},
            {"profile", std::move(profile_json)}};
}

std::optional<Theorem1Report> theorem1_for(const PatternProfile& pr) {
    if (!pr.depth_zero || pr.r_count < 2)
        return std::nullopt;
    return validate_theorem1(build_recurrence(pr, 2 * static_cast<long>(pr.pattern.size())));
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

[[noreturn]] void bad_document(const std::string& why) { throw Error(ErrorCode::BadDocument, why); }

json parse_json(const std::string& text, const char* command) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        bad_document(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.value("schema_version", "") != kSchemaVersion)
        bad_document("missing or unsupported schema_version");
    if (doc.value("command", "") != command)
        bad_document(std::string("expected a '") + command + "' document");
    if (!doc.contains("result") || !doc["result"].is_object())
        bad_document("missing result");
    return doc;
}

} // namespace

Format parse_format(std::string_view name) {
    if (name == "text")
        return Format::Text;
    if (name == "csv")
        return Format::Csv;
    if (name == "json")
        return Format::Json;
    throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

std::string render_analysis(const PatternProfile& pr, Format format) {
    const auto t1 = theorem1_for(pr);
    if (format == Format::Json) {
        json doc = envelope(pr, "analyze");
        json result = {{"dimensions", std::to_string(pr.r_count) + "x" + std::to_string(pr.u_count)},
                       {"bifix_free", pr.bifixes.empty()}};
        if (t1)
            result["theorem1"] = {{"drop_one_sum", to_string(t1->drop_one_sum)},
                                  {"drop_one_nonzero", t1->drop_one_nonzero},
                                  {"shifts_bounded", t1->shifts_bounded},
                                  {"ok", t1->ok()}};
        else
            result["theorem1"] = nullptr;
        doc["result"] = std::move(result);
        return dump(doc);
    }
    if (format == Format::Csv) {
        std::ostringstream out;
        out << "bifix,trunc_r,trunc_u\n";
        for (const auto& b : pr.bifixes)
            out << b.bifix.str() << ',' << b.trunc_r << ',' << b.trunc_u << '\n';
        return out.str();
    }
    std::ostringstream out;
    out << "pattern:     " << pr.pattern.str() << '\n'
        << "dimensions:  " << pr.r_count << 'x' << pr.u_count << '\n'
        << "depth:       " << pr.depth << '\n'
        << "depth_zero:  " << (pr.depth_zero ? "true" : "false") << '\n'
        << "bifixes:     " << pr.bifixes.size() << (pr.bifixes.empty() ? " (bifix-free)" : "") << '\n';
    std::size_t longest = 0;
    for (const auto& b : pr.bifixes)
        longest = std::max(longest, b.bifix.size());
    for (const auto& b : pr.bifixes)
        out << "  " << b.bifix.str() << std::string(longest - b.bifix.size(), ' ') << "  truncated " << b.trunc_r
            << 'x' << b.trunc_u << '\n';
    if (t1)
        out << "theorem1:    drop-1 sum " << to_string(t1->drop_one_sum) << ", shifts "
            << (t1->shifts_bounded ? "bounded" : "unbounded") << " -> " << (t1->ok() ? "ok" : "fails") << '\n';
    else
        out << "theorem1:    n/a (" << (pr.depth_zero ? "fewer than two r steps" : "not depth-zero") << ")\n";
    return out.str();
}

std::string render_table(const BallotTable& table, const std::string& engine, Format format) {
    const long max_n = table.max_n();
    const long max_m = table.max_m();
    if (format == Format::Json) {
        json doc = envelope(profile(table.pattern()), "table");
        json cells = json::array();
        for (long n = 0; n <= max_n; ++n) {
            json column = json::array();
            for (long m = 0; m <= max_m; ++m)
                column.push_back(BallotTable::valid(n, m) ? json(to_string(table.at(n, m))) : json(nullptr));
            cells.push_back(std::move(column));
        }
        doc["result"] = {{"engine", engine}, {"max_n", max_n}, {"max_m", max_m}, {"cells", std::move(cells)}};
        return dump(doc);
    }
    if (format == Format::Csv) {
        std::ostringstream out;
        out << "m\\n";
        for (long n = 0; n <= max_n; ++n)
            out << ',' << n;
        out << '\n';
        for (long m = max_m; m >= 0; --m) {
            out << m;
            for (long n = 0; n <= max_n; ++n) {
                out << ',';
                if (BallotTable::valid(n, m))
                    out << to_string(table.at(n, m));
            }
            out << '\n';
        }
        return out.str();
    }
    // Rows m descending, columns n ascending; cells under the boundary are blank.
    std::vector<std::size_t> width(static_cast<std::size_t>(max_n + 1));
    for (long n = 0; n <= max_n; ++n) {
        std::size_t w = std::to_string(n).size();
        for (long m = std::max(0L, n - 1); m <= max_m; ++m)
            w = std::max(w, to_string(table.at(n, m)).size());
        width[static_cast<std::size_t>(n)] = w;
    }
    const std::size_t label = std::max<std::size_t>(std::to_string(max_m).size(), 1);
    std::ostringstream out;
    for (long m = max_m; m >= 0; --m) {
        std::string line = pad_left(std::to_string(m), label) + " ||";
        for (long n = 0; n <= max_n && BallotTable::valid(n, m); ++n)
            line += " " + pad_left(to_string(table.at(n, m)), width[static_cast<std::size_t>(n)]);
        out << line << '\n';
    }
    std::string rule(label + 1, '=');
    rule += "++";
    std::string axis = pad_left("", label) + " ||";
    for (long n = 0; n <= max_n; ++n) {
        rule += std::string(width[static_cast<std::size_t>(n)] + 1, '=');
        axis += " " + pad_left(std::to_string(n), width[static_cast<std::size_t>(n)]);
    }
    out << rule << '\n' << axis << "  n\n";
    return out.str();
}

std::string render_dyck(const Pattern& pattern, const std::string& engine, const std::vector<BigInt>& values,
                        Format format) {
    if (format == Format::Json) {
        json doc = envelope(profile(pattern), "dyck");
        json list = json::array();
        for (const auto& v : values)
            list.push_back(to_string(v));
        doc["result"] = {{"engine", engine}, {"n", static_cast<long>(values.size()) - 1}, {"values", std::move(list)}};
        return dump(doc);
    }
    std::ostringstream out;
    if (format == Format::Csv) {
        out << "n,count\n";
        for (std::size_t n = 0; n < values.size(); ++n)
            out << n << ',' << to_string(values[n]) << '\n';
        return out.str();
    }
    for (std::size_t n = 0; n < values.size(); ++n)
        out << (n ? " " : "") << to_string(values[n]);
    out << '\n';
    return out.str();
}

std::string render_polynomials(const Pattern& pattern, const std::string& kind,
                               const std::vector<RationalPolynomial>& polys, Format format) {
    if (format == Format::Json) {
        json doc = envelope(profile(pattern), "polys");
        json list = json::array();
        for (const auto& p : polys)
            list.push_back(p.to_strings());
        doc["result"] = {{"kind", kind}, {"n", static_cast<long>(polys.size()) - 1}, {"polynomials", std::move(list)}};
        return dump(doc);
    }
    const char symbol = kind == "basic" ? 'b' : 's';
    std::ostringstream out;
    if (format == Format::Csv) {
        out << "index,coefficients\n";
        for (std::size_t n = 0; n < polys.size(); ++n) {
            out << n;
            for (const auto& c : polys[n].to_strings())
                out << ',' << c;
            out << '\n';
        }
        return out.str();
    }
    for (std::size_t n = 0; n < polys.size(); ++n)
        out << symbol << '_' << n << "(x) = " << polys[n].str() << '\n';
    return out.str();
}

std::string render_report(const VerificationReport& report, Format format) {
    std::size_t passed = 0;
    for (const auto& c : report.checks)
        passed += c.passed ? 1 : 0;
    if (format == Format::Json) {
        json doc = envelope(profile(parse_pattern(report.pattern)), "verify");
        json checks = json::array();
        for (const auto& c : report.checks) {
            json entry = {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
            entry["counterexample"] =
                c.counterexample ? json{{"n", c.counterexample->n}, {"m", c.counterexample->m}} : json(nullptr);
            checks.push_back(std::move(entry));
        }
        doc["result"] = {{"max_n", report.max_n},
                         {"max_m", report.max_m},
                         {"passed", report.passed()},
                         {"checks", std::move(checks)}};
        return dump(doc);
    }
    std::ostringstream out;
    if (format == Format::Csv) {
        out << "check,passed,detail\n";
        for (const auto& c : report.checks)
            out << c.name << ',' << (c.passed ? "true" : "false") << ',' << csv_field(c.detail) << '\n';
        return out.str();
    }
    for (const auto& c : report.checks)
        out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << '\n';
    out << "verify " << report.pattern << " (max_n " << report.max_n << ", max_m " << report.max_m << "): " << passed
        << '/' << report.checks.size() << " checks passed\n";
    return out.str();
}

TableDocument parse_table_json(const std::string& text) {
    const json doc = parse_json(text, "table");
    const json& result = doc["result"];
    try {
        const Pattern pattern = parse_pattern(doc.at("pattern").get<std::string>());
        const long max_n = result.at("max_n").get<long>();
        const long max_m = result.at("max_m").get<long>();
        const json& cells = result.at("cells");
        if (!cells.is_array() || static_cast<long>(cells.size()) != max_n + 1)
            bad_document("cells must have max_n + 1 columns");
        TableDocument out{result.at("engine").get<std::string>(), BallotTable(pattern, max_n, max_m)};
        for (long n = 0; n <= max_n; ++n) {
            const json& column = cells[static_cast<std::size_t>(n)];
            if (!column.is_array() || static_cast<long>(column.size()) != max_m + 1)
                bad_document("column " + std::to_string(n) + " must have max_m + 1 entries");
            for (long m = 0; m <= max_m; ++m) {
                const json& v = column[static_cast<std::size_t>(m)];
                if (BallotTable::valid(n, m)) {
                    if (!v.is_string())
                        bad_document("cell values must be decimal strings");
                    out.table.at(n, m) = parse_bigint(v.get<std::string>());
                } else if (!v.is_null()) {
                    bad_document("cells below the boundary must be null");
                }
            }
        }
        return out;
    } catch (const json::exception& e) {
        bad_document(std::string("malformed table document: ") + e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::BadDocument)
            throw;
        bad_document(e.what());
    }
}

PolynomialDocument parse_polynomials_json(const std::string& text) {
    const json doc = parse_json(text, "polys");
    const json& result = doc["result"];
    try {
        PolynomialDocument out;
        out.pattern = parse_pattern(doc.at("pattern").get<std::string>());
        out.kind = result.at("kind").get<std::string>();
        if (out.kind != "basic" && out.kind != "sheffer")
            bad_document("kind must be basic or sheffer");
        for (const auto& p : result.at("polynomials"))
            out.polys.push_back(RationalPolynomial::from_strings(p.get<std::vector<std::string>>()));
        return out;
    } catch (const json::exception& e) {
        bad_document(std::string("malformed polynomial document: ") + e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::BadDocument)
            throw;
        bad_document(e.what());
    }
}

} // namespace latticecount::document
