#ifndef LATTICECOUNT_DOCUMENT_HPP
#define LATTICECOUNT_DOCUMENT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latticecount/numeric.hpp"
#include "latticecount/pattern.hpp"
#include "latticecount/polynomial.hpp"
#include "latticecount/recurrence.hpp"
#include "latticecount/table.hpp"
#include "latticecount/verify.hpp"

// Output documents. JSON documents share the envelope
// {"schema_version": "1", "pattern", "command", "profile", "result"} and carry
// every number as a decimal or "p/q" string.
namespace latticecount::document {

inline constexpr const char* kSchemaVersion = "1";

enum class Format { Text, Csv, Json };

/// "text", "csv" or "json"; throws InvalidArgument otherwise.
Format parse_format(std::string_view name);

/// The recurrence conditions are reported when the pattern admits a recurrence.
std::string render_analysis(const PatternProfile& pr, Format format);

std::string render_table(const BallotTable& table, const std::string& engine, Format format);

std::string render_dyck(const Pattern& pattern, const std::string& engine, const std::vector<BigInt>& values,
                        Format format);

/// kind is "basic" or "sheffer".
std::string render_polynomials(const Pattern& pattern, const std::string& kind,
                               const std::vector<RationalPolynomial>& polys, Format format);

std::string render_report(const VerificationReport& report, Format format);

struct TableDocument {
    std::string engine;
    BallotTable table;
};

struct PolynomialDocument {
    Pattern pattern;
    std::string kind;
    std::vector<RationalPolynomial> polys;
};

/// Inverses of the JSON renderers; throw BadDocument on malformed input.
TableDocument parse_table_json(const std::string& text);
PolynomialDocument parse_polynomials_json(const std::string& text);

} // namespace latticecount::document

#endif
