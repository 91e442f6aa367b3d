#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "grassmann/counting.hpp"
#include "grassmann/grassmannian.hpp"
#include "grassmann/matrix.hpp"
#include "grassmann/oracle.hpp"

namespace grassmann {

enum class OutputFormat { Text, Json };

/// Parses "text" or "json". Throws ParseError.
OutputFormat parse_format(std::string_view text);

/// One row per line, entries as decimal element codes separated by single
/// spaces. A 0 x n matrix writes nothing.
void write_matrix_text(std::ostream& out, const Mat& m);

/// Compact {"q","rows","cols","entries":[[...],...]} object, no newline.
std::string matrix_json_line(const Mat& m);

/// Reads rows in the text format until a blank line or end of input. Column
/// count is taken from the first row. Throws ParseError on empty input,
/// ragged rows, malformed numbers, or codes outside [0, q).
Mat read_matrix_text(std::istream& in, const Field& field);

/// Header line "n=<n> d=<d> deg=<m>", then the coefficients highest power
/// first, space-separated on one line.
void write_poly_text(std::ostream& out, const QPoly& p);

/// {"n","d","coeffs":[...]} with coefficients as decimal strings (they
/// outgrow fixed-width integers).
std::string poly_json(const QPoly& p);

void write_report_text(std::ostream& out, const CrossCheckReport& r);

/// {"q","n","d","oracle","gaussian","pivot","poly","bijection":"ok"|"fail"}
/// with counts as decimal strings.
std::string report_json(const CrossCheckReport& r);

/// One enumeration record: text rows (each line ending '\n') or one JSON
/// object line. Separators between records are the caller's concern.
std::string render_record(const EchelonForm& e, OutputFormat fmt);

/// Line placed between consecutive text records (not after the last).
inline constexpr std::string_view kRecordSeparator = "-\n";

}  // namespace grassmann
