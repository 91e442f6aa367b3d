#include "grassmann/io.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace grassmann {

OutputFormat parse_format(std::string_view text) {
    if (text == "text") return OutputFormat::Text;
    if (text == "json") return OutputFormat::Json;
    throw Error(Errc::ParseError,
                "unknown format '" + std::string(text) + "' (expected text or json)");
}

void write_matrix_text(std::ostream& out, const Mat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ' ';
            out << m.at(i, j);
        }
        out << '\n';
    }
}

std::string matrix_json_line(const Mat& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    nlohmann::ordered_json obj{
        {"q", m.field().q()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
    return obj.dump();
}

Mat read_matrix_text(std::istream& in, const Field& field) {
    std::vector<Fe> entries;
    std::size_t rows = 0, cols = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) break;
        std::vector<Fe> row;
        const char* p = line.data();
        const char* end = p + line.size();
        while (p < end) {
            while (p < end && *p == ' ') ++p;
            if (p == end) break;
            std::uint32_t v = 0;
            auto [next, ec] = std::from_chars(p, end, v);
            if (ec != std::errc() || (next < end && *next != ' '))
                throw Error(Errc::ParseError, "bad matrix entry in line '" + line + "'");
            if (v >= field.q())
                throw Error(Errc::ValueOutOfRange, "entry code " + std::to_string(v) +
                                                       " outside field of order " +
                                                       std::to_string(field.q()));
            row.push_back(v);
            p = next;
        }
        if (row.empty()) break;  // whitespace-only line also terminates
        if (rows == 0) {
            cols = row.size();
        } else if (row.size() != cols) {
            throw Error(Errc::ParseError, "row " + std::to_string(rows + 1) + " has " +
                                              std::to_string(row.size()) + " entries, expected " +
                                              std::to_string(cols));
        }
        entries.insert(entries.end(), row.begin(), row.end());
        ++rows;
    }
    if (rows == 0) throw Error(Errc::ParseError, "empty matrix input");
    return Mat(field, rows, cols, std::move(entries));
}

void write_poly_text(std::ostream& out, const QPoly& p) {
    out << "n=" << p.n << " d=" << p.d << " deg=" << p.degree() << '\n';
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        if (i > 0) out << ' ';
        out << p.coeffs[i].get_str();
    }
    out << '\n';
}

std::string poly_json(const QPoly& p) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const BigCount& c : p.coeffs) coeffs.push_back(c.get_str());
    nlohmann::ordered_json obj{{"n", p.n}, {"d", p.d}, {"coeffs", std::move(coeffs)}};
    return obj.dump();
}

void write_report_text(std::ostream& out, const CrossCheckReport& r) {
    out << (r.pass() ? "pass" : "fail") << " q=" << r.q << " n=" << r.n << " d=" << r.d << ": "
        << r.oracle.get_str() << " = " << r.gaussian.get_str() << " = " << r.pivot.get_str()
        << " = " << r.poly.get_str() << " (oracle = gaussian = pivot = poly), bijection "
        << (r.bijection_ok ? "ok" : "fail") << '\n';
}

std::string report_json(const CrossCheckReport& r) {
    nlohmann::ordered_json obj{{"q", r.q},
                       {"n", r.n},
                       {"d", r.d},
                       {"oracle", r.oracle.get_str()},
                       {"gaussian", r.gaussian.get_str()},
                       {"pivot", r.pivot.get_str()},
                       {"poly", r.poly.get_str()},
                       {"bijection", r.bijection_ok ? "ok" : "fail"}};
    return obj.dump();
}

std::string render_record(const EchelonForm& e, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) return matrix_json_line(e.mat) + '\n';
    std::ostringstream os;
    write_matrix_text(os, e.mat);
    return std::move(os).str();
}

}  // namespace grassmann
