#pragma once

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vacfluc/sweep.hpp"

namespace vacfluc {

class SpecParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// 17 significant digits: round-trip exact for IEEE doubles, locale-independent.
inline std::string csv_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// '#'-prefixed metadata lines, then a header row, then comma-separated
// records with '\n' endings and '.' decimal separator.
inline void write_csv(std::ostream& os, const SweepResult& result)
{
    for (const auto& line : result.metadata)
        os << "# " << line << '\n';
    for (std::size_t c = 0; c < result.columns.size(); ++c)
        os << (c ? "," : "") << result.columns[c];
    os << '\n';
    for (const auto& record : result.records) {
        for (std::size_t c = 0; c < record.size(); ++c)
            os << (c ? "," : "") << csv_number(record[c]);
        os << '\n';
    }
}

// Parses a file produced by write_csv back into columns + records
// (metadata is returned with the leading "# " stripped).
inline SweepResult read_csv(std::istream& is)
{
    SweepResult result;
    std::string line;
    bool header_seen = false;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        if (line.front() == '#') {
            std::size_t start = line.find_first_not_of("# ");
            result.metadata.push_back(start == std::string::npos ? "" : line.substr(start));
            continue;
        }
        std::stringstream fields(line);
        std::string field;
        if (!header_seen) {
            while (std::getline(fields, field, ','))
                result.columns.push_back(field);
            header_seen = true;
            continue;
        }
        std::vector<double> record;
        while (std::getline(fields, field, ','))
            record.push_back(std::stod(field));
        if (record.size() != result.columns.size())
            throw SpecParseError("CSV record width does not match header");
        result.records.push_back(std::move(record));
    }
    return result;
}

namespace detail {

inline double parse_number(const std::string& token, int line_no, const char* what)
{
    try {
        std::size_t pos = 0;
        const double v = std::stod(token, &pos);
        if (pos != token.size())
            throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw SpecParseError("line " + std::to_string(line_no) + ": bad " + what + " '" + token
                             + "'");
    }
}

} // namespace detail

// Flat key-value sweep description. Grammar (one statement per line,
// '#' comments and blank lines ignored):
//   quantity = <mu|rm|ideal_variance|practical_variance|normalized_variance|detector_factor>
//   fixed <name> = <value>
//   axis <name> = <linear|log> <start> <stop> <count>
inline SweepSpec parse_sweep_spec(std::istream& is)
{
    SweepSpec spec;
    bool quantity_seen = false;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        for (char& ch : line)
            if (ch == '=')
                ch = ' ';
        std::stringstream tokens(line);
        std::vector<std::string> tok;
        std::string t;
        while (tokens >> t)
            tok.push_back(t);
        if (tok.empty())
            continue;

        if (tok[0] == "quantity") {
            if (tok.size() != 2)
                throw SpecParseError("line " + std::to_string(line_no)
                                     + ": expected 'quantity = <name>'");
            const auto q = quantity_from_name(tok[1]);
            if (!q)
                throw SpecParseError("line " + std::to_string(line_no) + ": unknown quantity '"
                                     + tok[1] + "'");
            spec.quantity = *q;
            quantity_seen = true;
        } else if (tok[0] == "fixed") {
            if (tok.size() != 3)
                throw SpecParseError("line " + std::to_string(line_no)
                                     + ": expected 'fixed <name> = <value>'");
            spec.fixed[tok[1]] = detail::parse_number(tok[2], line_no, "value");
        } else if (tok[0] == "axis") {
            if (tok.size() != 6)
                throw SpecParseError("line " + std::to_string(line_no)
                                     + ": expected 'axis <name> = <spacing> <start> <stop> <count>'");
            SweepAxis axis;
            axis.parameter = tok[1];
            if (tok[2] == "linear")
                axis.spacing = AxisSpacing::linear;
            else if (tok[2] == "log")
                axis.spacing = AxisSpacing::log;
            else
                throw SpecParseError("line " + std::to_string(line_no) + ": unknown spacing '"
                                     + tok[2] + "'");
            axis.start = detail::parse_number(tok[3], line_no, "start");
            axis.stop = detail::parse_number(tok[4], line_no, "stop");
            const double count = detail::parse_number(tok[5], line_no, "count");
            if (count < 2 || count != static_cast<double>(static_cast<std::size_t>(count)))
                throw SpecParseError("line " + std::to_string(line_no)
                                     + ": count must be an integer >= 2");
            axis.count = static_cast<std::size_t>(count);
            spec.axes.push_back(std::move(axis));
        } else {
            throw SpecParseError("line " + std::to_string(line_no) + ": unknown statement '"
                                 + tok[0] + "'");
        }
    }
    if (!quantity_seen)
        throw SpecParseError("sweep spec is missing a 'quantity' statement");
    return spec;
}

} // namespace vacfluc
