// SPDX-License-Identifier: Apache-2.0
#include "ecaa/table_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "ecaa/config_io.hpp"

namespace ecaa {

std::string fmt_g9(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot open '" + tmp + "' for writing: " + std::strerror(errno));
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out)
            throw IoError("write failed for '" + tmp + "'");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw IoError("cannot rename '" + tmp + "' to '" + path + "': " + std::strerror(errno));
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "' for reading: " + std::strerror(errno));
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw IoError("read failed for '" + path + "'");
    return buf.str();
}

int Table::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name)
            return static_cast<int>(i);
    return -1;
}

int Table::require_column(const std::string& name) const {
    const int idx = column(name);
    if (idx < 0)
        throw FormatError("missing column '" + name + "'");
    return idx;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ','))
        cells.push_back(cell);
    if (!line.empty() && line.back() == ',')
        cells.emplace_back();
    return cells;
}

}  // namespace

Table parse_table(const std::string& content) {
    std::istringstream in(content);
    std::string line;
    Table table;
    if (!std::getline(in, line) || line.empty())
        throw FormatError("empty data file: no header line");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    table.header = split_csv(line);

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const std::vector<std::string> cells = split_csv(line);
        if (cells.size() != table.header.size())
            throw FormatError("line " + std::to_string(line_no) + ": expected " +
                              std::to_string(table.header.size()) + " columns, got " +
                              std::to_string(cells.size()));
        std::vector<double> row(cells.size());
        for (std::size_t i = 0; i < cells.size(); ++i) {
            try {
                std::size_t pos = 0;
                row[i] = std::stod(cells[i], &pos);
                if (pos != cells[i].size())
                    throw std::invalid_argument("trailing characters");
            } catch (const std::exception&) {
                throw FormatError("line " + std::to_string(line_no) + ": cell '" + cells[i] +
                                  "' in column '" + table.header[i] + "' is not a number");
            }
        }
        table.rows.push_back(std::move(row));
    }
    if (table.rows.empty())
        throw FormatError("empty data file: no rows");
    return table;
}

std::string table_to_csv(const std::vector<std::string>& header,
                         const std::vector<std::vector<double>>& rows) {
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << header[i];
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << fmt_g9(row[i]);
        out << "\n";
    }
    return out.str();
}

}  // namespace ecaa
