// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace ecaa {

/// Locale-independent number formatting with 9 significant digits.
std::string fmt_g9(double value);

/// Writes via a temp file in the same directory plus rename, so readers never
/// observe a partial file. Throws IoError on failure.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

/// A parsed delimited table: named columns over double-valued rows.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    int column(const std::string& name) const;        // -1 when absent
    int require_column(const std::string& name) const;  // FormatError when absent
};

/// Parses comma-separated content with a header line. Throws FormatError on
/// empty input or malformed rows.
Table parse_table(const std::string& content);

/// Serializes a table with fmt_g9 cells.
std::string table_to_csv(const std::vector<std::string>& header,
                         const std::vector<std::vector<double>>& rows);

}  // namespace ecaa
