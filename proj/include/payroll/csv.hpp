#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace payroll::csv {

using Row = std::vector<std::string>;

struct Record {
    std::size_t line = 0;  // 1-based line where the record starts
    Row fields;
};

/// Comma separated, double-quote quoting, "\n" line endings. A field is quoted
/// only when it contains a comma, quote, CR or LF.
std::string write(const std::vector<Row>& rows);
std::string write_row(const Row& row);

/// Accepts "\n" or "\r\n" line endings. A trailing newline does not produce an
/// empty record; blank lines elsewhere are kept as one-empty-field records.
std::vector<Record> parse(std::string_view text);

}  // namespace payroll::csv
