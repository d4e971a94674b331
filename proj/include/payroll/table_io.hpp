#pragma once

#include "payroll/store.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace payroll::table_io {

/// Header row = persistence field names of the table; Money as bare integers;
/// rows in ascending key order.
std::string export_csv(const Store& store, std::string_view table);

struct ImportFile {
    std::string table;
    std::string csv;
};

/// Applies every file to `store` or none of them. Files are processed in
/// dependency order (masters, dosen, gaji) regardless of argument order.
/// Rows are keyed writes: an existing key is replaced, a new key inserted,
/// and an empty id cell on an auto-increment table takes a fresh id.
/// On failure throws `Error` whose details hold one "table:line N: ..."
/// diagnostic per rejected row.
void import_csv(Store& store, const std::vector<ImportFile>& files);

}  // namespace payroll::table_io
