#pragma once

#include "payroll/domain.hpp"
#include "payroll/engine.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace payroll {
class Store;
}

namespace payroll::report {

enum class ReportName { slip_gaji, rekap_periode, rekap_honor, daftar_dosen, daftar_master };
inline constexpr std::array<ReportName, 5> kAllReports = {ReportName::slip_gaji, ReportName::rekap_periode,
                                                         ReportName::rekap_honor, ReportName::daftar_dosen,
                                                         ReportName::daftar_master};

std::string_view to_string(ReportName name);
std::optional<ReportName> parse_name(std::string_view text);

enum class ColumnKind { text, integer, money };

struct Column {
    std::string name;
    ColumnKind kind = ColumnKind::text;
};

using Cell = std::variant<std::string, std::int64_t, Money>;
using CellRow = std::vector<Cell>;

struct Section {
    std::string title;  // empty for single-section reports
    std::vector<CellRow> rows;
    std::optional<CellRow> totals;
};

struct Report {
    ReportName name{};
    std::string title;
    std::vector<std::string> meta;  // "Periode: 2006-06" style lines under the title
    std::vector<Column> header;
    std::vector<Section> sections;

    std::size_t row_count() const;
};

/// Footer row: `label` in the first column, sums of every integer and money
/// column, blanks elsewhere.
CellRow totals_row(const std::vector<Column>& header, const std::vector<CellRow>& rows, std::string label);

Report slip_gaji(const Store& store, Id no_slip, engine::NetMode mode = engine::NetMode::standard);
Report rekap_periode(const Store& store, const Periode& periode, engine::NetMode mode = engine::NetMode::standard);
Report rekap_honor(const Store& store, const Periode& periode);
Report daftar_dosen(const Store& store);
Report daftar_master(const Store& store);

struct Params {
    std::optional<Periode> periode;
    std::optional<Id> no_slip;
    engine::NetMode mode = engine::NetMode::standard;
};

/// Dispatches by name; a missing required parameter is a validation error.
Report build(const Store& store, ReportName name, const Params& params);

/// Fixed-width plain text, UTF-8, "\n" line endings.
std::string to_text(const Report& report);

/// Cell grid exactly as written to CSV: header first, Money as bare integers.
/// Multi-section reports get a leading "bagian" column holding the section title.
std::vector<std::vector<std::string>> to_grid(const Report& report);
std::string to_csv(const Report& report);

}  // namespace payroll::report
