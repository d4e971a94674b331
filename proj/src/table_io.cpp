#include "payroll/table_io.hpp"

#include "payroll/csv.hpp"
#include "payroll/error.hpp"
#include "payroll/schema.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace payroll::table_io {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view field) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        fail(ErrorCode::validation, std::string(field) + ": \"" + std::string(text) + "\" is not an integer");
    return v;
}

std::size_t load_rank(std::string_view table) {
    const auto& all = schema::tables();
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i].name == table) return i;
    fail(ErrorCode::usage, "unknown table \"" + std::string(table) + "\"");
}

using Cells = std::map<std::string_view, std::string, std::less<>>;

void import_row(Store& store, std::string_view table, const Cells& c) {
    auto money = [&](std::string_view f) { return parse_money(c.find(f)->second); };
    auto integer = [&](std::string_view f) { return parse_int(c.find(f)->second, f); };
    auto text = [&](std::string_view f) -> const std::string& { return c.find(f)->second; };

    if (auto kind = schema::master_kind(table)) {
        const auto& info = schema::master_info(*kind);
        MasterRow row;
        row.id = text(info.id_field).empty() ? 0 : integer(info.id_field);
        if (text(info.id_field).size() && row.id < 1) fail(ErrorCode::validation, std::string(info.id_field) + " must be >= 1");
        row.nama = text(info.name_field);
        row.tarif = money(info.tarif_field);
        store.put_master(*kind, std::move(row));
    } else if (table == "dosen") {
        store.upsert_dosen(Dosen{
            .nii = text("nii"),
            .nama_dosen = text("nama_dosen"),
            .golongan = integer("golongan"),
            .jab_fa = integer("jab_fa"),
            .jab_str = integer("jab_str"),
            .jab_khs = integer("jab_khs"),
            .pendidikan = integer("pendidikan"),
        });
    } else {
        SlipGaji slip{
            .no_slip = text("no_slip").empty() ? 0 : integer("no_slip"),
            .periode = canonical_periode(text("periode")),
            .nii = text("nii"),
            .nama_dosen = text("nama_dosen"),
            .gapok = money("gapok"),
            .tunj_fa = money("tunj_fa"),
            .tunj_str = money("tunj_str"),
            .tunj_khs = money("tunj_khs"),
            .sks_mgjr = integer("sks_mgjr"),
            .hon_mgjr = money("hon_mgjr"),
            .pajak = money("pajak"),
            .pot_kop = money("pot_kop"),
            .arisan = money("arisan"),
            .pot_lain = money("pot_lain"),
            .gaji_bersih = money("gaji_bersih"),
        };
        if (!text("no_slip").empty() && slip.no_slip < 1) fail(ErrorCode::validation, "no_slip must be >= 1");
        store.put_slip(std::move(slip));
    }
}

}  // namespace

std::string export_csv(const Store& store, std::string_view table) {
    const schema::Table& t = schema::table(table);
    std::vector<csv::Row> rows;
    csv::Row header;
    for (const auto& f : t.fields) header.emplace_back(f.name);
    rows.push_back(header);

    if (auto kind = schema::master_kind(table)) {
        for (const auto& [id, r] : store.masters(*kind))
            rows.push_back({std::to_string(r.id), r.nama, std::to_string(r.tarif.rupiah())});
    } else if (table == "dosen") {
        for (const auto& [nii, d] : store.dosen())
            rows.push_back({d.nii, d.nama_dosen, std::to_string(d.golongan), std::to_string(d.jab_fa),
                            std::to_string(d.jab_str), std::to_string(d.jab_khs), std::to_string(d.pendidikan)});
    } else {
        auto m = [](Money v) { return std::to_string(v.rupiah()); };
        for (const auto& [no, s] : store.gaji())
            rows.push_back({std::to_string(s.no_slip), s.periode.str(), s.nii, s.nama_dosen, m(s.gapok), m(s.tunj_fa),
                            m(s.tunj_str), m(s.tunj_khs), std::to_string(s.sks_mgjr), m(s.hon_mgjr), m(s.pajak),
                            m(s.pot_kop), m(s.arisan), m(s.pot_lain), m(s.gaji_bersih)});
    }
    return csv::write(rows);
}

void import_csv(Store& store, const std::vector<ImportFile>& files) {
    std::vector<const ImportFile*> ordered;
    for (const auto& f : files) {
        load_rank(f.table);
        ordered.push_back(&f);
    }
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const ImportFile* a, const ImportFile* b) { return load_rank(a->table) < load_rank(b->table); });

    Store work = store;
    std::vector<std::string> diagnostics;
    ErrorCode first_code = ErrorCode::validation;
    auto reject = [&](std::string diag, ErrorCode code) {
        if (diagnostics.empty()) first_code = code;
        diagnostics.push_back(std::move(diag));
    };
    for (const ImportFile* file : ordered) {
        const schema::Table& t = schema::table(file->table);
        std::string where = file->table + ":";
        std::vector<csv::Record> records;
        try {
            records = csv::parse(file->csv);
        } catch (const Error& e) {
            reject(where + e.what(), e.code());
            continue;
        }
        if (records.empty()) {
            reject(where + "line 1: missing header", ErrorCode::validation);
            continue;
        }
        const csv::Row& header = records.front().fields;
        csv::Row expected;
        for (const auto& f : t.fields) expected.emplace_back(f.name);
        csv::Row sorted_header = header, sorted_expected = expected;
        std::sort(sorted_header.begin(), sorted_header.end());
        std::sort(sorted_expected.begin(), sorted_expected.end());
        if (sorted_header != sorted_expected) {
            std::string want;
            for (const auto& n : expected) want += (want.empty() ? "" : ",") + n;
            reject(where + "line 1: header must name the fields " + want, ErrorCode::validation);
            continue;
        }
        for (std::size_t r = 1; r < records.size(); ++r) {
            const csv::Record& rec = records[r];
            std::string prefix = where + "line " + std::to_string(rec.line) + ": ";
            if (rec.fields.size() != header.size()) {
                reject(prefix + "expected " + std::to_string(header.size()) + " fields, got " +
                           std::to_string(rec.fields.size()),
                       ErrorCode::validation);
                continue;
            }
            Cells cells;
            for (std::size_t k = 0; k < header.size(); ++k) cells.emplace(header[k], rec.fields[k]);
            try {
                import_row(work, file->table, cells);
            } catch (const Error& e) {
                reject(prefix + e.what(), e.code());
            }
        }
    }
    if (!diagnostics.empty()) {
        std::string summary = "import rejected: " + std::to_string(diagnostics.size()) + " bad row(s); first: " +
                              diagnostics.front();
        fail(first_code, std::move(summary), std::move(diagnostics));
    }
    store = std::move(work);
}

}  // namespace payroll::table_io
