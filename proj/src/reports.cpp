#include "payroll/reports.hpp"

#include "payroll/csv.hpp"
#include "payroll/error.hpp"
#include "payroll/schema.hpp"
#include "payroll/store.hpp"

#include <algorithm>

namespace payroll::report {

namespace {

using engine::NetMode;

Column text_col(std::string n) { return {std::move(n), ColumnKind::text}; }
Column int_col(std::string n) { return {std::move(n), ColumnKind::integer}; }
Column money_col(std::string n) { return {std::move(n), ColumnKind::money}; }

bool multi_section(const Report& r) {
    return r.sections.size() > 1 || (r.sections.size() == 1 && !r.sections.front().title.empty());
}

std::string cell_text(const Cell& c) {
    if (auto s = std::get_if<std::string>(&c)) return *s;
    if (auto i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
    return format_money(std::get<Money>(c));
}

std::string cell_raw(const Cell& c) {
    if (auto m = std::get_if<Money>(&c)) return std::to_string(m->rupiah());
    return cell_text(c);
}

std::vector<SlipGaji> slips_by_nii(const Store& store, const Periode& periode) {
    auto slips = store.list_slips(periode);
    std::sort(slips.begin(), slips.end(), [](const SlipGaji& a, const SlipGaji& b) { return a.nii < b.nii; });
    return slips;
}

std::string pad(const std::string& s, std::size_t width, bool right) {
    std::size_t n = char_count(s);
    if (n >= width) return s;
    std::string fill(width - n, ' ');
    return right ? fill + s : s + fill;
}

void rtrim_line(std::string& out) {
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
}

}  // namespace

std::string_view to_string(ReportName name) {
    switch (name) {
        case ReportName::slip_gaji: return "slip_gaji";
        case ReportName::rekap_periode: return "rekap_periode";
        case ReportName::rekap_honor: return "rekap_honor";
        case ReportName::daftar_dosen: return "daftar_dosen";
        case ReportName::daftar_master: return "daftar_master";
    }
    return "?";
}

std::optional<ReportName> parse_name(std::string_view text) {
    for (ReportName n : kAllReports)
        if (to_string(n) == text) return n;
    return std::nullopt;
}

std::size_t Report::row_count() const {
    std::size_t n = 0;
    for (const auto& s : sections) n += s.rows.size();
    return n;
}

CellRow totals_row(const std::vector<Column>& header, const std::vector<CellRow>& rows, std::string label) {
    CellRow out;
    out.reserve(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (c == 0) {
            out.emplace_back(label);
        } else if (header[c].kind == ColumnKind::money) {
            Money sum;
            for (const auto& r : rows) sum += std::get<Money>(r[c]);
            out.emplace_back(sum);
        } else if (header[c].kind == ColumnKind::integer) {
            std::int64_t sum = 0;
            for (const auto& r : rows)
                if (__builtin_add_overflow(sum, std::get<std::int64_t>(r[c]), &sum))
                    fail(ErrorCode::validation, "integer overflow in totals");
            out.emplace_back(sum);
        } else {
            out.emplace_back(std::string());
        }
    }
    return out;
}

Report slip_gaji(const Store& store, Id no_slip, NetMode mode) {
    const SlipGaji& s = store.get_slip(no_slip);
    Report r;
    r.name = ReportName::slip_gaji;
    r.title = "SLIP GAJI DOSEN";
    r.meta = {"No Slip Gaji: " + std::to_string(s.no_slip), "Periode: " + s.periode.str(), "NII: " + s.nii,
              "Nama Dosen: " + s.nama_dosen};
    r.header = {text_col("Keterangan"), money_col("Jumlah")};

    Section honor{"Honor Mengajar", {}, std::nullopt};
    honor.rows = {
        {std::string("Sks Mengajar"), s.sks_mgjr},
        {std::string("Honor Kotor"), s.hon_mgjr + s.pajak},
        {std::string("Pajak"), s.pajak},
        {std::string("Honor Mengajar"), s.hon_mgjr},
    };

    Section pendapatan{"Pendapatan", {}, std::nullopt};
    pendapatan.rows = {
        {std::string("Gaji Pokok"), s.gapok},
        {std::string("Tunjangan Fungsional Akademik"), s.tunj_fa},
        {std::string("Tunjangan Struktural"), s.tunj_str},
        {std::string("Tunjangan Khusus"), s.tunj_khs},
        {std::string("Honor Mengajar"), s.hon_mgjr},
    };
    pendapatan.totals = totals_row(r.header, pendapatan.rows, "Gaji Kotor");

    Section potongan{"Potongan", {}, std::nullopt};
    potongan.rows = {
        {std::string("Potongan Koperasi"), s.pot_kop},
        {std::string("Arisan"), s.arisan},
        {std::string("Lainnya"), s.pot_lain},
    };
    potongan.totals = totals_row(r.header, potongan.rows, "Jumlah Potongan");

    Section bersih{"Total", {{std::string("Gaji Bersih"), engine::displayed_net(s, mode)}}, std::nullopt};
    r.sections = {std::move(honor), std::move(pendapatan), std::move(potongan), std::move(bersih)};
    return r;
}

Report rekap_periode(const Store& store, const Periode& periode, NetMode mode) {
    Report r;
    r.name = ReportName::rekap_periode;
    r.title = "REKAPITULASI GAJI PER PERIODE";
    r.meta = {"Periode: " + periode.str()};
    r.header = {text_col("NII"),          text_col("Nama Dosen"),   money_col("Gapok"),    money_col("TunjFA"),
                money_col("TunjStr"),     money_col("TunjKhs"),     money_col("HonMgjr"),  money_col("Gaji Kotor"),
                money_col("PotKop"),      money_col("Arisan"),      money_col("PotLain"),  money_col("Gaji Bersih")};
    Section sec;
    for (const SlipGaji& s : slips_by_nii(store, periode)) {
        sec.rows.push_back({s.nii, s.nama_dosen, s.gapok, s.tunj_fa, s.tunj_str, s.tunj_khs, s.hon_mgjr,
                            engine::slip_gaji_kotor(s), s.pot_kop, s.arisan, s.pot_lain,
                            engine::displayed_net(s, mode)});
    }
    sec.totals = totals_row(r.header, sec.rows, "TOTAL");
    r.sections.push_back(std::move(sec));
    return r;
}

Report rekap_honor(const Store& store, const Periode& periode) {
    Report r;
    r.name = ReportName::rekap_honor;
    r.title = "REKAPITULASI HONOR MENGAJAR";
    r.meta = {"Periode: " + periode.str()};
    r.header = {text_col("NII"), text_col("Nama Dosen"), int_col("SksMgjr"), money_col("HonMgjr"), money_col("Pajak")};
    Section sec;
    for (const SlipGaji& s : slips_by_nii(store, periode))
        sec.rows.push_back({s.nii, s.nama_dosen, s.sks_mgjr, s.hon_mgjr, s.pajak});
    sec.totals = totals_row(r.header, sec.rows, "TOTAL");
    r.sections.push_back(std::move(sec));
    return r;
}

Report daftar_dosen(const Store& store) {
    Report r;
    r.name = ReportName::daftar_dosen;
    r.title = "DAFTAR DOSEN";
    r.header = {text_col("NII"),      text_col("Nama Dosen"), text_col("Golongan"),  text_col("Jabatan Fungsional"),
                text_col("Jabatan Struktural"), text_col("Jabatan Khusus"), text_col("Pendidikan")};
    Section sec;
    for (const auto& [nii, d] : store.dosen()) {
        CellRow row{d.nii, d.nama_dosen};
        for (MasterKind kind : kMasterKinds) row.emplace_back(store.get_master(kind, d.ref(kind)).nama);
        sec.rows.push_back(std::move(row));
    }
    r.sections.push_back(std::move(sec));
    return r;
}

Report daftar_master(const Store& store) {
    Report r;
    r.name = ReportName::daftar_master;
    r.title = "DAFTAR DATA MASTER";
    r.header = {int_col("ID"), text_col("Nama"), money_col("Tarif")};
    for (MasterKind kind : kMasterKinds) {
        Section sec{std::string(schema::master_info(kind).title), {}, std::nullopt};
        for (const auto& [id, row] : store.masters(kind)) sec.rows.push_back({row.id, row.nama, row.tarif});
        r.sections.push_back(std::move(sec));
    }
    return r;
}

Report build(const Store& store, ReportName name, const Params& params) {
    auto need_periode = [&]() -> const Periode& {
        if (!params.periode) fail(ErrorCode::validation, std::string(to_string(name)) + " requires a periode");
        return *params.periode;
    };
    switch (name) {
        case ReportName::slip_gaji:
            if (!params.no_slip) fail(ErrorCode::validation, "slip_gaji requires no_slip");
            return slip_gaji(store, *params.no_slip, params.mode);
        case ReportName::rekap_periode: return rekap_periode(store, need_periode(), params.mode);
        case ReportName::rekap_honor: return rekap_honor(store, need_periode());
        case ReportName::daftar_dosen: return daftar_dosen(store);
        case ReportName::daftar_master: return daftar_master(store);
    }
    fail(ErrorCode::internal, "unknown report");
}

std::string to_text(const Report& report) {
    std::vector<std::size_t> width(report.header.size(), 0);
    auto widen = [&](const CellRow& row) {
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], char_count(cell_text(row[c])));
    };
    for (std::size_t c = 0; c < report.header.size(); ++c) width[c] = char_count(report.header[c].name);
    for (const auto& sec : report.sections) {
        for (const auto& row : sec.rows) widen(row);
        if (sec.totals) widen(*sec.totals);
    }
    std::size_t total_width = 0;
    for (std::size_t w : width) total_width += w;
    total_width += 2 * (width.empty() ? 0 : width.size() - 1);

    auto line = [&](const std::vector<std::string>& cells, std::string& out) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) out += "  ";
            out += pad(cells[c], width[c], report.header[c].kind != ColumnKind::text);
        }
        rtrim_line(out);
    };
    auto cells_of = [](const CellRow& row) {
        std::vector<std::string> out;
        for (const auto& c : row) out.push_back(cell_text(c));
        return out;
    };
    std::string rule(total_width, '-');

    std::string out = report.title + "\n";
    for (const auto& m : report.meta) out += m + "\n";
    std::vector<std::string> head;
    for (const auto& col : report.header) head.push_back(col.name);
    for (const auto& sec : report.sections) {
        out += "\n";
        if (!sec.title.empty()) out += "[" + sec.title + "]\n";
        line(head, out);
        out += rule + "\n";
        if (sec.rows.empty()) out += "(kosong)\n";
        for (const auto& row : sec.rows) line(cells_of(row), out);
        if (sec.totals) {
            out += rule + "\n";
            line(cells_of(*sec.totals), out);
        }
    }
    return out;
}

std::vector<std::vector<std::string>> to_grid(const Report& report) {
    bool tagged = multi_section(report);
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> head;
    if (tagged) head.emplace_back("bagian");
    for (const auto& col : report.header) head.push_back(col.name);
    grid.push_back(std::move(head));
    auto emit = [&](const Section& sec, const CellRow& row) {
        std::vector<std::string> out;
        if (tagged) out.push_back(sec.title);
        for (const auto& c : row) out.push_back(cell_raw(c));
        grid.push_back(std::move(out));
    };
    for (const auto& sec : report.sections) {
        for (const auto& row : sec.rows) emit(sec, row);
        if (sec.totals) emit(sec, *sec.totals);
    }
    return grid;
}

std::string to_csv(const Report& report) { return csv::write(to_grid(report)); }

}  // namespace payroll::report
