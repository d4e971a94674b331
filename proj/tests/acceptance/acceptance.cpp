// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "support/random_ops.hpp"

#include "payroll/engine.hpp"
#include "payroll/http_server.hpp"
#include "payroll/persistence.hpp"
#include "payroll/reports.hpp"
#include "payroll/schema.hpp"
#include "payroll/service.hpp"
#include "payroll/table_io.hpp"

#include <httplib.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <sys/wait.h>
#include <thread>

using namespace payroll;
using namespace payroll::testing;
using nlohmann::json;

namespace {

struct Failure {
    std::string what;
};

void expect(bool cond, const std::string& what) {
    if (!cond) throw Failure{what};
}

template <typename A, typename B>
void expect_eq(const A& actual, const B& wanted, const std::string& what) {
    if (!(actual == wanted)) {
        std::ostringstream ss;
        ss << what << ": got " << actual << ", want " << wanted;
        throw Failure{ss.str()};
    }
}

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    throw Failure{"operation unexpectedly succeeded"};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Runs the CLI and returns its stdout; throws on a nonzero exit.
std::string run_cli(const std::string& args, const std::filesystem::path& out_file) {
    std::string cmd = std::string("'") + PAYROLL_CLI_PATH + "' " + args + " >'" + out_file.string() + "' 2>&1";
    int status = std::system(cmd.c_str());
    std::string out = slurp(out_file);
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) throw Failure{"cli failed: " + args + ": " + out};
    return out;
}

std::string line_with(const std::string& text, const std::string& label) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.find(label) != std::string::npos) return line;
    throw Failure{"no line containing " + label};
}

// ---------------------------------------------------------------------------

std::string worked_example() {
    auto t0 = std::chrono::steady_clock::now();
    Store s = seeded_store();
    engine::GajiInput in = reference_input();

    // Independent arithmetic on the published tariffs.
    const std::int64_t honor_kotor = 100 * 17'500;
    const std::int64_t hon_mgjr = honor_kotor - 37'500;
    const std::int64_t gross = 1'100'000 + 480'000 + 0 + 0 + hon_mgjr;
    const std::int64_t net = gross - 5'000 - 255'000 - 0;
    expect_eq(honor_kotor, 1'750'000, "oracle honor_kotor");
    expect_eq(hon_mgjr, 1'712'500, "oracle hon_mgjr");
    expect_eq(gross, 3'292'500, "oracle gross");

    auto b = engine::preview(s, in);
    expect_eq(b.honor_kotor.rupiah(), honor_kotor, "honor_kotor");
    expect_eq(b.hon_mgjr.rupiah(), hon_mgjr, "hon_mgjr");
    expect_eq(b.gaji_kotor.rupiah(), gross, "gaji_kotor");
    expect_eq(b.gaji_bersih.rupiah(), net, "standard gaji_bersih");
    expect_eq(net, 3'032'500, "standard net");
    auto compat = engine::preview(s, in, engine::NetMode::paper_compat);
    expect_eq(compat.gaji_bersih.rupiah(), 3'292'500, "paper-compat gaji_bersih");

    // Same thing end to end through the CLI.
    TempDir dir;
    std::string db = "--db '" + (dir / "db.json").string() + "' ";
    run_cli(db + "seed --paper", dir / "out");
    std::string shown = run_cli(db + "--paper-compat slip create --periode 01/06/2006 --nii 020209152 --sks 100 "
                                     "--pajak Rp37.500 --pot-kop Rp5.000 --arisan Rp255.000 --pot-lain 0",
                                dir / "out");
    expect(line_with(shown, "Gaji Bersih").find("Rp3.292.500") != std::string::npos, "compat slip shows Rp3.292.500");
    expect(line_with(shown, "Honor Kotor").find("Rp1.750.000") != std::string::npos, "slip shows honor kotor");
    std::string plain = run_cli(db + "report slip_gaji --no-slip 1", dir / "out");
    expect(line_with(plain, "Gaji Bersih").find("Rp3.032.500") != std::string::npos, "default slip shows Rp3.032.500");
    expect_eq(persist::load(dir / "db.json").get_slip(1).gaji_bersih.rupiah(), 3'032'500, "stored net");

    double t = seconds_since(t0);
    expect(t < 1.0, "runtime " + std::to_string(t) + " s exceeds 1 s");
    char buf[160];
    std::snprintf(buf, sizeof buf, "gross 3292500, compat net 3292500, default net 3032500, %.3f s", t);
    return buf;
}

// The physical design transcribed column by column.
struct Expected {
    const char* table;
    const char* column;
    schema::FieldType type;
    std::size_t width;
    schema::KeyRole role;
    const char* references;
};

std::string schema_conformance() {
    using enum schema::FieldType;
    using enum schema::KeyRole;
    const std::vector<Expected> design = {
        {"Golongan", "#Gol", auto_increment, 0, primary_key, ""},
        {"Golongan", "NamaGol", alpha, 25, none, ""},
        {"Golongan", "Gapok", currency, 0, none, ""},
        {"Jabatan Fungsional Akademik", "#JFA", auto_increment, 0, primary_key, ""},
        {"Jabatan Fungsional Akademik", "NamaJFA", alpha, 30, none, ""},
        {"Jabatan Fungsional Akademik", "TunjFA", currency, 0, none, ""},
        {"Jabatan Struktural", "#JStr", auto_increment, 0, primary_key, ""},
        {"Jabatan Struktural", "NamaJStr", alpha, 30, none, ""},
        {"Jabatan Struktural", "TunjStr", currency, 0, none, ""},
        {"Jabatan Khusus", "#JKhs", auto_increment, 0, primary_key, ""},
        {"Jabatan Khusus", "NamaJKhs", alpha, 30, none, ""},
        {"Jabatan Khusus", "TunjKhs", currency, 0, none, ""},
        {"Pendidikan", "#Pend", auto_increment, 0, primary_key, ""},
        {"Pendidikan", "NamaPend", alpha, 30, none, ""},
        {"Pendidikan", "TarifMgjr", currency, 0, none, ""},
        {"Dosen", "#NII", alpha, 10, primary_key, ""},
        {"Dosen", "NamaDosen", alpha, 25, none, ""},
        {"Dosen", "Golongan", number, 0, foreign_key, "Golongan"},
        {"Dosen", "JabFA", number, 0, foreign_key, "Jabatan Fungsional Akademik"},
        {"Dosen", "JabStr", number, 0, foreign_key, "Jabatan Struktural"},
        {"Dosen", "JabKhs", number, 0, foreign_key, "Jabatan Khusus"},
        {"Dosen", "Pendidikan", number, 0, foreign_key, "Pendidikan"},
        {"Gaji", "#NoSlipGaji", auto_increment, 0, primary_key, ""},
        {"Gaji", "Periode", alpha, 15, none, ""},
        {"Gaji", "NII", alpha, 10, foreign_key, "Dosen"},
        {"Gaji", "NamaDosen", alpha, 25, none, ""},
        {"Gaji", "Gapok", currency, 0, none, ""},
        {"Gaji", "TunjFA", currency, 0, none, ""},
        {"Gaji", "TunjStr", currency, 0, none, ""},
        {"Gaji", "TunjKhs", currency, 0, none, ""},
        {"Gaji", "SksMgjr", number, 0, none, ""},
        {"Gaji", "HonMgjr", currency, 0, none, ""},
        {"Gaji", "Pajak", currency, 0, none, ""},
        {"Gaji", "PotKop", currency, 0, none, ""},
        {"Gaji", "Arisan", currency, 0, none, ""},
        {"Gaji", "PotLain", currency, 0, none, ""},
        {"Gaji", "GajiBersih", currency, 0, none, ""},
    };

    const auto& tables = schema::tables();
    expect_eq(tables.size(), 7u, "table count");
    std::size_t i = 0;
    for (const auto& t : tables) {
        for (const auto& f : t.fields) {
            expect(i < design.size(), "manifest has more columns than the design");
            const Expected& e = design[i++];
            std::string where = std::string(t.name) + "." + std::string(f.name);
            expect_eq(t.original_name, std::string_view(e.table), where + " table");
            expect_eq(f.original_name, std::string_view(e.column), where + " column");
            expect(f.type == e.type, where + " type " + std::string(schema::to_string(f.type)));
            expect_eq(f.width, e.width, where + " width");
            expect(f.role == e.role, where + " key " + std::string(schema::to_string(f.role)));
            if (f.role == foreign_key)
                expect_eq(schema::table(f.references).original_name, std::string_view(e.references),
                          where + " target");
        }
        expect(t.primary_key().role == primary_key, std::string(t.name) + " primary key");
    }
    expect_eq(i, design.size(), "column count");

    // The store accepts each width exactly and rejects one more character.
    // Multi-byte text shows widths count characters, not bytes.
    auto text = [](std::size_t n) {
        std::string s;
        for (std::size_t k = 0; k < n; ++k) s += "\xC3\xA9";  // é
        return s;
    };
    int probes = 0;
    for (MasterKind kind : kMasterKinds) {
        Store s;
        std::size_t w = schema::table(schema::master_info(kind).table).fields[1].width;
        s.insert_master(kind, text(w), Money(1));
        expect(code_of([&] { s.insert_master(kind, text(w + 1), Money(1)); }) == ErrorCode::validation,
               std::string(schema::master_info(kind).table) + " name width");
        probes += 2;
    }
    Store s = seeded_store();
    Dosen d = s.get_dosen(kLeonNii);
    Dosen wide = d;
    wide.nii = "1234567890";
    wide.nama_dosen = text(25);
    s.upsert_dosen(wide);
    wide.nii = "12345678901";
    expect(code_of([&] { s.upsert_dosen(wide); }) == ErrorCode::validation, "nii width");
    wide.nii = "1234567890";
    wide.nama_dosen = text(26);
    expect(code_of([&] { s.upsert_dosen(wide); }) == ErrorCode::validation, "nama_dosen width");
    probes += 4;

    // Periode is stored canonically; its text form must also fit the column.
    expect(code_of([] { canonical_periode("2006-06-01-extra"); }) == ErrorCode::validation, "periode width");
    probes += 1;

    std::ostringstream ss;
    ss << "7 tables, " << design.size() << " columns match the design; " << probes << " width probes";
    return ss.str();
}

std::string referential_integrity() {
    auto t0 = std::chrono::steady_clock::now();
    RandomOps ops(20061);
    constexpr int kSequences = 10'000;
    constexpr int kSteps = 30;
    for (int i = 0; i < kSequences; ++i) {
        try {
            ops.random_store(kSteps);
        } catch (const Violation& v) {
            throw Failure{"sequence " + std::to_string(i) + ": " + v.what};
        }
    }
    double t = seconds_since(t0);
    expect(ops.succeeded() > kSequences * kSteps / 4, "too few operations succeeded to be meaningful");
    expect(ops.failed() > 0, "no operation was ever rejected");
    expect(t < 30.0, "runtime " + std::to_string(t) + " s exceeds 30 s");
    std::ostringstream ss;
    ss << kSequences << " sequences x " << kSteps << " ops (" << ops.succeeded() << " applied, " << ops.failed()
       << " rejected), " << std::fixed << std::setprecision(2) << t << " s";
    return ss.str();
}

std::string snapshot_property() {
    RandomOps ops(777);
    auto& rng = ops.rng();
    std::size_t slips_checked = 0, mutations = 0;
    for (int trial = 0; trial < 300; ++trial) {
        Store s = seeded_store();
        for (int i = 0; i < 30; ++i) try {
                engine::GajiInput in = ops.random_input();
                in.nii = "02020915" + std::to_string(1 + rng() % 3);
                engine::create_slip(s, in);
            } catch (const Error&) {
                // duplicate period or over-deduction: skipped
            }
        expect(!s.gaji().empty(), "trial produced no slips");
        std::string before = persist::to_document(s)["gaji"].dump();

        const Store original = s;
        for (MasterKind kind : kMasterKinds)
            for (const auto& [id, row] : original.masters(kind)) {
                s.update_master(kind, id, row.nama, Money(static_cast<std::int64_t>(rng() % 5'000'000)));
                ++mutations;
            }
        Dosen renamed = s.get_dosen(kLeonNii);
        renamed.nama_dosen = "Renamed " + std::to_string(trial);
        s.upsert_dosen(renamed);

        expect_eq(persist::to_document(s)["gaji"].dump(), before, "slips changed after master mutation");
        for (const auto& [no, slip] : s.gaji()) {
            expect_eq(oracle_net(slip), slip.gaji_bersih.rupiah(), "re-summed net of slip " + std::to_string(no));
            ++slips_checked;
        }
    }
    std::ostringstream ss;
    ss << slips_checked << " slips byte-identical across " << mutations << " tariff mutations; nets re-sum";
    return ss.str();
}

std::string round_trips() {
    RandomOps ops(31337);
    std::size_t csv_tables = 0, dosen_rows = 0, slip_rows = 0;
    for (int i = 0; i < 100; ++i) {
        Store s = ops.random_store(80);
        if (i % 4 == 0) s = [&] {
            Store seeded = seeded_store();
            engine::create_slip(seeded, reference_input());
            return seeded;
        }();
        dosen_rows += s.dosen().size();
        slip_rows += s.gaji().size();
        std::string text = persist::dump(s);
        Store back = persist::parse(text);
        expect(back == s, "load(save(s)) != s for store " + std::to_string(i));
        expect_eq(persist::dump(back), text, "document bytes for store " + std::to_string(i));

        std::vector<table_io::ImportFile> files;
        for (const auto& t : schema::tables()) files.push_back({std::string(t.name), table_io::export_csv(s, t.name)});
        Store imported;
        table_io::import_csv(imported, files);
        for (const auto& t : schema::tables()) {
            expect_eq(table_io::export_csv(imported, t.name), table_io::export_csv(s, t.name),
                      "csv identity for " + std::string(t.name));
            ++csv_tables;
        }
        // CSV carries rows, not counters; the importer restarts each counter
        // after the highest imported id.
        json a = persist::to_document(s), b = persist::to_document(imported);
        a.erase("counters");
        b.erase("counters");
        expect(a == b, "csv import of store " + std::to_string(i));
        imported.check_invariants();
    }

    // Corrupted documents never replace what is on disk or in memory.
    Store s = seeded_store();
    engine::create_slip(s, reference_input());
    json good = persist::to_document(s);
    json dangling = good;
    dangling["dosen"][1]["jab_fa"] = 99;
    json duplicate = good;
    duplicate["golongan"].push_back(duplicate["golongan"][1]);
    json dangling_slip = good;
    dangling_slip["gaji"][0]["nii"] = "0000000000";

    TempDir dir;
    auto path = dir / "db.json";
    persist::save(s, path);
    const std::string on_disk = slurp(path);
    int rejected = 0;
    for (const auto& [doc, code] : std::vector<std::pair<json, ErrorCode>>{
             {dangling, ErrorCode::referential_conflict},
             {duplicate, ErrorCode::conflict},
             {dangling_slip, ErrorCode::referential_conflict}}) {
        expect(code_of([&] { persist::from_document(doc); }) == code, "corrupted document error code");
        auto bad = dir / "bad.json";
        std::ofstream(bad) << doc.dump(2);
        expect(code_of([&] { Service({.path = bad}); }) == code, "service refuses corrupted document");
        ++rejected;
    }
    // A bad CSV batch applied to a live service changes nothing.
    Service svc({.path = path});
    expect(code_of([&] {
               svc.import_csv({{"golongan", "gol_id,nama_gol,gapok\n9,Baru,1\n"},
                               {"dosen", "nii,nama_dosen,golongan,jab_fa,jab_str,jab_khs,pendidikan\n"
                                         "1,A,9,1,1,1,3\n2,B,42,1,1,1,3\n"}});
           }) == ErrorCode::referential_conflict,
           "dangling csv import");
    expect(svc.snapshot() == s, "failed import changed memory");
    expect(slurp(path) == on_disk, "failed import changed the file");

    std::ostringstream ss;
    ss << "100 stores (" << dosen_rows << " dosen, " << slip_rows << " slips) load(save) identical, " << csv_tables << " csv table round-trips, " << rejected + 1
       << " corrupt inputs rejected atomically";
    return ss.str();
}

std::int64_t as_int(const report::Cell& c) {
    if (auto* i = std::get_if<std::int64_t>(&c)) return *i;
    if (auto* m = std::get_if<Money>(&c)) return m->rupiah();
    return 0;
}

std::size_t check_totals(const report::Report& r) {
    std::size_t checked = 0;
    for (const auto& sec : r.sections) {
        if (!sec.totals) continue;
        for (std::size_t c = 0; c < r.header.size(); ++c) {
            if (r.header[c].kind == report::ColumnKind::text) continue;
            std::int64_t sum = 0;
            for (const auto& row : sec.rows) sum += as_int(row[c]);
            expect_eq(as_int((*sec.totals)[c]), sum, r.title + " total of " + r.header[c].name);
            ++checked;
        }
    }
    return checked;
}

std::string reports() {
    Store s = seeded_store();
    auto daftar = report::daftar_dosen(s);
    expect_eq(daftar.sections.size(), 1u, "daftar_dosen sections");
    const auto& rows = daftar.sections[0].rows;
    expect_eq(rows.size(), 3u, "daftar_dosen rows");
    const std::vector<std::pair<std::string, std::string>> grid_names = {
        {"020209151", "Liliya Dewi Susanawati"}, {"020209152", "Leon Andretti Abdillah"}, {"020209153", "Endang Lestari"}};
    for (std::size_t i = 0; i < 3; ++i) {
        expect_eq(std::get<std::string>(rows[i][0]), grid_names[i].first, "row nii");
        expect_eq(std::get<std::string>(rows[i][1]), grid_names[i].second, "row name");
    }
    // The grid itself, keys as the data form shows them.
    expect_eq(table_io::export_csv(s, "dosen"),
              std::string("nii,nama_dosen,golongan,jab_fa,jab_str,jab_khs,pendidikan\n"
                          "020209151,Liliya Dewi Susanawati,2,1,1,1,3\n"
                          "020209152,Leon Andretti Abdillah,2,1,1,1,3\n"
                          "020209153,Endang Lestari,2,5,1,1,3\n"),
              "dosen grid");

    RandomOps ops(4711);
    std::size_t totals = 0;
    for (int i = 0; i < 60; ++i) {
        Store r = ops.random_store(120);
        if (i == 0) {
            r = seeded_store();
            engine::create_slip(r, reference_input());
        }
        for (const char* p : {"2006-05", "2006-06", "2006-07", "2007-01"}) {
            totals += check_totals(report::rekap_periode(r, canonical_periode(p)));
            totals += check_totals(report::rekap_honor(r, canonical_periode(p)));
        }
        for (const auto& [no, slip] : r.gaji()) totals += check_totals(report::slip_gaji(r, no));

        Store copy = persist::parse(persist::dump(r));
        for (auto name : report::kAllReports) {
            report::Params params{.periode = canonical_periode("2006-06"), .no_slip = std::nullopt};
            if (name == report::ReportName::slip_gaji) {
                if (r.gaji().empty()) continue;
                params.no_slip = r.gaji().begin()->first;
            }
            auto a = report::build(r, name, params), b = report::build(copy, name, params);
            expect_eq(report::to_text(a), report::to_text(b), "text of " + std::string(report::to_string(name)));
            expect_eq(report::to_csv(a), report::to_csv(b), "csv of " + std::string(report::to_string(name)));
        }
    }
    return "daftar_dosen 3 rows in NII order; " + std::to_string(totals) +
           " totals cells re-summed; identical stores give identical bytes";
}

std::string api_contract() {
    Service svc(seeded_store());
    HttpServer http(svc);
    int port = http.bind("127.0.0.1", 0);
    std::thread worker([&] { http.run(); });
    http.wait_until_ready();
    struct Stop {
        HttpServer& h;
        std::thread& w;
        ~Stop() {
            h.stop();
            w.join();
        }
    } stop{http, worker};

    httplib::Client c("127.0.0.1", port);
    const std::string body =
        R"({"periode":"01/06/2006","nii":"020209152","sks_mgjr":100,"pajak":37500,"pot_kop":5000,"arisan":255000,"pot_lain":0})";
    auto created = c.Post("/api/slips", body, "application/json");
    expect(bool(created), "no response to POST /api/slips");
    expect_eq(created->status, 201, "POST /api/slips status");
    expect_eq(json::parse(created->body)["gaji_bersih"].get<std::int64_t>(), 3'032'500, "gaji_bersih");
    auto dup = c.Post("/api/slips", body, "application/json");
    expect(bool(dup), "no response to duplicate");
    expect_eq(dup->status, 409, "duplicate status");
    auto del = c.Delete("/api/golongan/2");
    expect(bool(del), "no response to DELETE");
    expect_eq(del->status, 409, "DELETE referenced golongan status");
    expect_eq(json::parse(del->body)["code"].get<std::string>(), std::string("referential_conflict"), "error code");
    return "201 with 3032500, duplicate 409, referenced delete 409 (no web front end built)";
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<std::string()>>> criteria = {
        {"worked-example", worked_example},
        {"schema-conformance", schema_conformance},
        {"referential-integrity", referential_integrity},
        {"slip-snapshot", snapshot_property},
        {"round-trips", round_trips},
        {"reports", reports},
        {"api-contract", api_contract},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        try {
            std::string note = check();
            std::cout << "PASS " << name << ": " << note << std::endl;
        } catch (const Failure& f) {
            ++failed;
            std::cout << "FAIL " << name << ": " << f.what << std::endl;
        } catch (const Violation& v) {
            ++failed;
            std::cout << "FAIL " << name << ": " << v.what << std::endl;
        } catch (const std::exception& e) {
            ++failed;
            std::cout << "FAIL " << name << ": unexpected exception: " << e.what() << std::endl;
        }
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
