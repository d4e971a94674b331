// Operator command line. Talks to the core only through payroll.h.

#include "payroll/payroll.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <pthread.h>

namespace {

// Exit codes: 0 ok, 1 validation/usage, 2 not found, 3 conflict, 4 I/O.
int exit_code(payroll_status s) {
    switch (s) {
        case PAYROLL_OK: return 0;
        case PAYROLL_E_NOT_FOUND: return 2;
        case PAYROLL_E_CONFLICT:
        case PAYROLL_E_REFERENTIAL: return 3;
        case PAYROLL_E_IO: return 4;
        default: return 1;
    }
}

struct Failure {
    payroll_status status;
    std::string message;
};

void check(payroll_status s) {
    if (s != PAYROLL_OK) throw Failure{s, std::string(payroll_status_name(s)) + ": " + payroll_last_error()};
}

[[noreturn]] void usage_error(const std::string& msg) { throw Failure{PAYROLL_E_USAGE, "usage: " + msg}; }

struct FreeDeleter {
    void operator()(char* p) const { payroll_free(p); }
};
using OwnedText = std::unique_ptr<char, FreeDeleter>;

struct CloseDeleter {
    void operator()(payroll_db* db) const { payroll_close(db); }
};
using Db = std::unique_ptr<payroll_db, CloseDeleter>;

std::string take(char* p) {
    OwnedText owned(p);
    return owned ? std::string(owned.get()) : std::string();
}

std::int64_t money_arg(const std::string& text, const char* flag) {
    std::int64_t v = 0;
    if (payroll_parse_money(text.c_str(), &v) != PAYROLL_OK)
        usage_error(std::string(flag) + ": " + payroll_last_error());
    return v;
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{PAYROLL_E_IO, "io: cannot read " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw Failure{PAYROLL_E_IO, "io: cannot write " + path};
}

std::string pretty(const std::string& compact_json) {
    return nlohmann::json::parse(compact_json).dump(2) + "\n";
}

struct Globals {
    std::string db_path;
    bool paper_compat = false;
};

Db open_db(const Globals& g, bool mutating, bool create = false) {
    if (g.db_path.empty()) usage_error("no store given (use --db or PAYROLL_DB)");
    unsigned flags = 0;
    if (mutating) flags |= PAYROLL_OPEN_LOCK;
    if (create) flags |= PAYROLL_OPEN_CREATE;
    if (g.paper_compat) flags |= PAYROLL_OPEN_PAPER_COMPAT;
    payroll_db* raw = nullptr;
    check(payroll_open(g.db_path.c_str(), flags, &raw));
    return Db(raw);
}

std::string print_slip(payroll_db* db, const std::string& slip_json) {
    auto no = std::to_string(nlohmann::json::parse(slip_json).at("no_slip").get<std::int64_t>());
    char* text = nullptr;
    check(payroll_report(db, "slip_gaji", nullptr, no.c_str(), PAYROLL_FORMAT_TEXT, &text));
    return take(text);
}

struct SlipArgs {
    std::string periode;
    std::string nii;
    std::int64_t sks = 0;
    std::string pajak = "0", pot_kop = "0", arisan = "0", pot_lain = "0";

    void attach(CLI::App* cmd) {
        cmd->add_option("--periode", periode, "Pay month, YYYY-MM or DD/MM/YYYY")->required();
        cmd->add_option("--nii", nii, "Lecturer NII")->required();
        cmd->add_option("--sks", sks, "SKS taught in the period")->required()->check(CLI::NonNegativeNumber);
        cmd->add_option("--pajak", pajak, "Tax on the teaching honorarium");
        cmd->add_option("--pot-kop", pot_kop, "Cooperative deduction");
        cmd->add_option("--arisan", arisan, "Arisan deduction");
        cmd->add_option("--pot-lain", pot_lain, "Other deductions");
    }

    std::string json() const {
        return nlohmann::json{{"periode", periode},
                              {"nii", nii},
                              {"sks_mgjr", sks},
                              {"pajak", money_arg(pajak, "--pajak")},
                              {"pot_kop", money_arg(pot_kop, "--pot-kop")},
                              {"arisan", money_arg(arisan, "--arisan")},
                              {"pot_lain", money_arg(pot_lain, "--pot-lain")}}
            .dump();
    }
};

const std::vector<std::string> kMasterTables = {"golongan", "jfa", "jstr", "jkhs", "pendidikan"};
const std::vector<std::string> kAllTables = {"golongan", "jfa", "jstr", "jkhs", "pendidikan", "dosen", "gaji"};

struct MasterFields {
    const char* id;
    const char* nama;
    const char* tarif;
};

MasterFields master_fields(const std::string& table) {
    if (table == "golongan") return {"gol_id", "nama_gol", "gapok"};
    if (table == "jfa") return {"jfa_id", "nama_jfa", "tunj_fa"};
    if (table == "jstr") return {"jstr_id", "nama_jstr", "tunj_str"};
    if (table == "jkhs") return {"jkhs_id", "nama_jkhs", "tunj_khs"};
    return {"pend_id", "nama_pend", "tarif_mgjr"};
}

int serve(payroll_db* db, const std::string& bind) {
    std::string host = "127.0.0.1";
    int port = 8080;
    if (auto colon = bind.rfind(':'); colon != std::string::npos) {
        host = bind.substr(0, colon);
        try {
            port = std::stoi(bind.substr(colon + 1));
        } catch (const std::exception&) {
            usage_error("--bind expects host:port");
        }
    } else if (!bind.empty()) {
        host = bind;
    }

    // Block the shutdown signals before any server thread exists so only
    // sigwait below sees them.
    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);

    payroll_server* server = nullptr;
    int bound = 0;
    check(payroll_server_start(db, host.c_str(), port, &server, &bound));
    std::cerr << "payroll: listening on " << host << ":" << bound << std::endl;
    int sig = 0;
    sigwait(&signals, &sig);
    payroll_server_stop(server);
    payroll_server_free(server);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Faculty payroll store, slips and reports"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--db", g.db_path, "Store document path")->envname("PAYROLL_DB");
    app.add_flag("--paper-compat", g.paper_compat, "Report net salary as gross, like the legacy Form Gaji");

    bool force = false;
    auto* init = app.add_subcommand("init", "Create an empty store document");
    init->add_flag("--force", force, "Overwrite an existing document");

    bool reference_set = false;
    auto* seed = app.add_subcommand("seed", "Load the reference dataset");
    seed->add_flag("--paper", reference_set, "Reference lecturers and master rows")->required();
    seed->add_flag("--force", force, "Replace existing contents");

    std::string table, nama, tarif, key;
    std::int64_t id = 0;
    auto* master = app.add_subcommand("master", "Master tables: golongan, jfa, jstr, jkhs, pendidikan");
    master->require_subcommand(1);
    auto table_opt = [&](CLI::App* c) {
        c->add_option("--table", table)->required()->check(CLI::IsMember(kMasterTables));
    };
    auto* m_add = master->add_subcommand("add", "Insert a row");
    table_opt(m_add);
    m_add->add_option("--nama", nama)->required();
    m_add->add_option("--tarif", tarif)->required();
    auto* m_list = master->add_subcommand("list", "List rows");
    table_opt(m_list);
    auto* m_update = master->add_subcommand("update", "Replace a row's name and tariff");
    table_opt(m_update);
    m_update->add_option("--id", id)->required();
    m_update->add_option("--nama", nama)->required();
    m_update->add_option("--tarif", tarif)->required();
    auto* m_delete = master->add_subcommand("delete", "Delete an unreferenced row");
    table_opt(m_delete);
    m_delete->add_option("--id", id)->required();

    std::string nii;
    std::int64_t gol = 0, jfa = 0, jstr = 0, jkhs = 0, pend = 0;
    auto* dosen = app.add_subcommand("dosen", "Lecturers");
    dosen->require_subcommand(1);
    auto dosen_fields = [&](CLI::App* c) {
        c->add_option("--nii", nii)->required();
        c->add_option("--nama", nama)->required();
        c->add_option("--golongan", gol)->required();
        c->add_option("--jab-fa", jfa)->required();
        c->add_option("--jab-str", jstr)->required();
        c->add_option("--jab-khs", jkhs)->required();
        c->add_option("--pendidikan", pend)->required();
    };
    auto* d_add = dosen->add_subcommand("add", "Insert a lecturer");
    dosen_fields(d_add);
    auto* d_update = dosen->add_subcommand("update", "Replace a lecturer");
    dosen_fields(d_update);
    auto* d_list = dosen->add_subcommand("list", "List lecturers");
    auto* d_delete = dosen->add_subcommand("delete", "Delete a lecturer without slips");
    d_delete->add_option("--nii", nii)->required();
    auto* d_profil = dosen->add_subcommand("profil", "Resolved tariffs for a lecturer");
    d_profil->add_option("--nii", nii)->required();

    SlipArgs slip_args;
    std::string periode;
    auto* slip = app.add_subcommand("slip", "Pay slips");
    slip->require_subcommand(1);
    auto* s_create = slip->add_subcommand("create", "Compute and store a slip, then print it");
    slip_args.attach(s_create);
    auto* s_preview = slip->add_subcommand("preview", "Compute a slip without storing it");
    slip_args.attach(s_preview);
    auto* s_list = slip->add_subcommand("list", "List slips");
    s_list->add_option("--periode", periode);
    auto* s_delete = slip->add_subcommand("delete", "Delete a slip");
    s_delete->add_option("--no-slip", id)->required();

    std::string report_name, format = "text", no_slip;
    auto* report = app.add_subcommand("report", "Print a report");
    report->add_option("name", report_name)
        ->required()
        ->check(CLI::IsMember({"slip_gaji", "rekap_periode", "rekap_honor", "daftar_dosen", "daftar_master"}));
    report->add_option("--periode", periode);
    report->add_option("--no-slip", no_slip);
    report->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));

    std::vector<std::string> tables, csv_paths;
    auto* import = app.add_subcommand("import", "Load CSV files; all or nothing");
    import->add_option("--table", tables)->required()->check(CLI::IsMember(kAllTables));
    import->add_option("--csv", csv_paths)->required();
    std::string csv_path;
    auto* exp = app.add_subcommand("export", "Write a table as CSV");
    exp->add_option("--table", table)->required()->check(CLI::IsMember(kAllTables));
    exp->add_option("--csv", csv_path, "Output path, - for stdout")->required();

    std::string bind = "127.0.0.1:8080";
    auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
    serve_cmd->add_option("--bind", bind, "host:port")->envname("PAYROLL_BIND");

    app.add_subcommand("schema", "Print the schema manifest");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        for (char& c : msg)
            if (c == '\n') c = ' ';
        std::cerr << "payroll: usage: " << msg << "\n";
        return 1;
    }

    try {
        char* out = nullptr;
        if (init->parsed()) {
            if (g.db_path.empty()) usage_error("no store given (use --db or PAYROLL_DB)");
            check(payroll_init(g.db_path.c_str(), force));
        } else if (seed->parsed()) {
            Db db = open_db(g, true, true);
            check(payroll_seed_reference(db.get(), force));
        } else if (master->parsed()) {
            MasterFields f = master_fields(table);
            if (m_list->parsed()) {
                Db db = open_db(g, false);
                check(payroll_list(db.get(), table.c_str(), nullptr, &out));
                std::cout << pretty(take(out));
            } else if (m_delete->parsed()) {
                Db db = open_db(g, true);
                check(payroll_delete(db.get(), table.c_str(), std::to_string(id).c_str()));
            } else {
                nlohmann::json row{{f.nama, nama}, {f.tarif, money_arg(tarif, "--tarif")}};
                Db db = open_db(g, true);
                if (m_add->parsed())
                    check(payroll_create(db.get(), table.c_str(), row.dump().c_str(), &out));
                else
                    check(payroll_update(db.get(), table.c_str(), std::to_string(id).c_str(), row.dump().c_str(), &out));
                std::cout << pretty(take(out));
            }
        } else if (dosen->parsed()) {
            if (d_list->parsed()) {
                Db db = open_db(g, false);
                check(payroll_list(db.get(), "dosen", nullptr, &out));
                std::cout << pretty(take(out));
            } else if (d_profil->parsed()) {
                Db db = open_db(g, false);
                check(payroll_profil(db.get(), nii.c_str(), &out));
                std::cout << pretty(take(out));
            } else if (d_delete->parsed()) {
                Db db = open_db(g, true);
                check(payroll_delete(db.get(), "dosen", nii.c_str()));
            } else {
                nlohmann::json row{{"nii", nii},    {"nama_dosen", nama}, {"golongan", gol},    {"jab_fa", jfa},
                                   {"jab_str", jstr}, {"jab_khs", jkhs},  {"pendidikan", pend}};
                Db db = open_db(g, true);
                if (d_add->parsed())
                    check(payroll_create(db.get(), "dosen", row.dump().c_str(), &out));
                else
                    check(payroll_update(db.get(), "dosen", nii.c_str(), row.dump().c_str(), &out));
                std::cout << pretty(take(out));
            }
        } else if (slip->parsed()) {
            if (s_create->parsed()) {
                std::string input = slip_args.json();
                Db db = open_db(g, true);
                check(payroll_slip_create(db.get(), input.c_str(), &out));
                std::cout << print_slip(db.get(), take(out));
            } else if (s_preview->parsed()) {
                std::string input = slip_args.json();
                Db db = open_db(g, false);
                check(payroll_slip_preview(db.get(), input.c_str(), &out));
                std::cout << pretty(take(out));
            } else if (s_list->parsed()) {
                Db db = open_db(g, false);
                check(payroll_list(db.get(), "gaji", periode.empty() ? nullptr : periode.c_str(), &out));
                std::cout << pretty(take(out));
            } else {
                Db db = open_db(g, true);
                check(payroll_delete(db.get(), "gaji", std::to_string(id).c_str()));
            }
        } else if (report->parsed()) {
            Db db = open_db(g, false);
            check(payroll_report(db.get(), report_name.c_str(), periode.empty() ? nullptr : periode.c_str(),
                                 no_slip.empty() ? nullptr : no_slip.c_str(),
                                 format == "csv" ? PAYROLL_FORMAT_CSV : PAYROLL_FORMAT_TEXT, &out));
            std::cout << take(out);
        } else if (import->parsed()) {
            if (tables.size() != csv_paths.size()) usage_error("each --table needs exactly one --csv");
            std::vector<std::string> texts;
            for (const auto& p : csv_paths) texts.push_back(read_file(p));
            std::vector<const char*> tp, cp;
            for (std::size_t i = 0; i < tables.size(); ++i) {
                tp.push_back(tables[i].c_str());
                cp.push_back(texts[i].c_str());
            }
            Db db = open_db(g, true);
            payroll_status s = payroll_import_csv(db.get(), tp.size(), tp.data(), cp.data());
            if (s != PAYROLL_OK) {
                std::string msg = std::string(payroll_status_name(s)) + ": import rejected";
                auto details = nlohmann::json::parse(payroll_last_error_details());
                if (details.empty()) msg += std::string(": ") + payroll_last_error();
                for (const auto& line : details) msg += "; " + line.get<std::string>();
                throw Failure{s, msg};
            }
        } else if (exp->parsed()) {
            Db db = open_db(g, false);
            check(payroll_export_csv(db.get(), table.c_str(), &out));
            write_file(csv_path, take(out));
        } else if (serve_cmd->parsed()) {
            Db db = open_db(g, true);
            return serve(db.get(), bind);
        } else {
            check(payroll_schema(&out));
            std::cout << take(out) << "\n";
        }
        return 0;
    } catch (const Failure& f) {
        std::cerr << "payroll: " << f.message << "\n";
        return exit_code(f.status);
    }
}
