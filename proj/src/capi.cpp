#include "payroll/payroll.h"

#include "payroll/error.hpp"
#include "payroll/http_server.hpp"
#include "payroll/schema.hpp"
#include "payroll/service.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <thread>

struct payroll_db {
    std::unique_ptr<payroll::Service> service;
};

struct payroll_server {
    std::unique_ptr<payroll::HttpServer> http;
    std::thread worker;
};

namespace {

using payroll::ErrorCode;
using nlohmann::json;

thread_local std::string t_error;
thread_local std::string t_details = "[]";

payroll_status to_status(ErrorCode code) {
    switch (code) {
        case ErrorCode::validation: return PAYROLL_E_VALIDATION;
        case ErrorCode::not_found: return PAYROLL_E_NOT_FOUND;
        case ErrorCode::conflict: return PAYROLL_E_CONFLICT;
        case ErrorCode::referential_conflict: return PAYROLL_E_REFERENTIAL;
        case ErrorCode::io: return PAYROLL_E_IO;
        case ErrorCode::usage: return PAYROLL_E_USAGE;
        case ErrorCode::internal: return PAYROLL_E_INTERNAL;
    }
    return PAYROLL_E_INTERNAL;
}

template <typename Fn>
payroll_status guard(Fn&& fn) {
    t_error.clear();
    t_details = "[]";
    try {
        fn();
        return PAYROLL_OK;
    } catch (const payroll::Error& e) {
        t_error = e.what();
        t_details = json(e.details()).dump();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        t_error = "out of memory";
        return PAYROLL_E_INTERNAL;
    } catch (const std::exception& e) {
        t_error = e.what();
        return PAYROLL_E_INTERNAL;
    }
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

void need(const void* p, const char* what) {
    if (!p) payroll::fail(ErrorCode::usage, std::string(what) + " must not be NULL");
}

std::optional<std::string> opt(const char* s) {
    if (!s) return std::nullopt;
    return std::string(s);
}

json parse(const char* text) {
    need(text, "json");
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) payroll::fail(ErrorCode::validation, "input is not valid JSON");
    return j;
}

void put(char** out, const std::string& s) {
    need(out, "output pointer");
    *out = dup(s);
}

}  // namespace

extern "C" {

const char* payroll_version(void) { return "1.0.0"; }
const char* payroll_last_error(void) { return t_error.c_str(); }
const char* payroll_last_error_details(void) { return t_details.c_str(); }
void payroll_free(char* p) { std::free(p); }

const char* payroll_status_name(payroll_status status) {
    switch (status) {
        case PAYROLL_OK: return "ok";
        case PAYROLL_E_VALIDATION: return "validation";
        case PAYROLL_E_NOT_FOUND: return "not_found";
        case PAYROLL_E_CONFLICT: return "conflict";
        case PAYROLL_E_REFERENTIAL: return "referential_conflict";
        case PAYROLL_E_IO: return "io";
        case PAYROLL_E_USAGE: return "usage";
        case PAYROLL_E_INTERNAL: return "internal";
    }
    return "unknown";
}

payroll_status payroll_parse_money(const char* text, int64_t* out_rupiah) {
    return guard([&] {
        need(text, "text");
        need(out_rupiah, "out_rupiah");
        *out_rupiah = payroll::parse_money(text).rupiah();
    });
}

payroll_status payroll_format_money(int64_t rupiah, char** out_text) {
    return guard([&] { put(out_text, payroll::format_money(payroll::Money(rupiah))); });
}

payroll_status payroll_canonical_periode(const char* text, char** out_periode) {
    return guard([&] {
        need(text, "text");
        put(out_periode, payroll::canonical_periode(text).str());
    });
}

payroll_status payroll_init(const char* path, int force) {
    return guard([&] {
        need(path, "path");
        payroll::init_document(path, force != 0);
    });
}

payroll_status payroll_open(const char* path, unsigned flags, payroll_db** out_db) {
    return guard([&] {
        need(out_db, "out_db");
        *out_db = nullptr;
        payroll::Service::Options o;
        if (path) o.path = path;
        o.create_if_missing = (flags & PAYROLL_OPEN_CREATE) != 0;
        o.exclusive_lock = (flags & PAYROLL_OPEN_LOCK) != 0;
        o.mode = (flags & PAYROLL_OPEN_PAPER_COMPAT) ? payroll::engine::NetMode::paper_compat
                                                      : payroll::engine::NetMode::standard;
        auto db = std::make_unique<payroll_db>();
        db->service = std::make_unique<payroll::Service>(std::move(o));
        *out_db = db.release();
    });
}

void payroll_close(payroll_db* db) { delete db; }

payroll_status payroll_seed_reference(payroll_db* db, int force) {
    return guard([&] {
        need(db, "db");
        db->service->seed_reference_data(force != 0);
    });
}

payroll_status payroll_list(payroll_db* db, const char* table, const char* periode, char** out_json) {
    return guard([&] {
        need(db, "db");
        need(table, "table");
        put(out_json, db->service->list(table, opt(periode)).dump());
    });
}

payroll_status payroll_get(payroll_db* db, const char* table, const char* key, char** out_json) {
    return guard([&] {
        need(db, "db");
        need(table, "table");
        need(key, "key");
        put(out_json, db->service->get(table, key).dump());
    });
}

payroll_status payroll_create(payroll_db* db, const char* table, const char* row_json, char** out_json) {
    return guard([&] {
        need(db, "db");
        need(table, "table");
        json row = db->service->create(table, parse(row_json));
        if (out_json) *out_json = dup(row.dump());
    });
}

payroll_status payroll_update(payroll_db* db, const char* table, const char* key, const char* row_json,
                              char** out_json) {
    return guard([&] {
        need(db, "db");
        need(table, "table");
        need(key, "key");
        json row = db->service->update(table, key, parse(row_json));
        if (out_json) *out_json = dup(row.dump());
    });
}

payroll_status payroll_delete(payroll_db* db, const char* table, const char* key) {
    return guard([&] {
        need(db, "db");
        need(table, "table");
        need(key, "key");
        db->service->remove(table, key);
    });
}

payroll_status payroll_profil(payroll_db* db, const char* nii, char** out_json) {
    return guard([&] {
        need(db, "db");
        need(nii, "nii");
        put(out_json, db->service->profil(nii).dump());
    });
}

payroll_status payroll_slip_create(payroll_db* db, const char* input_json, char** out_json) {
    return guard([&] {
        need(db, "db");
        json slip = db->service->create_slip(parse(input_json));
        if (out_json) *out_json = dup(slip.dump());
    });
}

payroll_status payroll_slip_preview(payroll_db* db, const char* input_json, char** out_json) {
    return guard([&] {
        need(db, "db");
        put(out_json, db->service->preview_slip(parse(input_json)).dump());
    });
}

payroll_status payroll_report(payroll_db* db, const char* name, const char* periode, const char* no_slip,
                              payroll_format format, char** out_text) {
    return guard([&] {
        need(db, "db");
        need(name, "name");
        auto fmt = format == PAYROLL_FORMAT_CSV ? payroll::ReportFormat::csv : payroll::ReportFormat::text;
        put(out_text, db->service->report(name, opt(periode), opt(no_slip), fmt));
    });
}

payroll_status payroll_export_csv(payroll_db* db, const char* table, char** out_csv) {
    return guard([&] {
        need(db, "db");
        need(table, "table");
        put(out_csv, db->service->export_csv(table));
    });
}

payroll_status payroll_import_csv(payroll_db* db, size_t count, const char* const* tables,
                                  const char* const* csv_texts) {
    return guard([&] {
        need(db, "db");
        std::vector<payroll::table_io::ImportFile> files;
        for (size_t i = 0; i < count; ++i) {
            need(tables[i], "table");
            need(csv_texts[i], "csv text");
            files.push_back({tables[i], csv_texts[i]});
        }
        db->service->import_csv(files);
    });
}

payroll_status payroll_document(payroll_db* db, char** out_json) {
    return guard([&] {
        need(db, "db");
        put(out_json, db->service->document());
    });
}

payroll_status payroll_schema(char** out_json) {
    return guard([&] {
        json tables = json::array();
        for (const auto& t : payroll::schema::tables()) {
            json fields = json::array();
            for (const auto& f : t.fields) {
                json jf{{"name", f.name},
                        {"original_name", f.original_name},
                        {"type", payroll::schema::to_string(f.type)},
                        {"role", payroll::schema::to_string(f.role)}};
                jf["width"] = f.width == 0 ? json(nullptr) : json(f.width);
                if (!f.references.empty()) jf["references"] = f.references;
                fields.push_back(jf);
            }
            tables.push_back({{"name", t.name}, {"original_name", t.original_name}, {"fields", fields}});
        }
        put(out_json, json{{"schema_version", 1}, {"tables", tables}}.dump(2));
    });
}

payroll_status payroll_server_start(payroll_db* db, const char* host, int port, payroll_server** out_server,
                                    int* out_port) {
    return guard([&] {
        need(db, "db");
        need(out_server, "out_server");
        *out_server = nullptr;
        auto srv = std::make_unique<payroll_server>();
        srv->http = std::make_unique<payroll::HttpServer>(*db->service);
        int bound = srv->http->bind(host ? host : "127.0.0.1", port);
        if (out_port) *out_port = bound;
        payroll::HttpServer* http = srv->http.get();
        srv->worker = std::thread([http] { http->run(); });
        http->wait_until_ready();
        *out_server = srv.release();
    });
}

payroll_status payroll_server_wait(payroll_server* server) {
    return guard([&] {
        need(server, "server");
        if (server->worker.joinable()) server->worker.join();
    });
}

void payroll_server_stop(payroll_server* server) {
    if (server && server->http) server->http->stop();
}

void payroll_server_free(payroll_server* server) {
    if (!server) return;
    payroll_server_stop(server);
    if (server->worker.joinable()) server->worker.join();
    delete server;
}

}  // extern "C"
