#include "payroll/http_server.hpp"

#include "payroll/error.hpp"

#include <httplib.h>

#include <array>

namespace payroll {

using nlohmann::json;

namespace {

constexpr std::array<const char*, 5> kMasterRoutes = {"golongan", "jfa", "jstr", "jkhs", "pendidikan"};

json error_body(int status, ErrorCode code, const std::string& message, const std::vector<std::string>& details) {
    std::string_view name = code == ErrorCode::usage ? "validation" : to_string(code);
    if (status == 500) name = "internal";
    json body{{"status", status}, {"code", name}, {"message", message}};
    if (!details.empty()) body["details"] = details;
    return body;
}

void send_json(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

json parse_body(const httplib::Request& req) {
    json body = json::parse(req.body, nullptr, false);
    if (body.is_discarded()) fail(ErrorCode::validation, "request body is not valid JSON");
    return body;
}

std::optional<std::string> query(const httplib::Request& req, const char* name) {
    if (!req.has_param(name)) return std::nullopt;
    return req.get_param_value(name);
}

// Runs a handler and converts any failure into the error envelope.
template <typename Fn>
httplib::Server::Handler guarded(Fn fn) {
    return [fn](const httplib::Request& req, httplib::Response& res) {
        try {
            fn(req, res);
        } catch (const Error& e) {
            int status = http_status(e.code());
            send_json(res, status, error_body(status, e.code(), e.what(), e.details()));
        } catch (const std::exception& e) {
            send_json(res, 500, error_body(500, ErrorCode::internal, e.what(), {}));
        }
    };
}

}  // namespace

int http_status(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::validation:
        case ErrorCode::usage: return 400;
        case ErrorCode::not_found: return 404;
        case ErrorCode::conflict:
        case ErrorCode::referential_conflict: return 409;
        case ErrorCode::io:
        case ErrorCode::internal: return 500;
    }
    return 500;
}

struct HttpServer::Impl {
    Service& service;
    httplib::Server server;

    explicit Impl(Service& s) : service(s) { routes(); }

    void table_routes(const std::string& route, const std::string& table, const std::string& key_pattern) {
        std::string base = "/api/" + route;
        std::string item = base + "/(" + key_pattern + ")";
        server.Get(base, guarded([this, table](const httplib::Request& req, httplib::Response& res) {
            send_json(res, 200, service.list(table, query(req, "periode")));
        }));
        server.Post(base, guarded([this, table](const httplib::Request& req, httplib::Response& res) {
            send_json(res, 201, service.create(table, parse_body(req)));
        }));
        server.Get(item, guarded([this, table](const httplib::Request& req, httplib::Response& res) {
            send_json(res, 200, service.get(table, req.matches[1].str()));
        }));
        server.Put(item, guarded([this, table](const httplib::Request& req, httplib::Response& res) {
            send_json(res, 200, service.update(table, req.matches[1].str(), parse_body(req)));
        }));
        server.Delete(item, guarded([this, table](const httplib::Request& req, httplib::Response& res) {
            service.remove(table, req.matches[1].str());
            res.status = 204;
        }));
    }

    void routes() {
        server.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
            send_json(res, 200, json{{"status", "ok"}});
        });
        for (const char* t : kMasterRoutes) table_routes(t, t, "[^/]+");
        server.Get("/api/dosen/([^/]+)/profil", guarded([this](const httplib::Request& req, httplib::Response& res) {
            send_json(res, 200, service.profil(req.matches[1].str()));
        }));
        table_routes("dosen", "dosen", "[^/]+");
        // Registered before the generic slip routes so "preview" is not taken for a key.
        server.Post("/api/slips/preview", guarded([this](const httplib::Request& req, httplib::Response& res) {
            send_json(res, 200, service.preview_slip(parse_body(req)));
        }));
        table_routes("slips", "gaji", "[^/]+");
        server.Get("/api/reports/([^/]+)", guarded([this](const httplib::Request& req, httplib::Response& res) {
            std::string format = query(req, "format").value_or("text");
            ReportFormat fmt = ReportFormat::text;
            if (format == "csv") {
                fmt = ReportFormat::csv;
            } else if (format != "text") {
                fail(ErrorCode::validation, "format must be text or csv");
            }
            std::string body =
                service.report(req.matches[1].str(), query(req, "periode"), query(req, "no_slip"), fmt);
            res.status = 200;
            res.set_content(body, fmt == ReportFormat::csv ? "text/csv; charset=utf-8" : "text/plain; charset=utf-8");
        }));
        server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
            if (!res.body.empty()) return;
            ErrorCode code = res.status == 404 ? ErrorCode::not_found : ErrorCode::validation;
            if (res.status >= 500) code = ErrorCode::internal;
            std::string msg = res.status == 404 ? "no such endpoint" : "request rejected";
            res.set_content(error_body(res.status, code, msg, {}).dump(), "application/json");
        });
    }
};

HttpServer::HttpServer(Service& service) : impl_(std::make_unique<Impl>(service)) {}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
    int bound = port == 0 ? impl_->server.bind_to_any_port(host) : (impl_->server.bind_to_port(host, port) ? port : -1);
    if (bound < 0) fail(ErrorCode::io, "cannot bind " + host + ":" + std::to_string(port));
    return bound;
}

void HttpServer::run() { impl_->server.listen_after_bind(); }

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

void HttpServer::stop() {
    if (impl_) impl_->server.stop();
}

}  // namespace payroll
