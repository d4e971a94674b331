#pragma once

#include "payroll/error.hpp"
#include "payroll/service.hpp"

#include <memory>
#include <string>

namespace payroll {

/// HTTP status for each error code: validation/usage 400, not_found 404,
/// conflict and referential_conflict 409, everything else 500.
int http_status(ErrorCode code) noexcept;

/// JSON REST facade over a Service. Routes:
///   GET/POST            /api/{golongan|jfa|jstr|jkhs|pendidikan}
///   GET/PUT/DELETE      /api/{master}/{id}
///   GET/POST            /api/dosen
///   GET/PUT/DELETE      /api/dosen/{nii}
///   GET                 /api/dosen/{nii}/profil
///   POST                /api/slips, /api/slips/preview
///   GET                 /api/slips?periode=, /api/slips/{no_slip}
///   DELETE              /api/slips/{no_slip}
///   GET                 /api/reports/{name}?periode=&no_slip=&format=text|csv
///   GET                 /api/health
class HttpServer {
public:
    explicit HttpServer(Service& service);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Port 0 picks a free port. Returns the bound port.
    int bind(const std::string& host, int port);
    /// Blocks until stop().
    void run();
    /// Blocks until a concurrent run() is accepting connections.
    void wait_until_ready() const;
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace payroll
