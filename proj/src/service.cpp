#include "payroll/service.hpp"

#include "payroll/error.hpp"
#include "payroll/json_codec.hpp"
#include "payroll/persistence.hpp"
#include "payroll/schema.hpp"
#include "payroll/seed.hpp"

#include <charconv>
#include <mutex>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

namespace payroll {

using nlohmann::json;

namespace {

Id parse_key(std::string_view key) {
    Id id = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), id);
    if (key.empty() || ec != std::errc{} || ptr != key.data() + key.size() || id < 1)
        fail(ErrorCode::validation, "invalid id \"" + std::string(key) + "\"");
    return id;
}

void check_table(std::string_view table) { schema::table(table); }

int acquire_lock(const std::filesystem::path& path) {
    std::string lock_path = path.string() + ".lock";
    int fd = ::open(lock_path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd < 0) fail(ErrorCode::io, "cannot open lock file " + lock_path);
    if (::flock(fd, LOCK_EX | LOCK_NB) != 0) {
        ::close(fd);
        fail(ErrorCode::io, "store " + path.string() + " is locked by another process");
    }
    return fd;
}

}  // namespace

void init_document(const std::filesystem::path& path, bool force) {
    if (!force && std::filesystem::exists(path))
        fail(ErrorCode::conflict, path.string() + " already exists (use --force to overwrite)");
    persist::save(Store{}, path);
}

Service::Service(Options options) : options_(std::move(options)) {
    if (!options_.path) return;
    if (options_.exclusive_lock) lock_fd_ = acquire_lock(*options_.path);
    try {
        if (std::filesystem::exists(*options_.path)) {
            store_ = persist::load(*options_.path);
        } else if (!options_.create_if_missing) {
            fail(ErrorCode::io, "store document " + options_.path->string() + " does not exist (run init first)");
        }
    } catch (...) {
        if (lock_fd_ >= 0) ::close(lock_fd_);
        throw;
    }
}

Service::Service(Store initial, engine::NetMode mode) : store_(std::move(initial)) { options_.mode = mode; }

Service::~Service() {
    if (lock_fd_ >= 0) ::close(lock_fd_);
}

void Service::persist(const Store& next) const {
    if (options_.path) persist::save(next, *options_.path);
}

template <typename Fn>
auto Service::mutate(Fn&& fn) {
    std::unique_lock lock(mu_);
    Store next = store_;
    if constexpr (std::is_void_v<std::invoke_result_t<Fn, Store&>>) {
        fn(next);
        persist(next);
        store_ = std::move(next);
    } else {
        auto result = fn(next);
        persist(next);
        store_ = std::move(next);
        return result;
    }
}

json Service::list(std::string_view table, const std::optional<std::string>& periode) const {
    check_table(table);
    std::shared_lock lock(mu_);
    json out = json::array();
    if (auto kind = schema::master_kind(table)) {
        for (const auto& [id, row] : store_.masters(*kind)) out.push_back(codec::encode(*kind, row));
    } else if (table == "dosen") {
        for (const auto& [nii, d] : store_.dosen()) out.push_back(codec::encode(d));
    } else {
        std::optional<Periode> p;
        if (periode && !periode->empty()) p = canonical_periode(*periode);
        for (const auto& s : store_.list_slips(p)) out.push_back(codec::encode(s));
    }
    return out;
}

json Service::get(std::string_view table, std::string_view key) const {
    check_table(table);
    std::shared_lock lock(mu_);
    if (auto kind = schema::master_kind(table)) return codec::encode(*kind, store_.get_master(*kind, parse_key(key)));
    if (table == "dosen") return codec::encode(store_.get_dosen(key));
    return codec::encode(store_.get_slip(parse_key(key)));
}

json Service::create(std::string_view table, const json& body) {
    check_table(table);
    if (table == "gaji") return create_slip(body);
    if (auto kind = schema::master_kind(table)) {
        MasterRow row = codec::decode_master(*kind, body, false);
        if (row.id != 0)
            fail(ErrorCode::validation, std::string(schema::master_info(*kind).id_field) + " is assigned by the store");
        return mutate([&](Store& s) {
            Id id = s.insert_master(*kind, row.nama, row.tarif);
            return codec::encode(*kind, s.get_master(*kind, id));
        });
    }
    Dosen d = codec::decode_dosen(body);
    return mutate([&](Store& s) {
        if (s.dosen().contains(d.nii)) fail(ErrorCode::conflict, "dosen " + d.nii + " already exists");
        s.upsert_dosen(d);
        return codec::encode(s.get_dosen(d.nii));
    });
}

json Service::update(std::string_view table, std::string_view key, const json& body) {
    check_table(table);
    if (auto kind = schema::master_kind(table)) {
        Id id = parse_key(key);
        MasterRow row = codec::decode_master(*kind, body, false);
        if (row.id != 0 && row.id != id)
            fail(ErrorCode::validation, std::string(schema::master_info(*kind).id_field) + " does not match the URL");
        return mutate([&](Store& s) {
            s.update_master(*kind, id, row.nama, row.tarif);
            return codec::encode(*kind, s.get_master(*kind, id));
        });
    }
    if (table == "dosen") {
        json patched = body;
        if (patched.is_object() && !patched.contains("nii")) patched["nii"] = key;
        Dosen d = codec::decode_dosen(patched);
        if (d.nii != key) fail(ErrorCode::validation, "nii does not match the URL");
        return mutate([&](Store& s) {
            s.get_dosen(key);
            s.upsert_dosen(d);
            return codec::encode(s.get_dosen(d.nii));
        });
    }
    fail(ErrorCode::validation, "slips cannot be edited; delete and create a new one");
}

void Service::remove(std::string_view table, std::string_view key) {
    check_table(table);
    if (auto kind = schema::master_kind(table)) {
        Id id = parse_key(key);
        mutate([&](Store& s) { s.delete_master(*kind, id); });
    } else if (table == "dosen") {
        mutate([&](Store& s) { s.delete_dosen(key); });
    } else {
        Id id = parse_key(key);
        mutate([&](Store& s) { s.delete_slip(id); });
    }
}

json Service::profil(std::string_view nii) const {
    std::shared_lock lock(mu_);
    return codec::encode(engine::resolve_profil(store_, nii));
}

json Service::create_slip(const json& input) {
    engine::GajiInput in = codec::decode_gaji_input(input);
    return mutate([&](Store& s) { return codec::encode(engine::create_slip(s, in)); });
}

json Service::preview_slip(const json& input) const {
    engine::GajiInput in = codec::decode_gaji_input(input);
    std::shared_lock lock(mu_);
    return codec::encode(engine::preview(store_, in, options_.mode));
}

std::string Service::report(report::ReportName name, const report::Params& params, ReportFormat format) const {
    report::Params p = params;
    p.mode = options_.mode;
    std::shared_lock lock(mu_);
    report::Report r = report::build(store_, name, p);
    return format == ReportFormat::csv ? report::to_csv(r) : report::to_text(r);
}

std::string Service::report(std::string_view name, const std::optional<std::string>& periode,
                            const std::optional<std::string>& no_slip, ReportFormat format) const {
    auto which = report::parse_name(name);
    if (!which) fail(ErrorCode::not_found, "unknown report \"" + std::string(name) + "\"");
    report::Params params;
    if (periode && !periode->empty()) params.periode = canonical_periode(*periode);
    if (no_slip && !no_slip->empty()) params.no_slip = parse_key(*no_slip);
    return report(*which, params, format);
}

std::string Service::export_csv(std::string_view table) const {
    check_table(table);
    std::shared_lock lock(mu_);
    return table_io::export_csv(store_, table);
}

void Service::import_csv(const std::vector<table_io::ImportFile>& files) {
    mutate([&](Store& s) { table_io::import_csv(s, files); });
}

void Service::seed_reference_data(bool force) {
    mutate([&](Store& s) {
        if (force) s = Store{};
        payroll::seed_reference_data(s);
    });
}

std::string Service::document() const {
    std::shared_lock lock(mu_);
    return persist::dump(store_);
}

Store Service::snapshot() const {
    std::shared_lock lock(mu_);
    return store_;
}

}  // namespace payroll
