#pragma once

#include "payroll/engine.hpp"
#include "payroll/reports.hpp"
#include "payroll/store.hpp"
#include "payroll/table_io.hpp"

#include <json.hpp>

#include <filesystem>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

namespace payroll {

enum class ReportFormat { text, csv };

/// One store behind a single-writer / multi-reader lock, with optional
/// write-through to a document on disk. Every mutation runs against a copy
/// which replaces the live store only after it has been persisted, so a
/// failed call leaves both memory and disk untouched.
///
/// The HTTP handlers, the C API and therefore the CLI all go through this
/// class; rows cross it as JSON using the persistence field names.
class Service {
public:
    struct Options {
        std::optional<std::filesystem::path> path;  // none: in-memory only
        bool create_if_missing = false;
        bool exclusive_lock = false;  // flock "<path>.lock" for the lifetime of the service
        engine::NetMode mode = engine::NetMode::standard;
    };

    explicit Service(Options options);
    Service(Store initial, engine::NetMode mode = engine::NetMode::standard);
    ~Service();
    Service(const Service&) = delete;
    Service& operator=(const Service&) = delete;

    engine::NetMode mode() const { return options_.mode; }

    // Tables: golongan, jfa, jstr, jkhs, pendidikan, dosen, gaji. Keys are
    // decimal ids, or the NII for dosen.
    nlohmann::json list(std::string_view table, const std::optional<std::string>& periode = std::nullopt) const;
    nlohmann::json get(std::string_view table, std::string_view key) const;
    nlohmann::json create(std::string_view table, const nlohmann::json& body);
    nlohmann::json update(std::string_view table, std::string_view key, const nlohmann::json& body);
    void remove(std::string_view table, std::string_view key);

    nlohmann::json profil(std::string_view nii) const;
    /// Body holds only input fields; derived amounts are computed here.
    nlohmann::json create_slip(const nlohmann::json& input);
    nlohmann::json preview_slip(const nlohmann::json& input) const;

    std::string report(report::ReportName name, const report::Params& params, ReportFormat format) const;
    /// `params.mode` is overridden by the service's mode.
    std::string report(std::string_view name, const std::optional<std::string>& periode,
                       const std::optional<std::string>& no_slip, ReportFormat format) const;

    std::string export_csv(std::string_view table) const;
    void import_csv(const std::vector<table_io::ImportFile>& files);

    /// With `force`, replaces whatever the store holds.
    void seed_reference_data(bool force);

    std::string document() const;
    Store snapshot() const;

private:
    template <typename Fn>
    auto mutate(Fn&& fn);
    void persist(const Store& next) const;

    Options options_;
    mutable std::shared_mutex mu_;
    Store store_;
    int lock_fd_ = -1;
};

/// Creates a fresh empty document at `path`; refuses to overwrite unless `force`.
void init_document(const std::filesystem::path& path, bool force);

}  // namespace payroll
