#pragma once

#include "payroll/store.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace payroll::persist {

inline constexpr int kSchemaVersion = 1;

/// Canonical document: schema_version, counters, then the seven arrays in
/// ascending key order.
nlohmann::json to_document(const Store& store);
/// Re-validates every invariant; never yields a partially valid store.
Store from_document(const nlohmann::json& doc);

std::string dump(const Store& store);
Store parse(std::string_view text);

/// Writes to a sibling temp file and renames it over `path`.
void save(const Store& store, const std::filesystem::path& path);
Store load(const std::filesystem::path& path);

}  // namespace payroll::persist
