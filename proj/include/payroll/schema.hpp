#pragma once

#include "payroll/domain.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace payroll::schema {

enum class FieldType { auto_increment, alpha, number, currency };
enum class KeyRole { none, primary_key, foreign_key };

struct Field {
    std::string_view name;           // persistence / JSON / CSV name
    std::string_view original_name;  // column name in the original physical design
    FieldType type;
    std::size_t width;               // 0 when the type carries no width
    KeyRole role;
    std::string_view references;     // target table when role == foreign_key
};

struct Table {
    std::string_view name;
    std::string_view original_name;
    std::vector<Field> fields;

    const Field& primary_key() const;
    const Field* find(std::string_view field_name) const;
};

/// The seven relations in load order: every table appears after the tables
/// it references.
const std::vector<Table>& tables();
const Table& table(std::string_view name);
const Table* find_table(std::string_view name);

std::string_view to_string(FieldType t);
std::string_view to_string(KeyRole r);

/// Naming for the five master relations.
struct MasterInfo {
    MasterKind kind;
    std::string_view table;      // "golongan"
    std::string_view counter;    // "gol"
    std::string_view id_field;   // "gol_id"
    std::string_view name_field; // "nama_gol"
    std::string_view tarif_field;
    std::string_view dosen_field;  // Dosen column referencing this table
    std::string_view title;      // human heading
    std::size_t name_width;
};

const MasterInfo& master_info(MasterKind kind);
std::optional<MasterKind> master_kind(std::string_view table_name);

}  // namespace payroll::schema
