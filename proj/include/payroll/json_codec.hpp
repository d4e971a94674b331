#pragma once

#include "payroll/domain.hpp"
#include "payroll/engine.hpp"

#include <json.hpp>

#include <initializer_list>
#include <string_view>

namespace payroll::codec {

using nlohmann::json;

// Row <-> JSON using the persistence field names. Decoders are strict: an
// unknown or missing field, or a value of the wrong type, is a validation
// error naming the field.

json encode(MasterKind kind, const MasterRow& row);
json encode(const Dosen& d);
json encode(const SlipGaji& s);
json encode(const DosenProfilTarif& p);
json encode(const engine::GajiBreakdown& b);

/// With `with_id` false the id field is optional and defaults to 0.
MasterRow decode_master(MasterKind kind, const json& j, bool with_id);
Dosen decode_dosen(const json& j);
SlipGaji decode_slip(const json& j);
engine::GajiInput decode_gaji_input(const json& j);

/// Money field: a non-negative JSON integer, or a money string ("Rp1.100.000").
Money money_field(const json& obj, std::string_view name);
std::int64_t int_field(const json& obj, std::string_view name);
std::string string_field(const json& obj, std::string_view name);
void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed, std::string_view what);
void require_object(const json& j, std::string_view what);

}  // namespace payroll::codec
