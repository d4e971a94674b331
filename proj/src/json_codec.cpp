#include "payroll/json_codec.hpp"

#include "payroll/error.hpp"
#include "payroll/schema.hpp"

#include <algorithm>

namespace payroll::codec {

namespace {

const json& member(const json& obj, std::string_view name) {
    auto it = obj.find(name);
    if (it == obj.end()) fail(ErrorCode::validation, "missing field \"" + std::string(name) + "\"");
    return *it;
}

[[noreturn]] void wrong_type(std::string_view name, std::string_view expected) {
    fail(ErrorCode::validation, "field \"" + std::string(name) + "\" must be " + std::string(expected));
}

}  // namespace

void require_object(const json& j, std::string_view what) {
    if (!j.is_object()) fail(ErrorCode::validation, std::string(what) + " must be a JSON object");
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed, std::string_view what) {
    for (const auto& [key, value] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            fail(ErrorCode::validation, "unknown field \"" + key + "\" in " + std::string(what));
    }
}

std::int64_t int_field(const json& obj, std::string_view name) {
    const json& v = member(obj, name);
    if (!v.is_number_integer()) wrong_type(name, "an integer");
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
        wrong_type(name, "a 64-bit integer");
    return v.get<std::int64_t>();
}

Money money_field(const json& obj, std::string_view name) {
    const json& v = member(obj, name);
    if (v.is_string()) return parse_money(v.get_ref<const std::string&>());
    if (!v.is_number_integer()) wrong_type(name, "a non-negative integer rupiah amount");
    std::int64_t n = int_field(obj, name);
    if (n < 0) fail(ErrorCode::validation, "field \"" + std::string(name) + "\" must not be negative");
    return Money(n);
}

std::string string_field(const json& obj, std::string_view name) {
    const json& v = member(obj, name);
    if (!v.is_string()) wrong_type(name, "a string");
    return v.get<std::string>();
}

json encode(MasterKind kind, const MasterRow& row) {
    const auto& info = schema::master_info(kind);
    json j = json::object();
    j[std::string(info.id_field)] = row.id;
    j[std::string(info.name_field)] = row.nama;
    j[std::string(info.tarif_field)] = row.tarif.rupiah();
    return j;
}

json encode(const Dosen& d) {
    return json{{"nii", d.nii},           {"nama_dosen", d.nama_dosen}, {"golongan", d.golongan},
                {"jab_fa", d.jab_fa},     {"jab_str", d.jab_str},       {"jab_khs", d.jab_khs},
                {"pendidikan", d.pendidikan}};
}

json encode(const SlipGaji& s) {
    return json{{"no_slip", s.no_slip},
                {"periode", s.periode.str()},
                {"nii", s.nii},
                {"nama_dosen", s.nama_dosen},
                {"gapok", s.gapok.rupiah()},
                {"tunj_fa", s.tunj_fa.rupiah()},
                {"tunj_str", s.tunj_str.rupiah()},
                {"tunj_khs", s.tunj_khs.rupiah()},
                {"sks_mgjr", s.sks_mgjr},
                {"hon_mgjr", s.hon_mgjr.rupiah()},
                {"pajak", s.pajak.rupiah()},
                {"pot_kop", s.pot_kop.rupiah()},
                {"arisan", s.arisan.rupiah()},
                {"pot_lain", s.pot_lain.rupiah()},
                {"gaji_bersih", s.gaji_bersih.rupiah()}};
}

json encode(const DosenProfilTarif& p) {
    return json{{"nii", p.nii},
                {"nama_dosen", p.nama_dosen},
                {"gapok", p.gapok.rupiah()},
                {"tunj_fa", p.tunj_fa.rupiah()},
                {"tunj_str", p.tunj_str.rupiah()},
                {"tunj_khs", p.tunj_khs.rupiah()},
                {"tarif_mgjr", p.tarif_mgjr.rupiah()}};
}

json encode(const engine::GajiBreakdown& b) {
    json j = encode(b.profil);
    j["periode"] = b.input.periode.str();
    j["sks_mgjr"] = b.input.sks_mgjr;
    j["pajak"] = b.input.pajak.rupiah();
    j["pot_kop"] = b.input.pot_kop.rupiah();
    j["arisan"] = b.input.arisan.rupiah();
    j["pot_lain"] = b.input.pot_lain.rupiah();
    j["honor_kotor"] = b.honor_kotor.rupiah();
    j["hon_mgjr"] = b.hon_mgjr.rupiah();
    j["gaji_kotor"] = b.gaji_kotor.rupiah();
    j["gaji_bersih"] = b.gaji_bersih.rupiah();
    return j;
}

MasterRow decode_master(MasterKind kind, const json& j, bool with_id) {
    const auto& info = schema::master_info(kind);
    require_object(j, info.table);
    reject_unknown(j, {info.id_field, info.name_field, info.tarif_field}, info.table);
    MasterRow row;
    if (with_id || j.contains(info.id_field)) row.id = int_field(j, info.id_field);
    row.nama = string_field(j, info.name_field);
    row.tarif = money_field(j, info.tarif_field);
    return row;
}

Dosen decode_dosen(const json& j) {
    require_object(j, "dosen");
    reject_unknown(j, {"nii", "nama_dosen", "golongan", "jab_fa", "jab_str", "jab_khs", "pendidikan"}, "dosen");
    return Dosen{
        .nii = string_field(j, "nii"),
        .nama_dosen = string_field(j, "nama_dosen"),
        .golongan = int_field(j, "golongan"),
        .jab_fa = int_field(j, "jab_fa"),
        .jab_str = int_field(j, "jab_str"),
        .jab_khs = int_field(j, "jab_khs"),
        .pendidikan = int_field(j, "pendidikan"),
    };
}

SlipGaji decode_slip(const json& j) {
    require_object(j, "gaji");
    reject_unknown(j,
                   {"no_slip", "periode", "nii", "nama_dosen", "gapok", "tunj_fa", "tunj_str", "tunj_khs", "sks_mgjr",
                    "hon_mgjr", "pajak", "pot_kop", "arisan", "pot_lain", "gaji_bersih"},
                   "gaji");
    return SlipGaji{
        .no_slip = int_field(j, "no_slip"),
        .periode = canonical_periode(string_field(j, "periode")),
        .nii = string_field(j, "nii"),
        .nama_dosen = string_field(j, "nama_dosen"),
        .gapok = money_field(j, "gapok"),
        .tunj_fa = money_field(j, "tunj_fa"),
        .tunj_str = money_field(j, "tunj_str"),
        .tunj_khs = money_field(j, "tunj_khs"),
        .sks_mgjr = int_field(j, "sks_mgjr"),
        .hon_mgjr = money_field(j, "hon_mgjr"),
        .pajak = money_field(j, "pajak"),
        .pot_kop = money_field(j, "pot_kop"),
        .arisan = money_field(j, "arisan"),
        .pot_lain = money_field(j, "pot_lain"),
        .gaji_bersih = money_field(j, "gaji_bersih"),
    };
}

engine::GajiInput decode_gaji_input(const json& j) {
    require_object(j, "slip input");
    reject_unknown(j, {"periode", "nii", "sks_mgjr", "pajak", "pot_kop", "arisan", "pot_lain"}, "slip input");
    engine::GajiInput in{.periode = canonical_periode(string_field(j, "periode")), .nii = string_field(j, "nii")};
    in.sks_mgjr = int_field(j, "sks_mgjr");
    if (in.sks_mgjr < 0) fail(ErrorCode::validation, "field \"sks_mgjr\" must not be negative");
    in.pajak = money_field(j, "pajak");
    in.pot_kop = money_field(j, "pot_kop");
    in.arisan = money_field(j, "arisan");
    in.pot_lain = money_field(j, "pot_lain");
    return in;
}

}  // namespace payroll::codec
