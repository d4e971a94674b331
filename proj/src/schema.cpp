#include "payroll/schema.hpp"

#include "payroll/error.hpp"

namespace payroll::schema {

namespace {

using enum FieldType;
using enum KeyRole;

Field pk_auto(std::string_view n, std::string_view orig) { return {n, orig, auto_increment, 0, primary_key, {}}; }
Field alpha_col(std::string_view n, std::string_view orig, std::size_t w) { return {n, orig, alpha, w, none, {}}; }
Field money_col(std::string_view n, std::string_view orig) { return {n, orig, currency, 0, none, {}}; }
Field fk_col(std::string_view n, std::string_view orig, std::string_view target) {
    return {n, orig, number, 0, foreign_key, target};
}

const std::vector<Table> kTables = {
    {"golongan", "Golongan",
     {pk_auto("gol_id", "#Gol"), alpha_col("nama_gol", "NamaGol", kNamaGolWidth), money_col("gapok", "Gapok")}},
    {"jfa", "Jabatan Fungsional Akademik",
     {pk_auto("jfa_id", "#JFA"), alpha_col("nama_jfa", "NamaJFA", kNamaJabatanWidth),
      money_col("tunj_fa", "TunjFA")}},
    {"jstr", "Jabatan Struktural",
     {pk_auto("jstr_id", "#JStr"), alpha_col("nama_jstr", "NamaJStr", kNamaJabatanWidth),
      money_col("tunj_str", "TunjStr")}},
    {"jkhs", "Jabatan Khusus",
     {pk_auto("jkhs_id", "#JKhs"), alpha_col("nama_jkhs", "NamaJKhs", kNamaJabatanWidth),
      money_col("tunj_khs", "TunjKhs")}},
    {"pendidikan", "Pendidikan",
     {pk_auto("pend_id", "#Pend"), alpha_col("nama_pend", "NamaPend", kNamaPendWidth),
      money_col("tarif_mgjr", "TarifMgjr")}},
    {"dosen", "Dosen",
     {{"nii", "#NII", alpha, kNiiWidth, primary_key, {}},
      alpha_col("nama_dosen", "NamaDosen", kNamaDosenWidth),
      fk_col("golongan", "Golongan", "golongan"),
      fk_col("jab_fa", "JabFA", "jfa"),
      fk_col("jab_str", "JabStr", "jstr"),
      fk_col("jab_khs", "JabKhs", "jkhs"),
      fk_col("pendidikan", "Pendidikan", "pendidikan")}},
    {"gaji", "Gaji",
     {pk_auto("no_slip", "#NoSlipGaji"),
      alpha_col("periode", "Periode", kPeriodeWidth),
      {"nii", "NII", alpha, kNiiWidth, foreign_key, "dosen"},
      alpha_col("nama_dosen", "NamaDosen", kNamaDosenWidth),
      money_col("gapok", "Gapok"),
      money_col("tunj_fa", "TunjFA"),
      money_col("tunj_str", "TunjStr"),
      money_col("tunj_khs", "TunjKhs"),
      {"sks_mgjr", "SksMgjr", number, 0, none, {}},
      money_col("hon_mgjr", "HonMgjr"),
      money_col("pajak", "Pajak"),
      money_col("pot_kop", "PotKop"),
      money_col("arisan", "Arisan"),
      money_col("pot_lain", "PotLain"),
      money_col("gaji_bersih", "GajiBersih")}},
};

const MasterInfo kMasters[] = {
    {MasterKind::golongan, "golongan", "gol", "gol_id", "nama_gol", "gapok", "golongan", "Golongan", kNamaGolWidth},
    {MasterKind::jfa, "jfa", "jfa", "jfa_id", "nama_jfa", "tunj_fa", "jab_fa", "Jabatan Fungsional Akademik",
     kNamaJabatanWidth},
    {MasterKind::jstr, "jstr", "jstr", "jstr_id", "nama_jstr", "tunj_str", "jab_str", "Jabatan Struktural",
     kNamaJabatanWidth},
    {MasterKind::jkhs, "jkhs", "jkhs", "jkhs_id", "nama_jkhs", "tunj_khs", "jab_khs", "Jabatan Khusus",
     kNamaJabatanWidth},
    {MasterKind::pendidikan, "pendidikan", "pend", "pend_id", "nama_pend", "tarif_mgjr", "pendidikan", "Pendidikan",
     kNamaPendWidth},
};

}  // namespace

const Field& Table::primary_key() const {
    for (const auto& f : fields)
        if (f.role == KeyRole::primary_key) return f;
    fail(ErrorCode::internal, "table " + std::string(name) + " has no primary key");
}

const Field* Table::find(std::string_view field_name) const {
    for (const auto& f : fields)
        if (f.name == field_name) return &f;
    return nullptr;
}

const std::vector<Table>& tables() { return kTables; }

const Table* find_table(std::string_view name) {
    for (const auto& t : kTables)
        if (t.name == name) return &t;
    return nullptr;
}

const Table& table(std::string_view name) {
    if (const Table* t = find_table(name)) return *t;
    fail(ErrorCode::usage, "unknown table \"" + std::string(name) + "\"");
}

std::string_view to_string(FieldType t) {
    switch (t) {
        case FieldType::auto_increment: return "auto_increment";
        case FieldType::alpha: return "alpha";
        case FieldType::number: return "number";
        case FieldType::currency: return "currency";
    }
    return "?";
}

std::string_view to_string(KeyRole r) {
    switch (r) {
        case KeyRole::none: return "none";
        case KeyRole::primary_key: return "primary_key";
        case KeyRole::foreign_key: return "foreign_key";
    }
    return "?";
}

const MasterInfo& master_info(MasterKind kind) { return kMasters[static_cast<std::size_t>(kind)]; }

std::optional<MasterKind> master_kind(std::string_view table_name) {
    for (const auto& m : kMasters)
        if (m.table == table_name) return m.kind;
    return std::nullopt;
}

}  // namespace payroll::schema
