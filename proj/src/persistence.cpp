#include "payroll/persistence.hpp"

#include "payroll/error.hpp"
#include "payroll/json_codec.hpp"
#include "payroll/schema.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

namespace payroll::persist {

using nlohmann::json;

namespace {

const json& array_member(const json& doc, std::string_view name) {
    auto it = doc.find(name);
    if (it == doc.end() || !it->is_array())
        fail(ErrorCode::validation, "document: \"" + std::string(name) + "\" must be an array");
    return *it;
}

// Decoding errors get the array and position prepended so the diagnostic
// points into the document.
template <typename Fn>
auto at_row(std::string_view table, std::size_t i, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        throw Error(e.code(), "document: " + std::string(table) + "[" + std::to_string(i) + "]: " + e.what(),
                    e.details());
    }
}

}  // namespace

json to_document(const Store& store) {
    json doc = json::object();
    doc["schema_version"] = kSchemaVersion;
    json counters = json::object();
    for (MasterKind kind : kMasterKinds)
        counters[std::string(schema::master_info(kind).counter)] = store.counters().of(kind);
    counters["slip"] = store.counters().slip;
    doc["counters"] = counters;
    for (MasterKind kind : kMasterKinds) {
        json rows = json::array();
        for (const auto& [id, row] : store.masters(kind)) rows.push_back(codec::encode(kind, row));
        doc[std::string(schema::master_info(kind).table)] = rows;
    }
    json dosen = json::array();
    for (const auto& [nii, d] : store.dosen()) dosen.push_back(codec::encode(d));
    doc["dosen"] = dosen;
    json gaji = json::array();
    for (const auto& [no, s] : store.gaji()) gaji.push_back(codec::encode(s));
    doc["gaji"] = gaji;
    return doc;
}

Store from_document(const json& doc) {
    codec::require_object(doc, "document");
    codec::reject_unknown(doc,
                          {"schema_version", "counters", "golongan", "jfa", "jstr", "jkhs", "pendidikan", "dosen", "gaji"},
                          "document");
    if (codec::int_field(doc, "schema_version") != kSchemaVersion)
        fail(ErrorCode::validation, "document: unsupported schema_version");

    auto cit = doc.find("counters");
    if (cit == doc.end()) fail(ErrorCode::validation, "document: missing counters");
    const json& cj = *cit;
    codec::require_object(cj, "counters");
    codec::reject_unknown(cj, {"gol", "jfa", "jstr", "jkhs", "pend", "slip"}, "counters");
    Counters counters;
    for (MasterKind kind : kMasterKinds) counters.of(kind) = codec::int_field(cj, schema::master_info(kind).counter);
    counters.slip = codec::int_field(cj, "slip");

    std::array<std::vector<MasterRow>, 5> masters;
    for (MasterKind kind : kMasterKinds) {
        std::string_view name = schema::master_info(kind).table;
        const json& rows = array_member(doc, name);
        for (std::size_t i = 0; i < rows.size(); ++i)
            masters[static_cast<std::size_t>(kind)].push_back(
                at_row(name, i, [&] { return codec::decode_master(kind, rows[i], true); }));
    }
    std::vector<Dosen> dosen;
    const json& drows = array_member(doc, "dosen");
    for (std::size_t i = 0; i < drows.size(); ++i)
        dosen.push_back(at_row("dosen", i, [&] { return codec::decode_dosen(drows[i]); }));
    std::vector<SlipGaji> gaji;
    const json& grows = array_member(doc, "gaji");
    for (std::size_t i = 0; i < grows.size(); ++i)
        gaji.push_back(at_row("gaji", i, [&] { return codec::decode_slip(grows[i]); }));

    try {
        return Store::assemble(std::move(masters), std::move(dosen), std::move(gaji), counters);
    } catch (const Error& e) {
        throw Error(e.code(), std::string("document: ") + e.what(), e.details());
    }
}

std::string dump(const Store& store) { return to_document(store).dump(2) + "\n"; }

Store parse(std::string_view text) {
    json doc = json::parse(text.begin(), text.end(), nullptr, false);
    if (doc.is_discarded()) fail(ErrorCode::validation, "document: malformed JSON");
    return from_document(doc);
}

void save(const Store& store, const std::filesystem::path& path) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(ErrorCode::io, "cannot write " + tmp.string());
        out << dump(store);
        out.flush();
        if (!out) fail(ErrorCode::io, "write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) fail(ErrorCode::io, "cannot replace " + path.string() + ": " + ec.message());
}

Store load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::io, "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

}  // namespace payroll::persist
