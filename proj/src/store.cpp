#include "payroll/store.hpp"

#include "payroll/engine.hpp"
#include "payroll/error.hpp"
#include "payroll/schema.hpp"

#include <algorithm>

namespace payroll {

namespace {

std::string label(MasterKind kind, Id id) {
    return std::string(schema::master_info(kind).table) + " " + std::to_string(id);
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += ", ";
        out += s;
    }
    return out;
}

}  // namespace

Money expected_gaji_bersih(const SlipGaji& slip) {
    return engine::gaji_bersih(engine::slip_gaji_kotor(slip), slip.pot_kop, slip.arisan, slip.pot_lain);
}

void Store::check_master_row(MasterKind kind, const MasterRow& row) const {
    const auto& info = schema::master_info(kind);
    if (row.id < 1) fail(ErrorCode::validation, std::string(info.id_field) + " must be >= 1");
    validate_width(row.nama, info.name_width, info.name_field);
    for (const auto& [id, other] : masters(kind)) {
        if (id != row.id && other.nama == row.nama)
            fail(ErrorCode::validation, std::string(info.name_field) + " \"" + row.nama + "\" already used by " +
                                          label(kind, id));
    }
}

std::vector<std::string> Store::referencing_niis(MasterKind kind, Id id) const {
    std::vector<std::string> out;
    for (const auto& [nii, d] : dosen_)
        if (d.ref(kind) == id) out.push_back(nii);
    return out;
}

Id Store::insert_master(MasterKind kind, std::string nama, Money tarif) {
    return put_master(kind, MasterRow{0, std::move(nama), tarif});
}

void Store::update_master(MasterKind kind, Id id, std::string nama, Money tarif) {
    get_master(kind, id);
    put_master(kind, MasterRow{id, std::move(nama), tarif});
}

Id Store::put_master(MasterKind kind, MasterRow row) {
    Id& counter = counters_.of(kind);
    if (row.id == 0) row.id = counter;
    check_master_row(kind, row);
    Id id = row.id;
    master_[index(kind)][id] = std::move(row);
    counter = std::max(counter, id + 1);
    return id;
}

void Store::delete_master(MasterKind kind, Id id) {
    get_master(kind, id);
    auto blockers = referencing_niis(kind, id);
    if (!blockers.empty()) {
        std::string msg = label(kind, id) + " is referenced by dosen " + join(blockers);
        fail(ErrorCode::referential_conflict, std::move(msg), std::move(blockers));
    }
    master_[index(kind)].erase(id);
}

const MasterRow& Store::get_master(MasterKind kind, Id id) const {
    const auto& table = masters(kind);
    auto it = table.find(id);
    if (it == table.end()) fail(ErrorCode::not_found, label(kind, id) + " not found");
    return it->second;
}

void Store::check_dosen(const Dosen& d) const {
    validate_width(d.nii, kNiiWidth, "nii");
    validate_width(d.nama_dosen, kNamaDosenWidth, "nama_dosen");
    for (MasterKind kind : kMasterKinds) {
        if (!masters(kind).contains(d.ref(kind))) {
            const auto& info = schema::master_info(kind);
            fail(ErrorCode::referential_conflict,
                 "dosen " + d.nii + ": " + std::string(info.dosen_field) + " refers to missing " +
                     label(kind, d.ref(kind)),
                 {std::string(info.table)});
        }
    }
}

void Store::upsert_dosen(Dosen dosen) {
    check_dosen(dosen);
    std::string key = dosen.nii;
    dosen_.insert_or_assign(std::move(key), std::move(dosen));
}

void Store::delete_dosen(std::string_view nii) {
    get_dosen(nii);
    std::vector<std::string> blockers;
    for (const auto& [no, slip] : gaji_)
        if (slip.nii == nii) blockers.push_back(std::to_string(no));
    if (!blockers.empty()) {
        std::string msg = "dosen " + std::string(nii) + " is referenced by slip " + join(blockers);
        fail(ErrorCode::referential_conflict, std::move(msg), std::move(blockers));
    }
    dosen_.erase(dosen_.find(nii));
}

const Dosen& Store::get_dosen(std::string_view nii) const {
    auto it = dosen_.find(nii);
    if (it == dosen_.end()) fail(ErrorCode::not_found, "dosen " + std::string(nii) + " not found");
    return it->second;
}

void Store::check_slip(const SlipGaji& s) const {
    if (s.no_slip < 1) fail(ErrorCode::validation, "no_slip must be >= 1");
    if (!dosen_.contains(s.nii))
        fail(ErrorCode::referential_conflict, "slip " + std::to_string(s.no_slip) + ": nii " + s.nii + " not found",
             {"dosen"});
    validate_width(s.nama_dosen, kNamaDosenWidth, "nama_dosen");
    if (s.sks_mgjr < 0) fail(ErrorCode::validation, "sks_mgjr must be >= 0");
    Money expected = expected_gaji_bersih(s);
    if (expected != s.gaji_bersih)
        fail(ErrorCode::validation, "slip " + std::to_string(s.no_slip) + ": gaji_bersih " +
                                        std::to_string(s.gaji_bersih.rupiah()) + " does not match computed " +
                                        std::to_string(expected.rupiah()));
    if (const SlipGaji* other = find_slip(s.nii, s.periode); other && other->no_slip != s.no_slip)
        fail(ErrorCode::conflict, "dosen " + s.nii + " already has slip " + std::to_string(other->no_slip) +
                                      " for periode " + s.periode.str());
}

Id Store::insert_slip(SlipGaji slip) {
    slip.no_slip = 0;
    return put_slip(std::move(slip));
}

Id Store::put_slip(SlipGaji slip) {
    if (slip.no_slip == 0) slip.no_slip = counters_.slip;
    check_slip(slip);
    Id id = slip.no_slip;
    gaji_.insert_or_assign(id, std::move(slip));
    counters_.slip = std::max(counters_.slip, id + 1);
    return id;
}

void Store::delete_slip(Id no_slip) {
    get_slip(no_slip);
    gaji_.erase(no_slip);
}

const SlipGaji& Store::get_slip(Id no_slip) const {
    auto it = gaji_.find(no_slip);
    if (it == gaji_.end()) fail(ErrorCode::not_found, "slip " + std::to_string(no_slip) + " not found");
    return it->second;
}

std::vector<SlipGaji> Store::list_slips(const std::optional<Periode>& periode) const {
    std::vector<SlipGaji> out;
    for (const auto& [no, slip] : gaji_)
        if (!periode || slip.periode == *periode) out.push_back(slip);
    return out;
}

const SlipGaji* Store::find_slip(std::string_view nii, const Periode& periode) const {
    for (const auto& [no, slip] : gaji_)
        if (slip.nii == nii && slip.periode == periode) return &slip;
    return nullptr;
}

bool Store::empty() const {
    return dosen_.empty() && gaji_.empty() &&
           std::all_of(master_.begin(), master_.end(), [](const auto& t) { return t.empty(); });
}

Store Store::assemble(std::array<std::vector<MasterRow>, 5> masters, std::vector<Dosen> dosen,
                      std::vector<SlipGaji> gaji, Counters counters) {
    Store s;
    for (MasterKind kind : kMasterKinds) {
        for (auto& row : masters[index(kind)]) {
            Id id = row.id;
            if (!s.master_[index(kind)].emplace(id, std::move(row)).second)
                fail(ErrorCode::conflict, "duplicate key: " + label(kind, id));
        }
    }
    for (auto& d : dosen) {
        std::string key = d.nii;
        if (!s.dosen_.emplace(key, std::move(d)).second) fail(ErrorCode::conflict, "duplicate key: dosen " + key);
    }
    for (auto& slip : gaji) {
        Id id = slip.no_slip;
        if (!s.gaji_.emplace(id, std::move(slip)).second)
            fail(ErrorCode::conflict, "duplicate key: slip " + std::to_string(id));
    }
    s.counters_ = counters;
    s.check_invariants();
    return s;
}

void Store::check_invariants() const {
    for (MasterKind kind : kMasterKinds) {
        const auto& info = schema::master_info(kind);
        for (const auto& [id, row] : masters(kind)) {
            if (row.id != id) fail(ErrorCode::internal, label(kind, id) + " stored under the wrong key");
            check_master_row(kind, row);
            if (id >= counters_.of(kind))
                fail(ErrorCode::validation, std::string("counter ") + std::string(info.counter) + " = " +
                                                std::to_string(counters_.of(kind)) + " does not exceed issued id " +
                                                std::to_string(id));
        }
        if (counters_.of(kind) < 1) fail(ErrorCode::validation, "counters must be >= 1");
    }
    for (const auto& [nii, d] : dosen_) check_dosen(d);
    for (const auto& [no, slip] : gaji_) {
        check_slip(slip);
        if (no >= counters_.slip)
            fail(ErrorCode::validation, "counter slip = " + std::to_string(counters_.slip) +
                                            " does not exceed issued id " + std::to_string(no));
    }
    if (counters_.slip < 1) fail(ErrorCode::validation, "counters must be >= 1");
}

}  // namespace payroll
