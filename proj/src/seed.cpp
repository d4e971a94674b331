#include "payroll/seed.hpp"

#include "payroll/error.hpp"
#include "payroll/schema.hpp"

namespace payroll {

namespace {

struct Named {
    Id id;
    const char* nama;
    std::int64_t tarif;
};

void fill(Store& store, MasterKind kind, Id last_id, std::initializer_list<Named> known) {
    for (Id id = 1; id <= last_id; ++id) {
        std::string nama = "(unnamed-" + std::string(schema::master_info(kind).table) + "-" + std::to_string(id) + ")";
        Money tarif;
        for (const auto& k : known) {
            if (k.id == id) {
                nama = k.nama;
                tarif = Money(k.tarif);
            }
        }
        store.insert_master(kind, std::move(nama), tarif);
    }
}

}  // namespace

void seed_reference_data(Store& store) {
    if (!store.empty()) fail(ErrorCode::conflict, "store is not empty; refusing to seed");
    fill(store, MasterKind::golongan, 2, {{2, "III B", 1100000}});
    fill(store, MasterKind::jfa, 5, {{1, "Asisten Ahli", 480000}});
    fill(store, MasterKind::jstr, 1, {{1, "Dosen", 0}});
    fill(store, MasterKind::jkhs, 1, {{1, "Level 0", 0}});
    fill(store, MasterKind::pendidikan, 3, {{3, "S2 - Magister", 17500}});

    store.upsert_dosen({"020209151", "Liliya Dewi Susanawati", 2, 1, 1, 1, 3});
    store.upsert_dosen({"020209152", "Leon Andretti Abdillah", 2, 1, 1, 1, 3});
    store.upsert_dosen({"020209153", "Endang Lestari", 2, 5, 1, 1, 3});
}

}  // namespace payroll
