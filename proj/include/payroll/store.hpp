#pragma once

#include "payroll/domain.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace payroll {

/// Next id to issue per auto-keyed table. Starts at 1, never decreases.
struct Counters {
    std::array<Id, 5> master{1, 1, 1, 1, 1};
    Id slip = 1;

    Id& of(MasterKind k) { return master[static_cast<std::size_t>(k)]; }
    Id of(MasterKind k) const { return master[static_cast<std::size_t>(k)]; }
    friend bool operator==(const Counters&, const Counters&) = default;
};

/// The seven relations. Every mutating call either applies completely or
/// throws `payroll::Error` leaving the store untouched. Deletes are RESTRICT:
/// a row that is still referenced cannot be removed.
///
/// Store itself is not synchronized; `Service` provides the single-writer /
/// multi-reader wrapper.
class Store {
public:
    using MasterTable = std::map<Id, MasterRow>;
    using DosenTable = std::map<std::string, Dosen, std::less<>>;
    using GajiTable = std::map<Id, SlipGaji>;

    Id insert_master(MasterKind kind, std::string nama, Money tarif);
    void update_master(MasterKind kind, Id id, std::string nama, Money tarif);
    void delete_master(MasterKind kind, Id id);
    const MasterRow& get_master(MasterKind kind, Id id) const;
    const MasterTable& masters(MasterKind kind) const { return master_[index(kind)]; }

    /// Inserts when the NII is new, replaces otherwise.
    void upsert_dosen(Dosen dosen);
    void delete_dosen(std::string_view nii);
    const Dosen& get_dosen(std::string_view nii) const;
    const DosenTable& dosen() const { return dosen_; }

    /// Stores the slip under a fresh number (slip.no_slip is ignored).
    Id insert_slip(SlipGaji slip);
    void delete_slip(Id no_slip);
    const SlipGaji& get_slip(Id no_slip) const;
    const GajiTable& gaji() const { return gaji_; }
    std::vector<SlipGaji> list_slips(const std::optional<Periode>& periode = std::nullopt) const;
    const SlipGaji* find_slip(std::string_view nii, const Periode& periode) const;

    // Keyed writes used by CSV import: an id of 0 means "issue a fresh one",
    // otherwise the row lands at exactly that id (replacing any row there) and
    // the counter moves past it.
    Id put_master(MasterKind kind, MasterRow row);
    Id put_slip(SlipGaji slip);

    const Counters& counters() const { return counters_; }
    bool empty() const;

    /// Builds a store from raw rows, rejecting duplicates and any invariant
    /// violation. Used by the persistence loader.
    static Store assemble(std::array<std::vector<MasterRow>, 5> masters, std::vector<Dosen> dosen,
                          std::vector<SlipGaji> gaji, Counters counters);

    /// Throws on the first violated invariant.
    void check_invariants() const;

    friend bool operator==(const Store&, const Store&) = default;

private:
    static std::size_t index(MasterKind k) { return static_cast<std::size_t>(k); }
    void check_master_row(MasterKind kind, const MasterRow& row) const;
    void check_dosen(const Dosen& d) const;
    void check_slip(const SlipGaji& s) const;
    std::vector<std::string> referencing_niis(MasterKind kind, Id id) const;

    std::array<MasterTable, 5> master_;
    DosenTable dosen_;
    GajiTable gaji_;
    Counters counters_;
};

/// The identity every stored slip satisfies:
/// gaji_bersih = gapok + tunj_fa + tunj_str + tunj_khs + hon_mgjr - pot_kop - arisan - pot_lain.
Money expected_gaji_bersih(const SlipGaji& slip);

}  // namespace payroll
