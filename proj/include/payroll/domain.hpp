#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace payroll {

using Id = std::int64_t;

/// Whole rupiah. Never negative; every arithmetic step is checked and throws
/// `Error{validation}` on overflow or on a result that would go below zero.
class Money {
public:
    constexpr Money() = default;
    explicit Money(std::int64_t rupiah);

    constexpr std::int64_t rupiah() const noexcept { return amount_; }

    Money operator+(Money other) const;
    Money operator-(Money other) const;
    Money& operator+=(Money other) { return *this = *this + other; }
    Money& operator-=(Money other) { return *this = *this - other; }
    Money times(std::int64_t factor) const;

    friend constexpr auto operator<=>(Money, Money) = default;

private:
    std::int64_t amount_ = 0;
};

/// Accepts "1100000" or "Rp1.100.000" (groups of exactly three digits).
Money parse_money(std::string_view text);
std::string format_money(Money m);

/// Pay month, always held as "YYYY-MM".
class Periode {
public:
    const std::string& str() const noexcept { return value_; }
    friend auto operator<=>(const Periode&, const Periode&) = default;

private:
    friend Periode canonical_periode(std::string_view text);
    explicit Periode(std::string v) : value_(std::move(v)) {}
    std::string value_;
};

/// Accepts "YYYY-MM" or the date-picker form "DD/MM/YYYY".
Periode canonical_periode(std::string_view text);

/// Number of UTF-8 code points; throws on malformed UTF-8.
std::size_t char_count(std::string_view utf8);

/// Non-empty and at most `limit` characters, or `Error{validation}` naming the field.
void validate_width(std::string_view text, std::size_t limit, std::string_view field);

// Field widths of the physical design.
inline constexpr std::size_t kNamaGolWidth = 25;
inline constexpr std::size_t kNamaJabatanWidth = 30;
inline constexpr std::size_t kNamaPendWidth = 30;
inline constexpr std::size_t kNiiWidth = 10;
inline constexpr std::size_t kNamaDosenWidth = 25;
inline constexpr std::size_t kPeriodeWidth = 15;

enum class MasterKind { golongan, jfa, jstr, jkhs, pendidikan };
inline constexpr MasterKind kMasterKinds[] = {MasterKind::golongan, MasterKind::jfa, MasterKind::jstr,
                                              MasterKind::jkhs, MasterKind::pendidikan};

/// Golongan, JabatanFungsionalAkademik, JabatanStruktural, JabatanKhusus and
/// Pendidikan share one shape: id, display name, tariff.
struct MasterRow {
    Id id = 0;
    std::string nama;
    Money tarif;

    friend bool operator==(const MasterRow&, const MasterRow&) = default;
};

struct Dosen {
    std::string nii;
    std::string nama_dosen;
    Id golongan = 0;
    Id jab_fa = 0;
    Id jab_str = 0;
    Id jab_khs = 0;
    Id pendidikan = 0;

    Id ref(MasterKind kind) const noexcept;
    friend bool operator==(const Dosen&, const Dosen&) = default;
};

/// Tariffs a lecturer is currently entitled to, resolved through the five
/// master references. Derived, never stored.
struct DosenProfilTarif {
    std::string nii;
    std::string nama_dosen;
    Money gapok;
    Money tunj_fa;
    Money tunj_str;
    Money tunj_khs;
    Money tarif_mgjr;

    friend bool operator==(const DosenProfilTarif&, const DosenProfilTarif&) = default;
};

/// One lecturer's pay slip for one month. The tariff columns and nama_dosen
/// are copies taken when the slip was created; later master edits never
/// touch them.
struct SlipGaji {
    Id no_slip = 0;
    Periode periode;
    std::string nii;
    std::string nama_dosen;
    Money gapok;
    Money tunj_fa;
    Money tunj_str;
    Money tunj_khs;
    std::int64_t sks_mgjr = 0;
    Money hon_mgjr;
    Money pajak;
    Money pot_kop;
    Money arisan;
    Money pot_lain;
    Money gaji_bersih;

    friend bool operator==(const SlipGaji&, const SlipGaji&) = default;
};

}  // namespace payroll
