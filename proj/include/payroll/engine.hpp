#pragma once

#include "payroll/domain.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace payroll {
class Store;
}

namespace payroll::engine {

/// How net salary is presented. `standard` subtracts PotKop, Arisan and
/// PotLain from gross. `paper_compat` reports gross as the net figure, which
/// is what the legacy Form Gaji displayed. Stored slips always hold the
/// standard value; the mode only changes computed previews and displays.
enum class NetMode { standard, paper_compat };

struct GajiInput {
    Periode periode;
    std::string nii;
    std::int64_t sks_mgjr = 0;
    Money pajak;
    Money pot_kop;
    Money arisan;
    Money pot_lain;
};

struct GajiBreakdown {
    DosenProfilTarif profil;
    GajiInput input;
    Money honor_kotor;
    Money hon_mgjr;
    Money gaji_kotor;
    Money gaji_bersih;
};

DosenProfilTarif resolve_profil(const Store& store, std::string_view nii);

Money honor_kotor(std::int64_t sks_mgjr, Money tarif_mgjr);
/// Teaching honorarium after tax. Tax is levied on the honorarium only.
Money honor_mengajar(Money honor_kotor, Money pajak);
Money gaji_kotor(const DosenProfilTarif& profil, Money hon_mgjr);
Money gaji_bersih(Money gaji_kotor, Money pot_kop, Money arisan, Money pot_lain);

GajiBreakdown compute(const DosenProfilTarif& profil, const GajiInput& input, NetMode mode = NetMode::standard);
GajiBreakdown preview(const Store& store, const GajiInput& input, NetMode mode = NetMode::standard);

/// Resolve, compute, snapshot and insert as one mutation of `store`.
SlipGaji create_slip(Store& store, const GajiInput& input);

/// Gross salary recomputed from a slip's own snapshot columns.
Money slip_gaji_kotor(const SlipGaji& slip);
/// Net figure to show for a stored slip under `mode`.
Money displayed_net(const SlipGaji& slip, NetMode mode);

}  // namespace payroll::engine
