#include "payroll/engine.hpp"

#include "payroll/error.hpp"
#include "payroll/store.hpp"

namespace payroll::engine {

DosenProfilTarif resolve_profil(const Store& store, std::string_view nii) {
    const Dosen& d = store.get_dosen(nii);
    return DosenProfilTarif{
        .nii = d.nii,
        .nama_dosen = d.nama_dosen,
        .gapok = store.get_master(MasterKind::golongan, d.golongan).tarif,
        .tunj_fa = store.get_master(MasterKind::jfa, d.jab_fa).tarif,
        .tunj_str = store.get_master(MasterKind::jstr, d.jab_str).tarif,
        .tunj_khs = store.get_master(MasterKind::jkhs, d.jab_khs).tarif,
        .tarif_mgjr = store.get_master(MasterKind::pendidikan, d.pendidikan).tarif,
    };
}

Money honor_kotor(std::int64_t sks_mgjr, Money tarif_mgjr) {
    if (sks_mgjr < 0) fail(ErrorCode::validation, "sks_mgjr must be >= 0, got " + std::to_string(sks_mgjr));
    return tarif_mgjr.times(sks_mgjr);
}

Money honor_mengajar(Money honor_kotor, Money pajak) {
    if (pajak > honor_kotor)
        fail(ErrorCode::validation, "pajak " + std::to_string(pajak.rupiah()) + " exceeds honor_kotor " +
                                        std::to_string(honor_kotor.rupiah()));
    return honor_kotor - pajak;
}

Money gaji_kotor(const DosenProfilTarif& profil, Money hon_mgjr) {
    return profil.gapok + profil.tunj_fa + profil.tunj_str + profil.tunj_khs + hon_mgjr;
}

Money gaji_bersih(Money gaji_kotor, Money pot_kop, Money arisan, Money pot_lain) {
    Money deductions = pot_kop + arisan + pot_lain;
    if (deductions > gaji_kotor)
        fail(ErrorCode::validation, "deductions " + std::to_string(deductions.rupiah()) + " exceed gaji_kotor " +
                                        std::to_string(gaji_kotor.rupiah()));
    return gaji_kotor - deductions;
}

GajiBreakdown compute(const DosenProfilTarif& profil, const GajiInput& input, NetMode mode) {
    GajiBreakdown b{.profil = profil, .input = input};
    b.honor_kotor = honor_kotor(input.sks_mgjr, profil.tarif_mgjr);
    b.hon_mgjr = honor_mengajar(b.honor_kotor, input.pajak);
    b.gaji_kotor = gaji_kotor(profil, b.hon_mgjr);
    // The standard net is always computed so over-deduction is rejected in both modes.
    Money net = gaji_bersih(b.gaji_kotor, input.pot_kop, input.arisan, input.pot_lain);
    b.gaji_bersih = mode == NetMode::paper_compat ? b.gaji_kotor : net;
    return b;
}

GajiBreakdown preview(const Store& store, const GajiInput& input, NetMode mode) {
    return compute(resolve_profil(store, input.nii), input, mode);
}

SlipGaji create_slip(Store& store, const GajiInput& input) {
    GajiBreakdown b = preview(store, input, NetMode::standard);
    SlipGaji slip{
        .periode = input.periode,
        .nii = b.profil.nii,
        .nama_dosen = b.profil.nama_dosen,
        .gapok = b.profil.gapok,
        .tunj_fa = b.profil.tunj_fa,
        .tunj_str = b.profil.tunj_str,
        .tunj_khs = b.profil.tunj_khs,
        .sks_mgjr = input.sks_mgjr,
        .hon_mgjr = b.hon_mgjr,
        .pajak = input.pajak,
        .pot_kop = input.pot_kop,
        .arisan = input.arisan,
        .pot_lain = input.pot_lain,
        .gaji_bersih = b.gaji_bersih,
    };
    slip.no_slip = store.insert_slip(slip);
    return slip;
}

Money slip_gaji_kotor(const SlipGaji& slip) {
    return slip.gapok + slip.tunj_fa + slip.tunj_str + slip.tunj_khs + slip.hon_mgjr;
}

Money displayed_net(const SlipGaji& slip, NetMode mode) {
    return mode == NetMode::paper_compat ? slip_gaji_kotor(slip) : slip.gaji_bersih;
}

}  // namespace payroll::engine
