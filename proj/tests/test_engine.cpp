#include "support/fixtures.hpp"
#include "support/random_ops.hpp"

#include "payroll/engine.hpp"

#include <doctest.h>

using namespace payroll;
using namespace payroll::engine;
using payroll::testing::error_code_of;
using payroll::testing::kLeonNii;
using payroll::testing::oracle_net;
using payroll::testing::reference_input;
using payroll::testing::seeded_store;

namespace {

// Multiplication by repeated addition.
std::int64_t oracle_product(std::int64_t n, std::int64_t rate) {
    std::int64_t sum = 0;
    for (std::int64_t i = 0; i < n; ++i) sum += rate;
    return sum;
}

DosenProfilTarif profil(std::int64_t gapok, std::int64_t fa, std::int64_t str, std::int64_t khs) {
    return {"x", "x", Money(gapok), Money(fa), Money(str), Money(khs), Money(17500)};
}

}  // namespace

TEST_CASE("resolve_profil follows the current master rows") {
    Store s = seeded_store();
    DosenProfilTarif p = resolve_profil(s, kLeonNii);
    CHECK(p.gapok.rupiah() == 1100000);
    CHECK(p.tunj_fa.rupiah() == 480000);
    CHECK(p.tunj_str.rupiah() == 0);
    CHECK(p.tunj_khs.rupiah() == 0);
    CHECK(p.tarif_mgjr.rupiah() == 17500);
    CHECK(p.nama_dosen == "Leon Andretti Abdillah");
    CHECK(error_code_of([&] { resolve_profil(s, "000"); }) == ErrorCode::not_found);

    s.update_master(MasterKind::golongan, 2, "III B", Money(1200000));
    CHECK(resolve_profil(s, kLeonNii).gapok.rupiah() == 1200000);
}

TEST_CASE("honor_kotor") {
    CHECK(honor_kotor(100, Money(17500)).rupiah() == 1750000);
    CHECK(honor_kotor(0, Money(17500)).rupiah() == 0);
    CHECK(honor_kotor(12, Money(17500)).rupiah() == oracle_product(12, 17500));
    CHECK(honor_kotor(12, Money(17500)).rupiah() == 210000);
    CHECK(error_code_of([] { honor_kotor(-1, Money(17500)); }) == ErrorCode::validation);
    CHECK(error_code_of([] { honor_kotor(INT64_MAX, Money(2)); }) == ErrorCode::validation);
}

TEST_CASE("honor_mengajar") {
    CHECK(honor_mengajar(Money(1750000), Money(37500)).rupiah() == 1712500);
    CHECK(honor_mengajar(Money(1750000), Money(0)).rupiah() == 1750000);
    CHECK(error_code_of([] { honor_mengajar(Money(100), Money(200)); }) == ErrorCode::validation);
}

TEST_CASE("gaji_kotor") {
    CHECK(gaji_kotor(profil(1100000, 480000, 0, 0), Money(1712500)).rupiah() == 3292500);
    CHECK(gaji_kotor(profil(0, 0, 0, 0), Money(0)).rupiah() == 0);
    CHECK(gaji_kotor(profil(1100000, 480000, 250000, 0), Money(1712500)).rupiah() ==
          1100000 + 480000 + 250000 + 0 + 1712500);
    CHECK(gaji_kotor(profil(1100000, 480000, 250000, 0), Money(1712500)).rupiah() == 3542500);
}

TEST_CASE("gaji_bersih") {
    CHECK(gaji_bersih(Money(3292500), Money(5000), Money(255000), Money(0)).rupiah() == 3292500 - 5000 - 255000);
    CHECK(gaji_bersih(Money(3292500), Money(5000), Money(255000), Money(0)).rupiah() == 3032500);
    CHECK(gaji_bersih(Money(3292500), Money(0), Money(0), Money(0)).rupiah() == 3292500);
    CHECK(error_code_of([] { gaji_bersih(Money(100), Money(200), Money(0), Money(0)); }) == ErrorCode::validation);
}

TEST_CASE("create_slip on the reference inputs") {
    Store s = seeded_store();
    SlipGaji slip = create_slip(s, reference_input());
    CHECK(slip.no_slip == 1);
    CHECK(slip.periode.str() == "2006-06");
    CHECK(slip.nama_dosen == "Leon Andretti Abdillah");
    CHECK(slip.gapok.rupiah() == 1100000);
    CHECK(slip.tunj_fa.rupiah() == 480000);
    CHECK(slip.sks_mgjr == 100);
    CHECK(slip.hon_mgjr.rupiah() == 1712500);
    CHECK(slip.gaji_bersih.rupiah() == 3032500);
    CHECK(s.get_slip(1) == slip);

    CHECK(error_code_of([&] { create_slip(s, reference_input()); }) == ErrorCode::conflict);
    auto in = reference_input();
    in.nii = "404";
    CHECK(error_code_of([&] { create_slip(s, in); }) == ErrorCode::not_found);
}

TEST_CASE("paper-compat reports gross as net") {
    Store s = seeded_store();
    GajiBreakdown std_b = preview(s, reference_input());
    GajiBreakdown compat = preview(s, reference_input(), NetMode::paper_compat);
    CHECK(std_b.honor_kotor.rupiah() == 1750000);
    CHECK(std_b.hon_mgjr.rupiah() == 1712500);
    CHECK(std_b.gaji_kotor.rupiah() == 3292500);
    CHECK(std_b.gaji_bersih.rupiah() == 3032500);
    CHECK(compat.gaji_bersih.rupiah() == 3292500);
    CHECK(compat.honor_kotor == std_b.honor_kotor);
    CHECK(compat.hon_mgjr == std_b.hon_mgjr);
    CHECK(compat.gaji_kotor == std_b.gaji_kotor);

    SlipGaji slip = create_slip(s, reference_input());
    CHECK(displayed_net(slip, NetMode::paper_compat).rupiah() == 3292500);
    CHECK(displayed_net(slip, NetMode::standard).rupiah() == 3032500);
}

TEST_CASE("preview rejects tax above the honorarium") {
    Store s = seeded_store();
    auto in = reference_input();
    in.pajak = Money(1750001);
    CHECK(error_code_of([&] { preview(s, in); }) == ErrorCode::validation);
    in.pajak = Money(1750000);
    CHECK(preview(s, in).hon_mgjr.rupiah() == 0);
}

TEST_CASE("random slips re-sum and survive master edits") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        payroll::testing::RandomOps ops(seed * 7919);
        Store s = seeded_store();
        std::vector<SlipGaji> made;
        for (int i = 0; i < 30; ++i) {
            try {
                made.push_back(create_slip(s, ops.random_input()));
            } catch (const Error&) {
            }
        }
        for (const auto& slip : made) CHECK(oracle_net(slip) == slip.gaji_bersih.rupiah());
        Store::GajiTable before = s.gaji();
        const Store original = s;
        for (MasterKind k : kMasterKinds)
            for (const auto& [id, row] : original.masters(k))
                s.update_master(k, id, row.nama, Money(row.tarif.rupiah() + 1234));
        CHECK(s.gaji() == before);
    }
}

TEST_CASE("net is monotone in tariffs, sks and deductions") {
    std::mt19937_64 rng(11);
    auto r = [&](int hi) { return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi)); };
    for (int i = 0; i < 500; ++i) {
        DosenProfilTarif p{"n", "n", Money(100'000 + r(2'000'000)), Money(r(600'000)), Money(r(300'000)), Money(r(300'000)),
                           Money(r(30'000))};
        GajiInput in{.periode = canonical_periode("2006-06"), .nii = "n"};
        in.sks_mgjr = r(120);
        in.pajak = Money(0);
        in.pot_kop = Money(r(10'000));
        in.arisan = Money(r(10'000));
        in.pot_lain = Money(r(10'000));
        std::int64_t base = compute(p, in).gaji_bersih.rupiah();

        auto more_pay = p;
        more_pay.gapok += Money(1 + r(1000));
        CHECK(compute(more_pay, in).gaji_bersih.rupiah() >= base);
        more_pay = p;
        more_pay.tarif_mgjr += Money(1 + r(1000));
        CHECK(compute(more_pay, in).gaji_bersih.rupiah() >= base);
        auto more_sks = in;
        more_sks.sks_mgjr += 1 + r(10);
        CHECK(compute(p, more_sks).gaji_bersih.rupiah() >= base);
        auto more_cut = in;
        more_cut.arisan += Money(1 + r(1000));
        CHECK(compute(p, more_cut).gaji_bersih.rupiah() <= base);
        more_cut = in;
        more_cut.pot_kop += Money(1 + r(1000));
        CHECK(compute(p, more_cut).gaji_bersih.rupiah() <= base);
    }
}
