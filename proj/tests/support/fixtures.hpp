#pragma once

// Shared test helpers: reference dataset inputs, temp files, and the
// independent oracles the suites compare the engine against.

#include "payroll/engine.hpp"
#include "payroll/error.hpp"
#include "payroll/seed.hpp"
#include "payroll/store.hpp"

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>

namespace payroll::testing {

inline constexpr const char* kLeonNii = "020209152";

/// The Form Gaji inputs for 020209152 in June 2006.
inline engine::GajiInput reference_input() {
    engine::GajiInput in{.periode = canonical_periode("2006-06"), .nii = kLeonNii};
    in.sks_mgjr = 100;
    in.pajak = Money(37500);
    in.pot_kop = Money(5000);
    in.arisan = Money(255000);
    in.pot_lain = Money(0);
    return in;
}

inline Store seeded_store() {
    Store s;
    seed_reference_data(s);
    return s;
}

/// Net recomputed from a slip's snapshot columns with plain integer
/// arithmetic, independent of Money and the engine.
inline std::int64_t oracle_net(const SlipGaji& s) {
    std::int64_t gross = s.gapok.rupiah() + s.tunj_fa.rupiah() + s.tunj_str.rupiah() + s.tunj_khs.rupiah() +
                         s.hon_mgjr.rupiah();
    return gross - s.pot_kop.rupiah() - s.arisan.rupiah() - s.pot_lain.rupiah();
}

/// Grouping by walking the digits from the right.
inline std::string oracle_format_money(std::int64_t v) {
    std::string digits = std::to_string(v);
    std::string rev;
    int n = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (n && n % 3 == 0) rev += '.';
        rev += *it;
        ++n;
    }
    return "Rp" + std::string(rev.rbegin(), rev.rend());
}

/// Scratch directory removed on destruction.
class TempDir {
public:
    TempDir() {
        static std::mt19937_64 rng{std::random_device{}()};
        path_ = std::filesystem::temp_directory_path() / ("payroll-test-" + std::to_string(rng()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

template <typename Fn>
ErrorCode error_code_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    throw std::runtime_error("expected payroll::Error, nothing was thrown");
}

}  // namespace payroll::testing
