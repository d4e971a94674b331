#include "payroll/domain.hpp"

#include "payroll/error.hpp"

#include <limits>

namespace payroll {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string quoted(std::string_view s) { return "\"" + std::string(s) + "\""; }

[[noreturn]] void bad_money(std::string_view text, std::string_view why) {
    fail(ErrorCode::validation, "invalid money value " + quoted(text) + ": " + std::string(why));
}

int two_digits(std::string_view s, std::size_t pos) { return (s[pos] - '0') * 10 + (s[pos + 1] - '0'); }

bool all_digits(std::string_view s) {
    for (char c : s)
        if (!is_digit(c)) return false;
    return !s.empty();
}

int days_in_month(int year, int month) {
    static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
    return month == 2 && leap ? 29 : kDays[month - 1];
}

}  // namespace

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::validation: return "validation";
        case ErrorCode::not_found: return "not_found";
        case ErrorCode::conflict: return "conflict";
        case ErrorCode::referential_conflict: return "referential_conflict";
        case ErrorCode::io: return "io";
        case ErrorCode::usage: return "usage";
        case ErrorCode::internal: return "internal";
    }
    return "internal";
}

Money::Money(std::int64_t rupiah) : amount_(rupiah) {
    if (rupiah < 0) fail(ErrorCode::validation, "negative money amount " + std::to_string(rupiah));
}

Money Money::operator+(Money other) const {
    std::int64_t out = 0;
    if (__builtin_add_overflow(amount_, other.amount_, &out)) fail(ErrorCode::validation, "money overflow");
    return Money(out);
}

Money Money::operator-(Money other) const {
    if (other.amount_ > amount_)
        fail(ErrorCode::validation, "money underflow: " + std::to_string(amount_) + " - " +
                                        std::to_string(other.amount_) + " is negative");
    return Money(amount_ - other.amount_);
}

Money Money::times(std::int64_t factor) const {
    if (factor < 0) fail(ErrorCode::validation, "negative money factor " + std::to_string(factor));
    std::int64_t out = 0;
    if (__builtin_mul_overflow(amount_, factor, &out)) fail(ErrorCode::validation, "money overflow");
    return Money(out);
}

Money parse_money(std::string_view text) {
    std::string_view body = text;
    bool prefixed = body.starts_with("Rp");
    if (prefixed) body.remove_prefix(2);
    if (body.starts_with('-')) bad_money(text, "negative value");
    if (body.empty()) bad_money(text, "no digits");

    std::string digits;
    if (body.find('.') != std::string_view::npos) {
        if (!prefixed) bad_money(text, "thousands separators require the Rp prefix");
        std::size_t group = 0;
        std::size_t start = 0;
        while (true) {
            std::size_t dot = body.find('.', start);
            std::string_view part = body.substr(start, dot == std::string_view::npos ? dot : dot - start);
            bool first = group == 0;
            if (!all_digits(part) || (first ? part.size() > 3 : part.size() != 3))
                bad_money(text, "malformed digit group " + quoted(part));
            digits += part;
            ++group;
            if (dot == std::string_view::npos) break;
            start = dot + 1;
        }
    } else {
        if (!all_digits(body)) bad_money(text, "not an integer");
        digits = body;
    }

    std::int64_t value = 0;
    for (char c : digits) {
        if (__builtin_mul_overflow(value, 10, &value) || __builtin_add_overflow(value, c - '0', &value))
            bad_money(text, "overflow");
    }
    return Money(value);
}

std::string format_money(Money m) {
    std::string digits = std::to_string(m.rupiah());
    std::string out = "Rp";
    std::size_t lead = digits.size() % 3;
    if (lead == 0) lead = 3;
    out += digits.substr(0, lead);
    for (std::size_t i = lead; i < digits.size(); i += 3) {
        out += '.';
        out += digits.substr(i, 3);
    }
    return out;
}

Periode canonical_periode(std::string_view text) {
    auto bad = [&](std::string_view why) -> Periode {
        fail(ErrorCode::validation, "invalid periode " + quoted(text) + ": " + std::string(why));
    };
    std::string year;
    int month = 0;
    if (text.size() == 7 && text[4] == '-') {
        if (!all_digits(text.substr(0, 4)) || !all_digits(text.substr(5, 2))) return bad("expected YYYY-MM");
        year = text.substr(0, 4);
        month = two_digits(text, 5);
    } else if (text.size() == 10 && text[2] == '/' && text[5] == '/') {
        if (!all_digits(text.substr(0, 2)) || !all_digits(text.substr(3, 2)) || !all_digits(text.substr(6, 4)))
            return bad("expected DD/MM/YYYY");
        year = text.substr(6, 4);
        month = two_digits(text, 3);
        int day = two_digits(text, 0);
        if (month >= 1 && month <= 12 && (day < 1 || day > days_in_month(std::stoi(year), month)))
            return bad("day out of range");
    } else {
        return bad("expected YYYY-MM or DD/MM/YYYY");
    }
    if (month < 1 || month > 12) return bad("month out of range");
    if (year == "0000") return bad("year out of range");
    std::string canon = year + "-" + (month < 10 ? "0" : "") + std::to_string(month);
    return Periode(std::move(canon));
}

std::size_t char_count(std::string_view utf8) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < utf8.size();) {
        auto lead = static_cast<unsigned char>(utf8[i]);
        std::size_t len = lead < 0x80 ? 1 : (lead >> 5) == 0x6 ? 2 : (lead >> 4) == 0xE ? 3 : (lead >> 3) == 0x1E ? 4 : 0;
        if (len == 0 || i + len > utf8.size()) fail(ErrorCode::validation, "text is not valid UTF-8");
        for (std::size_t k = 1; k < len; ++k)
            if ((static_cast<unsigned char>(utf8[i + k]) & 0xC0) != 0x80)
                fail(ErrorCode::validation, "text is not valid UTF-8");
        i += len;
        ++count;
    }
    return count;
}

void validate_width(std::string_view text, std::size_t limit, std::string_view field) {
    if (text.empty()) fail(ErrorCode::validation, std::string(field) + " must not be empty");
    std::size_t n = char_count(text);
    if (n > limit)
        fail(ErrorCode::validation, std::string(field) + " is " + std::to_string(n) + " characters; limit is " +
                                        std::to_string(limit));
}

Id Dosen::ref(MasterKind kind) const noexcept {
    switch (kind) {
        case MasterKind::golongan: return golongan;
        case MasterKind::jfa: return jab_fa;
        case MasterKind::jstr: return jab_str;
        case MasterKind::jkhs: return jab_khs;
        case MasterKind::pendidikan: return pendidikan;
    }
    return 0;
}

}  // namespace payroll
