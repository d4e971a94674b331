#include "payroll/csv.hpp"

#include "payroll/error.hpp"

namespace payroll::csv {

std::string write_row(const Row& row) {
    std::string out;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        const std::string& f = row[i];
        if (f.find_first_of(",\"\r\n") == std::string::npos) {
            out += f;
            continue;
        }
        out += '"';
        for (char c : f) {
            if (c == '"') out += '"';
            out += c;
        }
        out += '"';
    }
    out += '\n';
    return out;
}

std::string write(const std::vector<Row>& rows) {
    std::string out;
    for (const auto& r : rows) out += write_row(r);
    return out;
}

std::vector<Record> parse(std::string_view text) {
    std::vector<Record> out;
    std::size_t line = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        Record rec{line, {}};
        std::string field;
        bool done = false;
        while (!done) {
            if (i < text.size() && text[i] == '"') {
                std::size_t open_line = line;
                ++i;
                while (true) {
                    if (i >= text.size())
                        fail(ErrorCode::validation, "line " + std::to_string(open_line) + ": unterminated quoted field");
                    char c = text[i++];
                    if (c == '"') {
                        if (i < text.size() && text[i] == '"') {
                            field += '"';
                            ++i;
                        } else {
                            break;
                        }
                    } else {
                        if (c == '\n') ++line;
                        field += c;
                    }
                }
                if (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r')
                    fail(ErrorCode::validation, "line " + std::to_string(line) + ": text after closing quote");
            } else {
                while (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
                    if (text[i] == '"')
                        fail(ErrorCode::validation, "line " + std::to_string(line) + ": stray quote in unquoted field");
                    field += text[i++];
                }
            }
            rec.fields.push_back(std::move(field));
            field.clear();
            if (i >= text.size()) {
                done = true;
            } else if (text[i] == ',') {
                ++i;
            } else {
                if (text[i] == '\r') ++i;
                if (i < text.size() && text[i] == '\n') ++i;
                ++line;
                done = true;
            }
        }
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace payroll::csv
