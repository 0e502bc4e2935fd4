#include "latwalk/io.hpp"

#include <vector>

namespace latwalk::io {

namespace {

void flatten(const Record& rec, const std::string& prefix,
             std::vector<std::pair<std::string, const Record*>>& out) {
    if (rec.is_object()) {
        for (auto it = rec.begin(); it != rec.end(); ++it) {
            const std::string key =
                prefix.empty() ? it.key() : prefix + "." + it.key();
            flatten(it.value(), key, out);
        }
    } else if (rec.is_array()) {
        std::size_t i = 0;
        for (const auto& item : rec)
            flatten(item, prefix + "." + std::to_string(i++), out);
    } else {
        out.emplace_back(prefix, &rec);
    }
}

std::string cell_text(const Record& value) {
    std::string text =
        value.is_string() ? value.get<std::string>() : value.dump();
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

std::string json_line(const Record& rec) { return rec.dump() + "\n"; }

std::string csv_header(const Record& rec) {
    std::vector<std::pair<std::string, const Record*>> cells;
    flatten(rec, "", cells);
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += cells[i].first;
    }
    return line + "\n";
}

std::string csv_row(const Record& rec) {
    std::vector<std::pair<std::string, const Record*>> cells;
    flatten(rec, "", cells);
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += cell_text(*cells[i].second);
    }
    return line + "\n";
}

}  // namespace latwalk::io
