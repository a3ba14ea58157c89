#include "quandle/io.hpp"

#include <sstream>

#include <json.hpp>

namespace quandle {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string strip_comments(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    bool in_comment = false;
    for (char c : text) {
        if (c == '#') in_comment = true;
        if (c == '\n') in_comment = false;
        if (!in_comment) out += c;
    }
    return out;
}

FiniteQuandle parse_text(const std::string& text) {
    std::istringstream in(strip_comments(text));
    long long n = 0;
    if (!(in >> n)) throw FormatError("expected the cardinality n on the first line");
    if (n < 1 || n > 10000) throw FormatError("unreasonable cardinality: " + std::to_string(n));
    Table table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (long long x = 0; x < n; ++x)
        for (long long y = 0; y < n; ++y)
            if (!(in >> table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]))
                throw FormatError("table ended early: expected " + std::to_string(n * n) +
                                  " entries");
    std::string trailing;
    if (in >> trailing) throw FormatError("trailing content after the table: '" + trailing + "'");
    return FiniteQuandle::from_table_unchecked(table);
}

FiniteQuandle parse_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw FormatError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("table"))
        throw FormatError("JSON quandle needs fields \"n\" and \"table\"");
    if (!j["n"].is_number_integer()) throw FormatError("JSON field \"n\" must be an integer");
    long long n = j["n"].get<long long>();
    if (n < 1 || n > 10000) throw FormatError("unreasonable cardinality: " + std::to_string(n));
    if (!j["table"].is_array() || j["table"].size() != static_cast<std::size_t>(n))
        throw FormatError("JSON field \"table\" must be an array of n rows");
    Table table;
    for (const auto& row : j["table"]) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            throw FormatError("JSON table row must be an array of n integers");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw FormatError("JSON table entry must be an integer");
            r.push_back(v.get<int>());
        }
        table.push_back(std::move(r));
    }
    return FiniteQuandle::from_table_unchecked(table);
}

} // namespace

std::string serialize(const FiniteQuandle& q) {
    std::string out = std::to_string(q.size()) + "\n";
    for (int x = 0; x < q.size(); ++x) {
        for (int y = 0; y < q.size(); ++y) {
            if (y) out += ' ';
            out += std::to_string(q.sym(x, y));
        }
        out += '\n';
    }
    return out;
}

std::string serialize_json(const FiniteQuandle& q) {
    ordered_json j;
    j["n"] = q.size();
    j["table"] = q.table();
    return j.dump();
}

FiniteQuandle parse(const std::string& text, bool raw) {
    std::size_t i = text.find_first_not_of(" \t\r\n");
    if (i == std::string::npos) throw FormatError("empty input");
    FiniteQuandle q = (text[i] == '{') ? parse_json(text) : parse_text(text);
    if (!raw) {
        AxiomReport rep = q.verify();
        if (!rep.all_ok()) throw AxiomError(std::move(rep));
    }
    return q;
}

} // namespace quandle
