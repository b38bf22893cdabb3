#include "boxlat/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace boxlat {

std::string to_json(const FiniteLattice& l) {
    nlohmann::json doc;
    doc["name"] = l.name;
    std::vector<std::string> elements = l.labels;
    std::sort(elements.begin(), elements.end());
    doc["elements"] = elements;
    std::vector<std::pair<std::string, std::string>> covers;
    for (auto [x, y] : l.covers()) covers.emplace_back(l.labels[x], l.labels[y]);
    std::sort(covers.begin(), covers.end());
    auto arr = nlohmann::json::array();
    for (auto& [lo, hi] : covers) arr.push_back({lo, hi});
    doc["covers"] = arr;
    return doc.dump(2) + "\n";
}

FiniteLattice lattice_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::io_error, std::string("bad JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("elements") || !doc.contains("covers"))
        fail(errc::io_error, "lattice document needs 'elements' and 'covers'");
    std::string name = doc.value("name", "lattice");
    std::vector<std::string> labels;
    for (auto& e : doc["elements"]) {
        if (!e.is_string()) fail(errc::io_error, "elements must be strings");
        labels.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> covers;
    for (auto& c : doc["covers"]) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
            fail(errc::io_error, "covers must be [lower, upper] label pairs");
        covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    return lattice_from_covers(std::move(name), labels, covers);
}

FiniteLattice load_lattice_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return lattice_from_json(buf.str());
}

std::string to_dot(const FiniteLattice& l) {
    std::ostringstream os;
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') q += '\\';
            q += c;
        }
        return q + "\"";
    };
    os << "digraph " << quote(l.name) << " {\n  rankdir=BT;\n";
    for (int i = 0; i < l.n; ++i)
        os << "  n" << i << " [label=" << quote(l.labels[i]) << "];\n";
    int maxh = 0;
    for (int i = 0; i < l.n; ++i) maxh = std::max(maxh, l.height_of[i]);
    for (int h = 0; h <= maxh; ++h) {
        std::string row;
        for (int i = 0; i < l.n; ++i)
            if (l.height_of[i] == h) row += " n" + std::to_string(i) + ";";
        if (!row.empty()) os << "  { rank=same;" << row << " }\n";
    }
    for (auto [x, y] : l.covers()) os << "  n" << x << " -> n" << y << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace boxlat
