#include "boxlat/lattice.hpp"
#include "boxlat/upperset.hpp"

namespace boxlat {

namespace {

// "chain(3)" -> {"chain", 3}; plain names have no argument
bool parse_call(const std::string& s, std::string& head, int& arg) {
    auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')') return false;
    head = s.substr(0, open);
    std::string num = s.substr(open + 1, s.size() - open - 2);
    if (num.empty()) return false;
    for (char c : num)
        if (!isdigit((unsigned char)c)) return false;
    arg = std::stoi(num);
    return true;
}

FiniteLattice make_chain(int k) {
    if (k < 1) fail(errc::unknown_name, "chain length must be positive");
    check_size_cap(k, "chain");
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < k; ++i) {
        labels.push_back(std::to_string(i));
        if (i) covers.emplace_back(i - 1, i);
    }
    return lattice_from_covers("chain(" + std::to_string(k) + ")", std::move(labels), covers);
}

FiniteLattice make_boolean(int k) {
    if (k < 0 || k > 10) fail(errc::unknown_name, "boolean(k) supported for k <= 10");
    check_size_cap(1 << k, "boolean");
    int n = 1 << k;
    std::vector<std::string> labels(n);
    for (int s = 0; s < n; ++s) {
        std::string& l = labels[s];
        for (int i = k - 1; i >= 0; --i) l += char('0' + ((s >> i) & 1));
        if (k == 0) l = "1";
    }
    return lattice_from_order("boolean(" + std::to_string(k) + ")", std::move(labels),
                              [&](int x, int y) { return (x & y) == x; });
}

}  // namespace

FiniteLattice catalog(const std::string& name) {
    if (name == "M3")
        return lattice_from_covers("M3", {"0", "p", "q", "r", "1"},
                                   std::vector<std::pair<std::string, std::string>>{
                                       {"0", "p"}, {"0", "q"}, {"0", "r"},
                                       {"p", "1"}, {"q", "1"}, {"r", "1"}});
    if (name == "N5")
        return lattice_from_covers("N5", {"0", "a", "b", "c", "1"},
                                   std::vector<std::pair<std::string, std::string>>{
                                       {"0", "c"}, {"c", "a"}, {"a", "1"},
                                       {"0", "b"}, {"b", "1"}});
    std::string head;
    int arg = 0;
    if (parse_call(name, head, arg)) {
        if (head == "chain") return make_chain(arg);
        if (head == "boolean") return make_boolean(arg);
        if (head == "FD" || head == "fd") return free_distributive(arg).lat;
    }
    fail(errc::unknown_name, "no catalog lattice named '" + name + "'");
}

}  // namespace boxlat
