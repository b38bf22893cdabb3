#include "boxlat/upperset.hpp"

#include <algorithm>

namespace boxlat {

UpperSet::UpperSet(int arity_, Bits members_) : arity(arity_), members(std::move(members_)) {
    int full = (1 << arity) - 1;
    if (arity < 1 || members.size() != (1 << arity))
        fail(errc::precondition_not_met, "upper set carrier mismatch");
    if (members.test(0)) fail(errc::precondition_not_met, "upper set contains the empty set");
    if (!members.test(full)) fail(errc::precondition_not_met, "upper set misses the full set");
    for (int s = 1; s <= full; ++s) {
        if (!members.test(s)) continue;
        for (int i = 0; i < arity; ++i)
            if (!members.test(s | (1 << i)))
                fail(errc::precondition_not_met, "set not upward closed");
    }
}

std::vector<unsigned> UpperSet::minimal_sets() const {
    std::vector<unsigned> mins;
    int full = (1 << arity) - 1;
    for (int s = 1; s <= full; ++s) {
        if (!members.test(s)) continue;
        bool minimal = true;
        for (int i = 0; i < arity && minimal; ++i)
            if ((s >> i) & 1)
                if (members.test(s & ~(1 << i))) minimal = false;
        if (minimal) mins.push_back(unsigned(s));
    }
    return mins;
}

std::string UpperSet::to_string() const {
    std::string out;
    for (unsigned s : minimal_sets()) {
        if (!out.empty()) out += '|';
        for (int i = 0; i < arity; ++i)
            if ((s >> i) & 1) out += char('0' + i);
    }
    return out;
}

UpperSet star(const UpperSet& c) {
    int full = (1 << c.arity) - 1;
    Bits m(1 << c.arity);
    for (int s = 0; s <= full; ++s)
        if (!c.members.test(full & ~s)) m.set(s);
    return UpperSet(c.arity, std::move(m));
}

int eval_polynomial(const UpperSet& c, const std::vector<int>& args, const FiniteLattice& l) {
    if (int(args.size()) != c.arity)
        fail(errc::arity_mismatch, "polynomial expects " + std::to_string(c.arity) + " arguments");
    int result = l.one;
    // meeting over the minimal sets only gives the same value
    for (unsigned s : c.minimal_sets()) {
        int term = l.zero;
        for (int i = 0; i < c.arity; ++i)
            if ((s >> i) & 1) term = l.join(term, args[i]);
        result = l.meet(result, term);
    }
    return result;
}

FreeDistributive free_distributive(int n) {
    if (n < 1 || n > 4) fail(errc::arity_too_large, "free distributive lattice only built for n <= 4");
    int full = (1 << n) - 1;
    int cells = 1 << n;
    std::vector<Bits> members;
    // enumerate all upper subsets of the powerset with the two constraints
    for (uint64_t cand = 0; cand < (1ull << cells); ++cand) {
        if (cand & 1) continue;                       // empty set excluded
        if (!((cand >> full) & 1)) continue;          // full set required
        bool upward = true;
        for (int s = 1; s <= full && upward; ++s) {
            if (!((cand >> s) & 1)) continue;
            for (int i = 0; i < n; ++i)
                if (!((cand >> (s | (1 << i))) & 1)) {
                    upward = false;
                    break;
                }
        }
        if (!upward) continue;
        Bits m(cells);
        for (int s = 0; s <= full; ++s)
            if ((cand >> s) & 1) m.set(s);
        members.push_back(std::move(m));
    }
    std::sort(members.begin(), members.end(), [](const Bits& a, const Bits& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a < b;
    });

    FreeDistributive fd;
    fd.elems.reserve(members.size());
    std::vector<std::string> labels;
    for (auto& m : members) {
        fd.elems.emplace_back(n, m);
        labels.push_back(fd.elems.back().to_string());
    }
    fd.lat = lattice_from_order("FD(" + std::to_string(n) + ")", std::move(labels),
                                [&](int i, int j) {
                                    return fd.elems[i].members.subset_of(fd.elems[j].members);
                                });
    fd.generator_idx.assign(n, -1);
    for (int g = 0; g < n; ++g) {
        Bits m(cells);
        for (int s = 0; s <= full; ++s)
            if ((s >> g) & 1) m.set(s);
        for (int i = 0; i < int(fd.elems.size()); ++i)
            if (fd.elems[i].members == m) fd.generator_idx[g] = i;
    }
    return fd;
}

}  // namespace boxlat
