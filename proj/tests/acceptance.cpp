// Acceptance suite: one criterion per run line, exact checks, with the
// stated wall-clock budgets enforced. Exit 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "boxlat/boxprod.hpp"
#include "boxlat/congruence.hpp"
#include "boxlat/constructions.hpp"
#include "boxlat/grid.hpp"
#include "boxlat/par.hpp"
#include "boxlat/verify.hpp"

using namespace boxlat;

namespace {

struct Criterion {
    int number;
    std::string title;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

const std::vector<const char*> kPool{"chain(2)", "chain(3)", "boolean(2)", "M3", "N5"};

bool criterion_identities(std::string& detail) {
    bool ok = true;
    for (auto [na, nb] : {std::pair{"M3", "M3"}, {"M3", "N5"}, {"N5", "N5"}, {"chain(3)", "M3"}}) {
        auto r = verify_identities(catalog(na), catalog(nb));
        if (!r.pass) {
            detail = r.subject + " " + r.witness;
            ok = false;
        }
    }
    if (ok) detail = "5 clauses x 4 pairs, all quadruples";
    return ok;
}

bool criterion_closure(std::string& detail) {
    auto r = verify_closure_agreement(catalog("M3"), catalog("N5"), 3);
    detail = r.pass ? r.stats : r.witness;
    return r.pass;
}

bool criterion_join(std::string& detail) {
    auto a = catalog("M3"), b = catalog("N5");
    BoxProduct bp = box_product(a, b);
    const Grid& g = bp.grid;
    // every generator list of size one or two
    std::vector<std::vector<std::pair<int, int>>> lists;
    for (int i = 0; i < g.cells; ++i) {
        lists.push_back({g.unidx(i)});
        for (int j = i + 1; j < g.cells; ++j) lists.push_back({g.unidx(i), g.unidx(j)});
    }
    std::vector<int> idx(lists.size());
    for (size_t i = 0; i < lists.size(); ++i) {
        Bits h = g.full;
        for (auto [x, y] : lists[i]) h &= g.pure_box(x, y);
        idx[i] = bp.index_of(h);
        if (idx[i] < 0) {
            detail = "generator list missing from the enumeration";
            return false;
        }
    }
    size_t pairs = lists.size() * lists.size();
    size_t bad = par::first_violation(pairs, [&](size_t k) {
        size_t i = k / lists.size(), j = k % lists.size();
        return box_join_polynomial(g, lists[i], lists[j]) ==
               bp.elems[bp.lat.join(idx[i], idx[j])];
    });
    detail = std::to_string(lists.size()) + " generator lists, " + std::to_string(pairs) +
             " ordered pairs";
    if (bad != pairs) detail = "mismatch at pair #" + std::to_string(bad);
    return bad == pairs;
}

bool criterion_separations(std::string& detail) {
    auto r = verify_separations();
    detail = r.pass ? "M3 and N5 tensor squares split; the mixed pair coincides" : r.witness;
    return r.pass;
}

bool criterion_iso(std::string& detail) {
    for (auto na : kPool)
        for (auto nb : kPool) {
            auto a = catalog(na), b = catalog(nb);
            for (auto check : {verify_iso_zero, verify_iso_bounded, verify_iso_unit}) {
                auto r = check(a, b);
                if (!r.pass) {
                    detail = r.check + " " + r.subject + ": " + r.witness;
                    return false;
                }
            }
        }
    // the derived simplicity statement
    auto m3 = catalog("M3");
    BoxProduct bp = lattice_tensor_product(m3, m3);
    ConLattice con = congruence_lattice(bp.lat);
    if (!find_isomorphism(con.lat, catalog("chain(2)")).has_value()) {
        detail = "Con(M3 boxtimes M3) is not the two-element chain";
        return false;
    }
    detail = "3 theorems x 25 ordered pairs; M3 boxtimes M3 is simple";
    return true;
}

bool criterion_capped(std::string& detail) {
    for (auto na : kPool)
        for (auto nb : kPool) {
            auto r = verify_capped(catalog(na), catalog(nb));
            if (!r.pass) {
                detail = r.subject + ": " + r.witness;
                return false;
            }
        }
    for (auto nb : {"chain(2)", "chain(3)"}) {
        auto r = verify_minimality(catalog("chain(2)"), catalog(nb));
        if (!r.pass) {
            detail = r.subject + ": " + r.witness;
            return false;
        }
    }
    detail = "(i)-(iv) on 25 pairs; containment in every searched sub-tensor product";
    return true;
}

bool criterion_collapse(std::string& detail) {
    for (auto [na, nb] :
         {std::pair{"chain(3)", "M3"}, {"boolean(2)", "N5"}, {"chain(2)", "N5"}}) {
        auto r = verify_distributive_collapse(catalog(na), catalog(nb));
        if (!r.pass) {
            detail = r.subject + ": " + r.witness;
            return false;
        }
    }
    detail = "tensor and lattice tensor universes equal elementwise";
    return true;
}

bool criterion_embedding(std::string& detail) {
    for (auto nb : {"chain(2)", "chain(3)", "N5"}) {
        auto r = verify_embedding(catalog("M3"), catalog(nb));
        if (!r.pass) {
            detail = r.subject + ": " + r.witness;
            return false;
        }
    }
    detail = "x maps to (0 box x); congruence restriction bijective";
    return true;
}

bool criterion_duality(std::string& detail) {
    for (auto na : {"M3", "N5"}) {
        auto r = verify_duality(catalog(na), catalog("chain(2)"));
        if (!r.pass) {
            detail = r.subject + ": " + r.witness;
            return false;
        }
    }
    detail = "order-reversing bijection; dual boxes land on tensors";
    return true;
}

bool criterion_bimorphism(std::string& detail) {
    auto c2 = catalog("chain(2)");
    for (auto nc : {"chain(2)", "chain(3)"}) {
        auto r = verify_universal_bimorphism(c2, c2, catalog(nc));
        if (!r.pass) {
            detail = r.subject + ": " + r.witness;
            return false;
        }
    }
    detail = "every enumerated bimorphism factors uniquely";
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "fundamental box/circ identities", 1.0, criterion_identities},
        {2, "closure route agreement over M3 x N5", 10.0, criterion_closure},
        {3, "polynomial join equals the least upper bound", 30.0, criterion_join},
        {4, "diamond/pentagon separations with witnesses", 10.0, criterion_separations},
        {5, "congruence isomorphism theorems", 300.0, criterion_iso},
        {6, "capped sub-tensor product and minimality", 120.0, criterion_capped},
        {7, "distributive collapse", 30.0, criterion_collapse},
        {8, "congruence-preserving embedding", 120.0, criterion_embedding},
        {9, "duality bijection", 30.0, criterion_duality},
        {10, "universal bimorphism factorization", 120.0, criterion_bimorphism},
    };

    int failures = 0;
    for (auto& c : criteria) {
        std::string detail;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const error& e) {
            detail = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = secs < c.budget_seconds;
        bool pass = ok && in_budget;
        if (!pass) ++failures;
        std::printf("criterion %02d [%s] %-48s %6.2fs/%gs  %s\n", c.number,
                    pass ? "PASS" : "FAIL", c.title.c_str(), secs, c.budget_seconds,
                    detail.c_str());
        if (ok && !in_budget) std::printf("             time budget exceeded\n");
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
