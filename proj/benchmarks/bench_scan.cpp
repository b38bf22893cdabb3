// Times each exhaustive-scan kernel in its serial reference form against the
// OpenMP version on the workloads the verify harness actually runs, and
// checks that both return identical results.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "boxlat/boxprod.hpp"
#include "boxlat/grid.hpp"
#include "boxlat/par.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace boxlat;

namespace {

double time_of(const std::function<size_t()>& f, size_t& result, int reps) {
    double best = 1e100;
    for (int r = 0; r < reps; ++r) {
        auto start = std::chrono::steady_clock::now();
        result = f();
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (s < best) best = s;
    }
    return best;
}

template <class Pred>
void bench(const char* name, size_t n, Pred&& pred, int reps) {
    size_t rs = 0, rp = 0;
    double ts = time_of([&] { return par::first_violation_serial(n, pred); }, rs, reps);
    double tp = time_of([&] { return par::first_violation_parallel(n, pred); }, rp, reps);
    std::printf("%-34s n=%9zu  serial %8.2f ms  parallel %8.2f ms  x%.2f  %s\n", name, n,
                ts * 1e3, tp * 1e3, ts / tp, rs == rp ? "results match" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    int reps = (argc > 1 && !std::strcmp(argv[1], "--quick")) ? 1 : 3;
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both columns run the serial code\n");
#endif

    {
        auto a = catalog("FD(3)"), b = catalog("FD(3)");
        Grid g(a, b);
        size_t na = size_t(a.n), nb = size_t(b.n);
        size_t total = na * na * nb * nb;
        auto pred = [&](size_t i) {
            int a0 = int(i % na), a1 = int((i / na) % na);
            int b0 = int((i / (na * na)) % nb), b1 = int(i / (na * na * nb));
            Bits lhs = g.pure_box(a0, b0) & g.pure_box(a1, b1);
            Bits rhs = g.pure_box(a.meet(a0, a1), b.meet(b0, b1)) | g.pure_circ(a0, b1) |
                       g.pure_circ(a1, b0);
            return lhs == rhs;
        };
        bench("box identity (d), FD(3) x FD(3)", total, pred, reps);
    }

    {
        auto a = catalog("M3"), b = catalog("N5");
        Grid g(a, b);
        int nterms = 2 * g.cells;
        std::vector<std::vector<int>> combos;
        std::vector<int> cur;
        std::function<void(int, int)> gen = [&](int from, int left) {
            if (!cur.empty()) combos.push_back(cur);
            if (!left) return;
            for (int i = from; i < nterms; ++i) {
                cur.push_back(i);
                gen(i + 1, left - 1);
                cur.pop_back();
            }
        };
        gen(0, 3);
        auto pred = [&](size_t ci) {
            Bits u(g.cells);
            std::vector<std::pair<int, int>> boxes, tensors;
            for (int term : combos[ci]) {
                if (term < g.cells) {
                    boxes.push_back(g.unidx(term));
                    u |= g.boxes[term];
                } else {
                    tensors.push_back(g.unidx(term - g.cells));
                    u |= g.tensors[term - g.cells];
                }
            }
            Bits formula = box_closure_formula(g, boxdot_from_terms(g, boxes, {}, tensors));
            return formula == box_closure_oracle(g, u) && formula == box_closure_galois(g, u);
        };
        bench("three-route closure, M3 x N5", combos.size(), pred, reps);
    }

    {
        auto a = catalog("M3"), b = catalog("N5");
        BoxProduct bp = box_product(a, b);
        const Grid& g = bp.grid;
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
        }
        auto pred = [&](size_t k) {
            size_t i = k / lists.size(), j = k % lists.size();
            return box_join_polynomial(g, lists[i], lists[j]) ==
                   bp.elems[bp.lat.join(idx[i], idx[j])];
        };
        bench("polynomial join vs lub, M3 [] N5", lists.size() * lists.size(), pred, reps);
    }

    return 0;
}
