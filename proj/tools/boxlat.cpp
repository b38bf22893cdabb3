#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "boxlat/boxprod.hpp"
#include "boxlat/congruence.hpp"
#include "boxlat/constructions.hpp"
#include "boxlat/expr.hpp"
#include "boxlat/grid.hpp"
#include "boxlat/io.hpp"
#include "boxlat/verify.hpp"

using namespace boxlat;

namespace {

struct Output {
    bool json = false, dot = false;
    std::string out_path;

    void emit(const FiniteLattice& l) const {
        std::string payload;
        if (json) payload += to_json(l);
        if (dot) payload += to_dot(l);
        if (payload.empty()) return;
        if (out_path.empty()) {
            std::cout << payload;
        } else {
            std::ofstream f(out_path);
            if (!f) fail(errc::io_error, "cannot write " + out_path);
            f << payload;
        }
    }
};

void summarize(const FiniteLattice& l) {
    std::cout << l.name << ": " << l.n << " elements, height " << l.height()
              << ", zero=" << l.labels[l.zero] << ", one=" << l.labels[l.one]
              << (is_distributive(l) ? ", distributive" : "") << "\n";
}

int run_verify(const std::string& check, const std::vector<std::string>& exprs, int max_size) {
    Evaluator ev;
    auto lattice_arg = [&](size_t i) {
        if (i >= exprs.size()) fail(errc::arity_mismatch, check + " needs more lattice arguments");
        return ev.evaluate(exprs[i]);
    };
    std::vector<VerificationReport> reports;
    if (check == "all") {
        reports = verify_all(max_size);
    } else if (check == "separations") {
        reports.push_back(verify_separations());
    } else if (check == "bimorphism") {
        auto a = lattice_arg(0), b = lattice_arg(1), c = lattice_arg(2);
        reports.push_back(verify_universal_bimorphism(*a, *b, *c));
    } else {
        auto a = lattice_arg(0), b = lattice_arg(1);
        if (check == "identities")
            reports.push_back(verify_identities(*a, *b));
        else if (check == "closure")
            reports.push_back(verify_closure_agreement(*a, *b));
        else if (check == "join")
            reports.push_back(verify_join_polynomials(*a, *b));
        else if (check == "iso-zero")
            reports.push_back(verify_iso_zero(*a, *b));
        else if (check == "iso-bounded")
            reports.push_back(verify_iso_bounded(*a, *b));
        else if (check == "iso-unit")
            reports.push_back(verify_iso_unit(*a, *b));
        else if (check == "capped")
            reports.push_back(verify_capped(*a, *b));
        else if (check == "minimal")
            reports.push_back(verify_minimality(*a, *b));
        else if (check == "collapse")
            reports.push_back(verify_distributive_collapse(*a, *b));
        else if (check == "embedding")
            reports.push_back(verify_embedding(*a, *b));
        else if (check == "duality")
            reports.push_back(verify_duality(*a, *b));
        else
            fail(errc::unknown_operator, "no verify check named '" + check + "'");
    }
    bool all_pass = true;
    for (auto& r : reports) {
        std::cout << r.line() << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-lattice workbench: box, tensor and lattice tensor products"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    int max_elements = 4096;
    if (const char* env = std::getenv("BOXLAT_MAX_ELEMENTS")) max_elements = std::atoi(env);
    uint64_t seed = config().seed;
    Output out;
    app.add_option("--max-elements", max_elements, "size cap for constructed lattices");
    app.add_option("--seed", seed, "seed for sampled checks");
    app.add_flag("--json", out.json, "emit the result lattice as JSON");
    app.add_flag("--dot", out.dot, "emit the result lattice as DOT");
    app.add_option("--out", out.out_path, "write exports to a file instead of stdout");

    std::string expr_a, expr_b, expr_c, check;
    bool angle = false, check_capped = false;
    int max_size = 5;

    auto* show = app.add_subcommand("show", "evaluate an expression and summarize it");
    show->add_option("expr", expr_a)->required();

    auto* boxc = app.add_subcommand("box", "box product of two lattices");
    boxc->add_option("A", expr_a)->required();
    boxc->add_option("B", expr_b)->required();

    auto* ltpc = app.add_subcommand("ltp", "lattice tensor product of two lattices");
    ltpc->add_option("A", expr_a)->required();
    ltpc->add_option("B", expr_b)->required();

    auto* tenc = app.add_subcommand("tensor", "semilattice tensor product (all bi-ideals)");
    tenc->add_option("A", expr_a)->required();
    tenc->add_option("B", expr_b)->required();
    tenc->add_flag("--check-capped", check_capped, "verify every element is a union of tensors");

    auto* conc = app.add_subcommand("con", "congruence lattice");
    conc->add_option("expr", expr_a)->required();

    auto* m3c = app.add_subcommand("m3", "triple construction over the diamond");
    m3c->add_option("L", expr_a)->required();
    m3c->add_flag("--angle", angle, "use the angle equations");

    auto* n5c = app.add_subcommand("n5", "triple construction over the pentagon");
    n5c->add_option("L", expr_a)->required();
    n5c->add_flag("--angle", angle, "use the angle equations");

    auto* embc = app.add_subcommand("embed", "congruence-preserving embedding report");
    embc->add_option("S", expr_a)->required();
    embc->add_option("L", expr_b)->required();

    auto* verc = app.add_subcommand("verify", "run a verification check");
    verc->add_option("check", check)->required();
    std::vector<std::string> verify_args;
    verc->add_option("lattices", verify_args, "lattice expressions for the check");
    verc->add_option("--max-size", max_size, "catalog size bound for 'all'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    config().max_elements = max_elements;
    config().seed = seed;

    try {
        Evaluator ev;
        if (*show) {
            auto l = ev.evaluate(expr_a);
            summarize(*l);
            out.emit(*l);
        } else if (*boxc || *ltpc) {
            auto a = ev.evaluate(expr_a), b = ev.evaluate(expr_b);
            BoxProduct bp = *boxc ? box_product(*a, *b) : lattice_tensor_product(*a, *b);
            summarize(bp.lat);
            for (int i = 0; i < bp.lat.n; ++i)
                std::cout << "  " << bp.lat.labels[i] << " = " << bp.describe(i) << "\n";
            out.emit(bp.lat);
        } else if (*tenc) {
            auto a = ev.evaluate(expr_a), b = ev.evaluate(expr_b);
            TensorLattice t = tensor_product(*a, *b);
            summarize(t.lat);
            for (int i = 0; i < t.lat.n; ++i)
                std::cout << "  " << t.lat.labels[i] << " = " << t.grid.pair_list(t.elems[i])
                          << "\n";
            if (check_capped)
                std::cout << (is_capped(t) ? "capped: every element is a union of pure tensors"
                                           : "NOT capped")
                          << "\n";
            out.emit(t.lat);
        } else if (*conc) {
            auto l = ev.evaluate(expr_a);
            ConLattice con = congruence_lattice(*l);
            summarize(con.lat);
            for (int i = 0; i < con.lat.n; ++i)
                std::cout << "  " << con.lat.labels[i] << " = " << con.elems[i].to_string() << "\n";
            out.emit(con.lat);
        } else if (*m3c || *n5c) {
            auto l = ev.evaluate(expr_a);
            TripleLattice t = *m3c ? (angle ? m3_angle(*l) : m3_of(*l))
                                   : (angle ? n5_angle(*l) : n5_of(*l));
            summarize(t.lat);
            out.emit(t.lat);
        } else if (*embc) {
            auto s = ev.evaluate(expr_a), l = ev.evaluate(expr_b);
            EmbeddingReport rep = cong_preserving_embedding(*s, *l);
            std::cout << (rep.ok ? "ok: " : "FAIL: ") << rep.detail << "\n";
            return rep.ok ? 0 : 1;
        } else if (*verc) {
            return run_verify(check, verify_args, max_size);
        }
    } catch (const error& e) {
        std::cerr << e.what() << "\n";
        errc c = e.code();
        bool usage = c == errc::syntax_error || c == errc::unknown_operator ||
                     c == errc::arity_mismatch || c == errc::unknown_name;
        return usage ? 2 : 1;
    }
    return 0;
}
