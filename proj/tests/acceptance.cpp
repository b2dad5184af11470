// Acceptance suite: one line per criterion, exact arithmetic throughout
// (tolerance identically zero).  Exit code is the number of failures.

#include <chrono>
#include <iostream>
#include <sstream>

#include "cyclochar/cocycles.hpp"
#include "cyclochar/verify.hpp"

using namespace cyclochar;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what,
            const std::string& note = "") {
    std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " - "
              << what << "\n";
    if (!note.empty())
        std::cout << "             note: " << note << "\n";
    if (!pass)
        ++failures;
}

template <class F>
auto timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    auto v = f();
    auto t1 = std::chrono::steady_clock::now();
    std::cerr << "  ["
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
              << " ms]\n";
    return v;
}

}  // namespace

int main() {
    std::cout << "acceptance suite: exact symbolic checks, codimensions 1 and 2\n";

    /* 1. coefficient systems */
    {
        bool pass = false;
        std::string note;
        try {
            const Codim2Solve s = timed([] { return codim2_solve(); });
            pass = s.alpha_row_equivalent && s.hochschild_row_equivalent &&
                   s.cyclic_rows_contained && s.joint_row_equivalent &&
                   s.beta_solution_matches && s.gamma_solution_matches;
            note = "V2-cyclicity reduces to alpha_1 = alpha_2; Hochschild system exactly "
                   "row-equivalent; cyclic rows contained in the displayed span (the "
                   "displayed system carries one extra rank from a pattern the symmetric "
                   "lower pair of d^i_{jk} identifies); joint system row-equivalent; "
                   "joint solution = the displayed beta values; gamma solve = the "
                   "displayed gamma values";
        } catch (const std::exception& e) {
            note = e.what();
        }
        report(1, pass, "mechanically extracted coefficient systems and their solutions",
               note);
    }

    /* 2. the codimension-2 cocycle of the main theorem */
    {
        bool pass = false;
        std::string note;
        try {
            const Codim2Cocycle c = codim2_cocycle(codim2_solve());
            const EquivariantModel& M = equivariant_model(2);
            pass = c.phi.flags.at("matches_display") && c.phi.flags.at("b_closed") &&
                   c.phi.flags.at("cyclic") &&
                   (M.twisted_b(c.phi_prime, false) == c.varphi_s);
            note = "b(phi) = 0, t(phi) = phi, b(phi') = the s-part, all exact; phi' is "
                   "the negative of the displayed shape (recorded sign convention)";
        } catch (const std::exception& e) {
            note = e.what();
        }
        report(2, pass, "the displayed codimension-2 twisted cyclic cocycle", note);
    }

    /* 3. the codimension-1 suite */
    {
        bool pass = false;
        std::string note;
        try {
            CocycleBundle b = codim1_cocycle();
            pass = b.flags.at("equivariant") && b.flags.at("b_closed") &&
                   b.flags.at("cyclic");
        } catch (const std::exception& e) {
            note = e.what();
        }
        report(3, pass, "equivariance, Hochschild-closedness and cyclicity of phi_0 - phi_1",
               note);
    }

    /* 4. the transverse fundamental cocycle */
    {
        bool pass1 = false, pass2 = false;
        std::string note;
        try {
            CocycleBundle b1 = transverse_fundamental_bundle(1);
            pass1 = b1.flags.at("matches_display") && b1.flags.at("b_closed") &&
                    b1.flags.at("cyclic");
            CocycleBundle b2 = timed([] { return transverse_fundamental_bundle(2); });
            pass2 = b2.flags.at("b_closed") && b2.flags.at("cyclic");
            std::ostringstream os;
            os << "n=1 equals the three-term display and is b-closed, t-invariant; "
                  "n=2 (720 permutations, m=6) is b-closed and t-invariant with "
               << b2.elementary.size() << " canonical terms";
            note = os.str();
        } catch (const std::exception& e) {
            note = e.what();
        }
        report(4, pass1 && pass2, "the fundamental cocycle at n = 1 and n = 2", note);
    }

    /* 5. remark 4.2 */
    {
        bool pass = false;
        std::string note;
        try {
            CharacteristicClasses cc = characteristic_classes(1);
            pass = cc.classes.at(0).flags.at("equals_minus_GV") &&
                   cc.remark42_sign.has_value();
            if (cc.remark42_sign)
                note = std::string("realized sign: chi(class) - TF = ") +
                       (*cc.remark42_sign > 0 ? "+" : "-") + "1/2 b(d1 Y^2)";
        } catch (const std::exception& e) {
            note = e.what();
        }
        report(5, pass,
               "chi_phi(theta) = -d1 and chi_phi(1xY + 1/2 theta x Y^2) - TF = "
               "(+-)1/2 b(d1 Y^2)",
               note);
    }

    /* 6. the HC(K,V) generators */
    {
        bool pass = true;
        std::string note;
        try {
            for (int n : {1, 2})
                for (const auto& g : hcK_generators(n)) {
                    if (g.name == "TFK")
                        pass = pass && g.flags.at("b_closed_E1") && g.flags.at("cyclic_E1");
                    else
                        pass = pass && g.flags.at("b_closed") && g.flags.at("cyclic");
                    pass = pass && g.flags.at("mu_image");
                }
            note = "all listed generators b-closed and cyclic (the codim-2 fundamental "
                   "one modulo the V-degree filtration); mu-images equal the listed "
                   "Poincare duals exactly";
        } catch (const std::exception& e) {
            pass = false;
            note = e.what();
        }
        report(6, pass, "generators of HC(U(gl_n), V) for n = 1, 2", note);
    }

    /* 7. the section-4.2 emissions */
    {
        bool pass = true;
        std::string note;
        try {
            CharacteristicClasses cc = timed([] { return characteristic_classes(2); });
            int displays = 0;
            for (const auto& b : cc.classes) {
                pass = pass && b.flags.at("b_closed") && b.flags.at("cyclic");
                if (b.flags.count("matches_display")) {
                    pass = pass && b.flags.at("matches_display");
                    ++displays;
                }
            }
            pass = pass && (displays == 3) && (cc.classes.size() == 5);
            note = "chi(R2), chi(R3), chi(R4) match the displayed term multisets "
                   "exactly; chi(GV), chi(R1) pass the intrinsic checks (term "
                   "comparison deferred per the undefined mu^k index maps)";
        } catch (const std::exception& e) {
            pass = false;
            note = e.what();
        }
        report(7, pass, "the codimension-2 characteristic cocycles", note);
    }

    /* 8. the homological base */
    {
        bool pass = true;
        std::string note;
        try {
            for (int n : {1, 2}) {
                LieAlgebraData g = make_gl(n);
                WeilComplex W{g, static_cast<std::size_t>(n)};
                for (const auto& k : weil_basis(g, n))
                    pass = pass &&
                           W.differential(W.differential(WeilCochain::basis(k))).is_zero();
                WeilCohomology H = compute_weil_cohomology(g, n, vey_basis(n));
                if (n == 1)
                    pass = pass && (H.betti == std::vector<std::size_t>{1, 0, 0, 1});
                if (n == 2)
                    pass = pass && (H.representatives.size() == 6);
            }
            note = "d^2 = 0 exhaustively on both truncated complexes; H(W(gl_1)) is "
                   "spanned by the two listed classes; the six Vey classes are closed "
                   "and independent (and in fact span)";
        } catch (const std::exception& e) {
            pass = false;
            note = e.what();
        }
        report(8, pass, "the truncated Weil complexes and the Vey classes", note);
    }

    /* 9. structural property suites */
    {
        bool pass = true;
        std::string note;
        try {
            TaskOptions o;
            o.seed = 1;
            for (const char* id : {"hopf-axioms", "mpi", "sayd", "lie-sayd", "mu-antisym"})
                pass = pass && run_task(id, o).pass;
            pass = pass && timed([&] { return run_task("identity-suite", o); }).pass;
            // b^2 = B^2 = bB + Bb = 0 up to degree 4 on the documented seeded sets
            for (int n : {1, 2}) {
                HopfCyclicComplex C = HopfCyclicComplex::over_sym(n);
                std::mt19937 rng(400 + n);
                const int max_len = (n == 1) ? 2 : 1;
                for (int trial = 0; trial < 2; ++trial) {
                    Cochain x = random_cochain(C, 4, rng, 2, max_len);
                    pass = pass && C.hochschild_b(C.hochschild_b(x)).is_zero();
                    pass = pass && C.connes_B(C.connes_B(x)).is_zero();
                    pass = pass && (C.connes_B(C.hochschild_b(x)) +
                                    C.hochschild_b(C.connes_B(x)))
                                       .is_zero();
                }
            }
            note = "cocyclic identities with t^{q+1} = id, b^2 = B^2 = bB + Bb = 0 "
                   "(degrees <= 4), SAYD and MPI checks, Hopf axioms, mu o antisym = id, "
                   "all with fixed seeds at n = 1, 2";
        } catch (const std::exception& e) {
            pass = false;
            note = e.what();
        }
        report(9, pass, "randomized structural suites", note);
    }

    std::cout << (failures == 0 ? "acceptance: all criteria PASS"
                                : "acceptance: FAILURES present")
              << "\n";
    return failures;
}
