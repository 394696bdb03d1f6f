// Acceptance suite: every check is exact rational arithmetic with zero
// tolerance. One pass/fail line is printed per criterion; the process exits
// nonzero if any criterion fails.

#include "leibniz/commands.hpp"
#include "leibniz/rng.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <vector>

using namespace leibniz;

namespace {

constexpr std::uint64_t kSeed = 42;

Matrix single_entry(std::size_t n, std::size_t r, std::size_t c) {
    Matrix m(n, n);
    m(r, c) = Rational(1);
    return m;
}

// Vector-level evaluation of the three module axioms on all basis triples.
// This walks a different route than check_module_axioms (vectors pushed
// through individual actions instead of matrix products), so the two can
// cross-check each other.
bool axioms_hold_vector_level(const LeibnizAlgebra& alg, const LeibnizModule& mod) {
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j) {
            Matrix lam_prod(mod.mod_dim, mod.mod_dim), rho_prod(mod.mod_dim, mod.mod_dim);
            for (std::size_t k = 0; k < alg.dim; ++k) {
                if (alg.c[i][j][k].is_zero()) continue;
                lam_prod = lam_prod + alg.c[i][j][k] * mod.lambda[k];
                rho_prod = rho_prod + alg.c[i][j][k] * mod.rho[k];
            }
            for (std::size_t t = 0; t < mod.mod_dim; ++t) {
                Vec v = unit_vec(mod.mod_dim, t);
                Vec a1_lhs = mod.lambda[i].apply(mod.lambda[j].apply(v));
                Vec a1_rhs = add(lam_prod.apply(v), mod.lambda[j].apply(mod.lambda[i].apply(v)));
                if (a1_lhs != a1_rhs) return false;
                Vec a2_lhs = mod.lambda[i].apply(mod.rho[j].apply(v));
                Vec a2_rhs = add(mod.rho[j].apply(mod.lambda[i].apply(v)), rho_prod.apply(v));
                if (a2_lhs != a2_rhs) return false;
                Vec a3_lhs = rho_prod.apply(v);
                Vec a3_rhs = add(mod.rho[j].apply(mod.rho[i].apply(v)),
                                 mod.lambda[i].apply(mod.rho[j].apply(v)));
                if (a3_lhs != a3_rhs) return false;
            }
        }
    return true;
}

bool criterion_main_theorem_bound() {
    auto corpus_started = std::chrono::steady_clock::now();
    for (const auto& alg : builtin_corpus()) {
        auto started = std::chrono::steady_clock::now();
        FaithfulResult r = faithful_representation(alg, {false, 200, kSeed});
        auto elapsed = std::chrono::steady_clock::now() - started;
        if (!check_module_axioms(alg, r.module).empty()) return false;
        if (rep_kernel(alg, r.module).dim() != 0) return false;
        std::size_t expected = centre(alg).dim() == 0 ? alg.dim : alg.dim + 1;
        if (r.dim_v != expected || r.dim_v > alg.dim + 1) return false;
        if (elapsed >= std::chrono::seconds(1)) return false;
    }
    return std::chrono::steady_clock::now() - corpus_started < std::chrono::seconds(30);
}

bool criterion_splitting_definition() {
    for (const auto& alg : builtin_corpus()) {
        Subspace a = left_annihilator(alg);
        SplittingAlgebra s = construct_splitting(alg, a);
        if (!verify_splitting(alg, a, s).empty()) return false;
        if (s.b.dim() != alg.dim) return false;
    }
    return true;
}

bool criterion_left_nilpotency_transfer() {
    for (const auto& alg : builtin_corpus()) {
        FaithfulResult r = faithful_representation(alg, {false, 200, kSeed});
        if (!check_left_nilpotency_transfer(alg, r, 200, kSeed)) return false;
    }
    return true;
}

bool criterion_right_nilpotency() {
    for (const auto& alg : builtin_corpus()) {
        FaithfulResult r = faithful_representation(alg, {false, 200, kSeed});
        if (r.branch != Branch::construction) continue;
        for (const Matrix& ri : r.module.rho)
            for (const Matrix& rj : r.module.rho) {
                if (!(ri * rj).is_zero()) return false;
            }
        if (check_right_nilpotency(r) != RightNilpotency::holds) return false;
    }
    return true;
}

bool criterion_patsourakos() {
    for (const auto& alg : builtin_corpus()) {
        LeibnizModule adj = adjoint_module(alg);
        if (!check_patsourakos(adj, adj.mod_dim + 1, 100, kSeed)) return false;
        FaithfulResult r = faithful_representation(alg, {false, 200, kSeed});
        if (!check_patsourakos(r.module, r.dim_v + 1, 100, kSeed)) return false;
    }
    return true;
}

bool criterion_structural_identities() {
    for (const auto& alg : builtin_corpus()) {
        Subspace leib = leibniz_kernel(alg);
        if (!is_ideal(alg, leib)) return false;
        for (std::size_t r = 0; r < leib.dim(); ++r) {
            for (std::size_t t = 0; t < leib.dim(); ++t) {
                if (!is_zero(multiply(alg, leib.basis().row(r), leib.basis().row(t)))) return false;
            }
            for (std::size_t j = 0; j < alg.dim; ++j) {
                if (!is_zero(multiply(alg, leib.basis().row(r), unit_vec(alg.dim, j))))
                    return false;
            }
        }
        auto [lie, pi] = quotient_algebra(alg, leib);
        for (std::size_t i = 0; i < lie.dim; ++i)
            for (std::size_t j = 0; j < lie.dim; ++j) {
                if (lie.c[i][j] != scale(Rational(-1), lie.c[j][i])) return false;
            }
        if (rep_kernel(alg, adjoint_module(alg)) != centre(alg)) return false;
        Subspace ann = left_annihilator(alg);
        if (!contains(ann, leib) || !contains(ann, centre(alg))) return false;
    }
    return true;
}

bool criterion_hand_derived_oracle() {
    // Expected matrices derived by hand with the deterministic basis rules:
    // V has basis (e, b0, b1) where b0, b1 are the module-block classes, and
    // the two algebra generators act by
    //   lambda_0: b0 -> b1, rho_0: e -> b0, lambda_1 = 0, rho_1: e -> b1.
    FaithfulResult r = faithful_representation(leib2(), {false, 200, kSeed});
    if (r.branch != Branch::construction || r.dim_v != 3) return false;
    if (r.module.lambda[0] != single_entry(3, 2, 1)) return false;
    if (r.module.rho[0] != single_entry(3, 1, 0)) return false;
    if (!r.module.lambda[1].is_zero()) return false;
    if (r.module.rho[1] != single_entry(3, 2, 0)) return false;
    return true;
}

bool criterion_hypercentral_proxy() {
    for (const auto& alg : builtin_corpus()) {
        FaithfulResult r = faithful_representation(alg, {false, 200, kSeed});

        std::vector<Subspace> candidates{Subspace::zero(alg.dim), leibniz_kernel(alg),
                                         centre(alg), left_annihilator(alg)};
        for (const auto& term : lower_central_series(alg)) candidates.push_back(term);
        Rng rng(kSeed);
        for (int t = 0; t < 5; ++t) {
            std::size_t rows = static_cast<std::size_t>(rng.int_in(0, static_cast<long>(alg.dim)));
            Matrix gen(rows, alg.dim);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < alg.dim; ++j) gen(i, j) = rng.rational();
            candidates.push_back(Subspace::from_rows(alg.dim, gen));
        }

        std::vector<Subspace> seen;
        for (const auto& u : candidates) {
            if (!is_ideal(alg, u)) continue;
            if (!is_nilpotent_algebra(subalgebra_on(alg, u).first)) continue;
            bool duplicate = false;
            for (const auto& prev : seen) duplicate = duplicate || prev == u;
            if (duplicate) continue;
            seen.push_back(u);
            if (!check_hypercentral_nilpotent_proxy(alg, u, r.module)) return false;
        }
        if (seen.empty()) return false;  // at least the zero ideal always qualifies
    }
    return true;
}

bool criterion_mutation_sensitivity() {
    for (const auto& alg : builtin_corpus()) {
        Subspace a = left_annihilator(alg);
        SplittingAlgebra s = construct_splitting(alg, a);
        Rng rng(kSeed);
        for (int t = 0; t < 10; ++t) {
            SplittingAlgebra mutated = s;
            std::size_t i = static_cast<std::size_t>(rng.int_in(0, static_cast<long>(s.m.dim) - 1));
            std::size_t j = static_cast<std::size_t>(rng.int_in(0, static_cast<long>(s.m.dim) - 1));
            std::size_t k = static_cast<std::size_t>(rng.int_in(0, static_cast<long>(s.m.dim) - 1));
            mutated.m.c[i][j][k] += rng.nonzero_rational();
            if (verify_splitting(alg, a, mutated).empty()) return false;
        }

        FaithfulResult r = faithful_representation(alg, {false, 200, kSeed});
        int caught = 0, attempts = 0;
        while (caught < 10 && attempts < 1000) {
            ++attempts;
            LeibnizModule mutated = r.module;
            std::size_t i =
                static_cast<std::size_t>(rng.int_in(0, static_cast<long>(mutated.alg_dim) - 1));
            std::size_t row =
                static_cast<std::size_t>(rng.int_in(0, static_cast<long>(mutated.mod_dim) - 1));
            std::size_t col =
                static_cast<std::size_t>(rng.int_in(0, static_cast<long>(mutated.mod_dim) - 1));
            mutated.lambda[i](row, col) += rng.nonzero_rational();
            // A mutation that still satisfies the axioms produced another
            // genuine module; the independent vector-level oracle decides
            // that, and such mutants are skipped rather than counted.
            if (axioms_hold_vector_level(alg, mutated)) {
                if (!check_module_axioms(alg, mutated).empty()) return false;
                continue;
            }
            if (check_module_axioms(alg, mutated).empty()) return false;
            ++caught;
        }
        if (caught < 10) return false;
    }
    return true;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        std::function<bool()> run;
    };
    const std::vector<Entry> criteria{
        {"1 main theorem bound: faithful module, zero kernel, dim <= n+1, under time budget",
         criterion_main_theorem_bound},
        {"2 splitting definition: verify_splitting clean over Ann(L), dim B = dim L",
         criterion_splitting_definition},
        {"3 left-nilpotency transfer: 200 seeded samples per fixture, no counterexample",
         criterion_left_nilpotency_transfer},
        {"4 right-nilpotency: rho_i rho_j = 0 on every construction output",
         criterion_right_nilpotency},
        {"5 Patsourakos identity up to dim_v + 1, basis plus 100 seeded combinations",
         criterion_patsourakos},
        {"6 structural identities: Leib, Lie quotient, adjoint kernel = centre, Ann inclusions",
         criterion_structural_identities},
        {"7 hand-derived oracle: leib2 pipeline matrices match entry for entry",
         criterion_hand_derived_oracle},
        {"8 hypercentrality proxy: nilpotent-ideal action chains vanish within dim V",
         criterion_hypercentral_proxy},
        {"9 mutation sensitivity: 10 seeded mutations per fixture, all caught",
         criterion_mutation_sensitivity},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        bool ok = false;
        std::string note;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            note = std::string(" (") + e.what() + ")";
        }
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.name << note << "\n";
        all_ok = all_ok && ok;
    }
    std::cout << (all_ok ? "acceptance: all criteria passed" : "acceptance: FAILURES above")
              << "\n";
    return all_ok ? 0 : 1;
}
