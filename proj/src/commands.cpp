#include "leibniz/commands.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

namespace leibniz {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

LeibnizAlgebra load_algebra(const std::string& path) {
    return parse_algebra(read_file(path));
}

void print_subspace(std::ostream& out, const std::string& label, const Subspace& s) {
    out << label << ": dim " << s.dim() << ", basis " << str(s.basis()) << "\n";
}

void print_leibniz_violations(std::ostream& out, const std::vector<LeibnizViolation>& violations) {
    for (const auto& v : violations)
        out << "violation (" << v.i << "," << v.j << "," << v.k << "): residual " << str(v.residual)
            << "\n";
}

}  // namespace

int run_check(const std::string& path, std::ostream& out, std::ostream& err) {
    LeibnizAlgebra alg;
    try {
        alg = load_algebra(path);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    auto violations = check_leibniz(alg);
    if (!violations.empty()) {
        print_leibniz_violations(out, violations);
        out << violations.size() << " violation(s)\n";
        return exit_violation;
    }
    out << "ok: " << (alg.name.empty() ? path : alg.name) << ": Leibniz identity holds (dim "
        << alg.dim << ")\n";
    return exit_ok;
}

int run_invariants(const std::string& path, std::ostream& out, std::ostream& err) {
    LeibnizAlgebra alg;
    try {
        alg = load_algebra(path);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    auto violations = check_leibniz(alg);
    if (!violations.empty()) {
        print_leibniz_violations(out, violations);
        return exit_violation;
    }
    out << "name: " << alg.name << "\n";
    out << "dim: " << alg.dim << "\n";
    print_subspace(out, "Leib(L)", leibniz_kernel(alg));
    print_subspace(out, "Z(L)", centre(alg));
    print_subspace(out, "Ann(L)", left_annihilator(alg));
    auto series = lower_central_series(alg);
    out << "lower_central_series: length " << series.size() << ", dims [";
    for (std::size_t i = 0; i < series.size(); ++i) out << (i ? ", " : "") << series[i].dim();
    out << "]\n";
    out << "nilpotent: " << (is_nilpotent_algebra(alg) ? "true" : "false") << "\n";
    return exit_ok;
}

int run_faithful(const std::string& path, const std::optional<std::string>& out_path,
                 const CliOptions& opts, std::ostream& out, std::ostream& err) {
    LeibnizAlgebra alg;
    try {
        alg = load_algebra(path);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    if (!check_leibniz(alg).empty()) {
        err << "error: input is not a Leibniz algebra\n";
        return exit_violation;
    }
    FaithfulResult result;
    try {
        result = faithful_representation(alg, {opts.force_construction, 200, opts.seed});
    } catch (const InternalError& e) {
        err << "certificate failure: " << e.what() << "\n";
        return exit_violation;
    }
    std::string doc = emit_faithful_document(result);
    if (out_path) {
        std::ofstream dst(*out_path, std::ios::binary);
        if (!dst) {
            err << "error: cannot write '" << *out_path << "'\n";
            return exit_input_error;
        }
        dst << doc;
        out << "branch: " << branch_name(result.branch) << "\n";
        out << "dim_v: " << result.dim_v << "\n";
        out << "kernel_dim: " << result.certificate.kernel_dim << "\n";
        out << "certificate: " << (result.certificate.all_pass() ? "pass" : "fail") << "\n";
    } else {
        out << doc;
    }
    return result.certificate.all_pass() ? exit_ok : exit_violation;
}

int run_verify(const std::string& alg_path, const std::string& mod_path, const CliOptions& opts,
               std::ostream& out, std::ostream& err) {
    LeibnizAlgebra alg;
    LeibnizModule mod;
    try {
        alg = load_algebra(alg_path);
        mod = parse_module(read_file(mod_path));
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    if (!check_leibniz(alg).empty()) {
        err << "error: input is not a Leibniz algebra\n";
        return exit_violation;
    }
    if (mod.alg_dim != alg.dim) {
        err << "error: module alg_dim " << mod.alg_dim << " does not match algebra dim " << alg.dim
            << "\n";
        return exit_violation;
    }
    auto violations = check_module_axioms(alg, mod);
    if (!violations.empty()) {
        for (const auto& v : violations)
            out << "axiom " << v.axiom << " fails at (" << v.i << "," << v.j << "): residual "
                << str(v.residual) << "\n";
        out << violations.size() << " violation(s)\n";
        return exit_violation;
    }
    out << "axioms: ok\n";
    out << "kernel_dim: " << rep_kernel(alg, mod).dim() << "\n";
    bool pats = check_patsourakos(mod, mod.mod_dim + 1, 100, opts.seed);
    out << "patsourakos: " << (pats ? "true" : "false") << "\n";
    return exit_ok;
}

int run_corpus(const std::vector<LeibnizAlgebra>& corpus, const CliOptions& opts,
               std::ostream& out, std::ostream& err) {
    std::size_t failures = 0;
    for (const auto& alg : corpus) {
        auto started = std::chrono::steady_clock::now();
        std::string reason;
        try {
            if (!check_leibniz(alg).empty()) {
                reason = "Leibniz identity fails";
            } else {
                FaithfulResult result =
                    faithful_representation(alg, {opts.force_construction, 200, opts.seed});
                if (!check_module_axioms(alg, result.module).empty())
                    reason = "module axioms fail";
                else if (rep_kernel(alg, result.module).dim() != 0)
                    reason = "kernel is nonzero";
                else if (!check_patsourakos(result.module, result.dim_v + 1, 100, opts.seed))
                    reason = "Patsourakos identity fails";
                if (reason.empty()) {
                    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - started)
                                  .count();
                    out << "ok " << alg.name << ": branch=" << branch_name(result.branch)
                        << " dim_v=" << result.dim_v << " kernel=0 (" << ms << " ms)\n";
                }
            }
        } catch (const std::exception& e) {
            reason = e.what();
        }
        if (!reason.empty()) {
            ++failures;
            err << "FAIL " << alg.name << ": " << reason << "\n";
        }
    }
    out << "corpus: " << (corpus.size() - failures) << "/" << corpus.size() << " ok\n";
    return failures == 0 ? exit_ok : exit_violation;
}

}  // namespace leibniz
