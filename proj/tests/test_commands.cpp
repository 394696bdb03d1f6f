#include "leibniz/commands.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace leibniz;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

struct Run {
    int code;
    std::string out;
    std::string err;
};

template <typename F>
Run capture(F&& f) {
    std::ostringstream out, err;
    int code = f(out, err);
    return {code, out.str(), err.str()};
}

const std::string leib2_doc = R"({"name": "leib2", "dim": 2, "products": [[0, 0, 1, "1"]]})";
const std::string idempotent_doc = R"({"name": "bad", "dim": 1, "products": [[0, 0, 0, "1"]]})";

}  // namespace

TEST_SUITE("commands") {

TEST_CASE("check exit codes") {
    auto good = write_temp("cmd_leib2.json", leib2_doc);
    Run ok = capture([&](auto& o, auto& e) { return run_check(good.string(), o, e); });
    CHECK(ok.code == exit_ok);
    CHECK(ok.out.find("ok: leib2") != std::string::npos);

    auto bad = write_temp("cmd_idem.json", idempotent_doc);
    Run viol = capture([&](auto& o, auto& e) { return run_check(bad.string(), o, e); });
    CHECK(viol.code == exit_violation);
    CHECK(viol.out.find("violation (0,0,0)") != std::string::npos);

    Run missing = capture([&](auto& o, auto& e) { return run_check("/nonexistent.json", o, e); });
    CHECK(missing.code == exit_input_error);

    auto garbage = write_temp("cmd_garbage.json", "{");
    Run parse = capture([&](auto& o, auto& e) { return run_check(garbage.string(), o, e); });
    CHECK(parse.code == exit_input_error);
}

TEST_CASE("invariants report") {
    auto good = write_temp("cmd_leib2.json", leib2_doc);
    Run r = capture([&](auto& o, auto& e) { return run_invariants(good.string(), o, e); });
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("Leib(L): dim 1, basis [[0, 1]]") != std::string::npos);
    CHECK(r.out.find("Z(L): dim 1") != std::string::npos);
    CHECK(r.out.find("Ann(L): dim 1") != std::string::npos);
    CHECK(r.out.find("lower_central_series: length 3") != std::string::npos);
    CHECK(r.out.find("nilpotent: true") != std::string::npos);

    auto bad = write_temp("cmd_idem.json", idempotent_doc);
    CHECK(capture([&](auto& o, auto& e) { return run_invariants(bad.string(), o, e); }).code ==
          exit_violation);
    CHECK(capture([&](auto& o, auto& e) { return run_invariants("/missing", o, e); }).code ==
          exit_input_error);
}

TEST_CASE("faithful writes a certified document") {
    auto good = write_temp("cmd_leib2.json", leib2_doc);
    auto out_path = std::filesystem::temp_directory_path() / "cmd_leib2_module.json";
    Run r = capture([&](auto& o, auto& e) {
        return run_faithful(good.string(), out_path.string(), CliOptions{}, o, e);
    });
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("branch: construction") != std::string::npos);
    CHECK(r.out.find("dim_v: 3") != std::string::npos);

    std::ifstream in(out_path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str().find("\"certificate\"") != std::string::npos);

    auto bad = write_temp("cmd_idem.json", idempotent_doc);
    CHECK(capture([&](auto& o, auto& e) {
              return run_faithful(bad.string(), std::nullopt, CliOptions{}, o, e);
          }).code == exit_violation);
    CHECK(capture([&](auto& o, auto& e) {
              return run_faithful("/missing", std::nullopt, CliOptions{}, o, e);
          }).code == exit_input_error);
}

TEST_CASE("verify checks a module against an algebra") {
    auto alg_path = write_temp("cmd_leib2.json", leib2_doc);
    auto mod_path = std::filesystem::temp_directory_path() / "cmd_leib2_module.json";
    capture([&](auto& o, auto& e) {
        return run_faithful(alg_path.string(), mod_path.string(), CliOptions{}, o, e);
    });

    Run good = capture(
        [&](auto& o, auto& e) { return run_verify(alg_path.string(), mod_path.string(), {}, o, e); });
    CHECK(good.code == exit_ok);
    CHECK(good.out.find("kernel_dim: 0") != std::string::npos);
    CHECK(good.out.find("patsourakos: true") != std::string::npos);

    // The zero module is a valid module with full kernel.
    auto zero_path = write_temp(
        "cmd_zero_module.json",
        R"({"alg_dim": 2, "mod_dim": 1, "lambda": [[["0"]], [["0"]]], "rho": [[["0"]], [["0"]]]})");
    Run zero = capture([&](auto& o, auto& e) {
        return run_verify(alg_path.string(), zero_path.string(), {}, o, e);
    });
    CHECK(zero.code == exit_ok);
    CHECK(zero.out.find("kernel_dim: 2") != std::string::npos);

    // Tampering with one lambda entry is caught as an axiom violation.
    std::ifstream in(mod_path);
    std::stringstream buf;
    buf << in.rdbuf();
    LeibnizModule tampered = parse_module(buf.str());
    tampered.lambda[0](0, 1) += Rational(1);
    auto tampered_path = write_temp("cmd_tampered.json", emit_module(tampered));
    Run caught = capture([&](auto& o, auto& e) {
        return run_verify(alg_path.string(), tampered_path.string(), {}, o, e);
    });
    CHECK(caught.code == exit_violation);
    CHECK(caught.out.find("residual") != std::string::npos);

    // Dimension mismatch between the documents.
    auto mismatch = write_temp(
        "cmd_mismatch.json",
        R"({"alg_dim": 1, "mod_dim": 1, "lambda": [[["0"]]], "rho": [[["0"]]]})");
    CHECK(capture([&](auto& o, auto& e) {
              return run_verify(alg_path.string(), mismatch.string(), {}, o, e);
          }).code == exit_violation);
}

TEST_CASE("corpus runs the whole pipeline") {
    Run all = capture([&](auto& o, auto& e) { return run_corpus(builtin_corpus(), {}, o, e); });
    CHECK(all.code == exit_ok);
    CHECK(all.out.find("corpus: 10/10 ok") != std::string::npos);

    auto corpus = builtin_corpus();
    LeibnizAlgebra bad(1, "injected_bad");
    bad.c[0][0][0] = Rational(1);
    corpus.push_back(bad);
    Run broken = capture([&](auto& o, auto& e) { return run_corpus(corpus, {}, o, e); });
    CHECK(broken.code == exit_violation);
    CHECK(broken.err.find("FAIL injected_bad") != std::string::npos);

    Run empty = capture([&](auto& o, auto& e) { return run_corpus({}, {}, o, e); });
    CHECK(empty.code == exit_ok);
}

}
