#include "leibniz/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Faithful-module construction and certification for Leibniz algebras"};
    app.require_subcommand(1);

    leibniz::CliOptions opts;
    app.add_flag("--force-construction", opts.force_construction,
                 "use the splitting-algebra construction even when the centre is zero");
    app.add_option("--seed", opts.seed, "seed for sampled checks")->default_val(42);

    std::string path, out_path, alg_path, mod_path, only;

    auto* check = app.add_subcommand("check", "validate the Leibniz identity of an algebra file");
    check->add_option("file", path)->required();

    auto* invariants =
        app.add_subcommand("invariants", "print Leib(L), Z(L), Ann(L) and the central series");
    invariants->add_option("file", path)->required();

    auto* faithful = app.add_subcommand("faithful", "construct a certified faithful module");
    faithful->add_option("file", path)->required();
    auto* out_opt = faithful->add_option("-o,--output", out_path, "write the module document here");

    auto* verify = app.add_subcommand("verify", "check a module document against an algebra");
    verify->add_option("algebra", alg_path)->required();
    verify->add_option("module", mod_path)->required();

    auto* corpus = app.add_subcommand("corpus", "run the whole pipeline over the built-in corpus");
    corpus->add_option("--only", only, "restrict to fixtures whose name contains this substring");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? leibniz::exit_input_error : leibniz::exit_ok;
    }

    if (check->parsed()) return leibniz::run_check(path, std::cout, std::cerr);
    if (invariants->parsed()) return leibniz::run_invariants(path, std::cout, std::cerr);
    if (faithful->parsed()) {
        std::optional<std::string> dst;
        if (out_opt->count() > 0) dst = out_path;
        return leibniz::run_faithful(path, dst, opts, std::cout, std::cerr);
    }
    if (verify->parsed()) return leibniz::run_verify(alg_path, mod_path, opts, std::cout, std::cerr);
    if (corpus->parsed()) {
        std::vector<leibniz::LeibnizAlgebra> fixtures;
        for (auto& alg : leibniz::builtin_corpus()) {
            if (only.empty() || alg.name.find(only) != std::string::npos)
                fixtures.push_back(std::move(alg));
        }
        return leibniz::run_corpus(fixtures, opts, std::cout, std::cerr);
    }
    return leibniz::exit_input_error;
}
