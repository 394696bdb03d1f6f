#pragma once

#include "leibniz/fixtures.hpp"
#include "leibniz/io.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace leibniz {

/// Exit codes shared by every command: 0 success, 1 mathematical violation
/// or certificate failure, 2 I/O or parse error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_input_error = 2;

struct CliOptions {
    bool force_construction = false;
    std::uint64_t seed = 42;
};

int run_check(const std::string& path, std::ostream& out, std::ostream& err);

int run_invariants(const std::string& path, std::ostream& out, std::ostream& err);

int run_faithful(const std::string& path, const std::optional<std::string>& out_path,
                 const CliOptions& opts, std::ostream& out, std::ostream& err);

int run_verify(const std::string& alg_path, const std::string& mod_path, const CliOptions& opts,
               std::ostream& out, std::ostream& err);

int run_corpus(const std::vector<LeibnizAlgebra>& corpus, const CliOptions& opts,
               std::ostream& out, std::ostream& err);

}  // namespace leibniz
