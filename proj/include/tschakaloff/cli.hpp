#pragma once

// Command-line front end: eval, table, asymptotics, prove.

#include <exception>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tschakaloff/arith.hpp"

namespace tschakaloff::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_hypothesis = 1, // gamma >= gamma0, method inapplicable
    exit_exhausted = 2,  // precision budget or witness search exhausted
    exit_usage = 3,
    exit_internal = 4,
};

enum class Format { json, csv, text };

struct RunConfig {
    Rational q;
    Rational z;
    long n_max = 40;
    Rational precision_width = pow2(-64);
    Format format = Format::text;
    std::optional<Integer> b; // prove only
    long max_terms = 100000;
    unsigned jobs = 1;

    // Throws DomainError when an invariant fails.
    void validate() const;
};

// Maps an exception escaping a command to its exit code.
int exit_code_for(std::exception_ptr error);

// args excludes the program name. Diagnostics go to `err`; results go to
// `out` unless --out names a file.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace tschakaloff::cli
