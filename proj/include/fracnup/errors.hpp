#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace fracnup {

// Failure categories. Each maps to a stable string code and a process exit
// code: precondition failures exit with 2, accuracy failures with 3.
enum class ErrorKind {
    parameter,
    domain,
    capacity,
    coverage,
    tail_mass,
    symbol,
    evaluator,
    degenerate,
    denominator_vanishing,
    support,
    size,
    pole,
    precondition,
    config,
    accuracy,
    resolution,
    truncation,
};

const char* error_code(ErrorKind kind);
int exit_code_for(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }
    const char* code() const { return error_code(kind_); }
    int exit_code() const { return exit_code_for(kind_); }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

// Short scientific rendering for error messages.
inline std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

inline void require(bool ok, ErrorKind kind, const std::string& what) {
    if (!ok) fail(kind, what);
}

}  // namespace fracnup
