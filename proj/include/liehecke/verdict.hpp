#pragma once

#include <string>

namespace liehecke {

/// Outcome of an exact identity check. `detail` names the first
/// counterexample on failure and summarizes what was checked on success.
struct Verdict
{
    bool pass = false;
    std::string detail;

    explicit operator bool() const { return pass; }
};

} // namespace liehecke
