#pragma once

#include <stdexcept>
#include <string>

namespace wbs {

// A request that falls outside the proven scope of a statement (excluded m,
// non-integer weight where integrality is required, out-of-window parameters).
// The CLI maps these to usage/scope exit status.
class scope_error : public std::domain_error {
public:
    explicit scope_error(const std::string& what) : std::domain_error(what) {}
};

// An exact identity that must hold by construction failed: a dual-route
// computation disagreed or a proven statement was falsified on an instance.
// This means the transcription of a formula is wrong (or the build is
// miscompiled) and the whole suite is suspect, so it is never reported as an
// ordinary counterexample.
class identity_violation : public std::logic_error {
public:
    explicit identity_violation(const std::string& what) : std::logic_error(what) {}
};

} // namespace wbs
