#pragma once

#include <stdexcept>
#include <string>

namespace fmzv {

// Input lies outside an operation's mathematical domain: a word that is not
// in H^1, stripping a trailing x that is not there, inverting a residue
// divisible by p, and so on.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inconsistent setup rather than bad mathematics: mismatched series caps,
// mismatched prime windows or depths, empty prime ranges, bad CLI settings.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fmzv
