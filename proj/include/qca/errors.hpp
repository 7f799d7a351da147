#pragma once

#include <stdexcept>
#include <string>

namespace qca {

// Every engine failure is a typed exception; callers that treat a failure as
// a verdict (e.g. divisibility probes) catch the specific type.

struct RankMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadDirection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InexactDivision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EpsilonMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotCompatible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSkewSymmetric : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSkewSymmetrizable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedExponent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotInColumnSpan : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NegativeExponent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotProportional : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EntriesOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotTypeA : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qca
