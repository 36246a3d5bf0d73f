#pragma once

#include <stdexcept>
#include <string>

namespace nearcover {

struct NotADirection : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SamePoint : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PointNotInTriangle : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PointNotInSet : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadParameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ContextTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct FileFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace nearcover
