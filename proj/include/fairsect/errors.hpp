#pragma once

#include <stdexcept>
#include <string>

namespace fairsect {

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateInput : GeometryError {
    using GeometryError::GeometryError;
};

struct InvalidChord : GeometryError {
    using GeometryError::GeometryError;
};

struct SingularMap : GeometryError {
    using GeometryError::GeometryError;
};

struct NotSymmetric : GeometryError {
    using GeometryError::GeometryError;
};

struct DomainError : GeometryError {
    using GeometryError::GeometryError;
};

struct EmptySet : GeometryError {
    using GeometryError::GeometryError;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fairsect
