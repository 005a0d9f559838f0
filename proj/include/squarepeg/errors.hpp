#pragma once

#include <stdexcept>
#include <string>

namespace squarepeg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateBody : Error {
    using Error::Error;
};
struct OriginNotInterior : Error {
    using Error::Error;
};
struct PointOutsideBody : Error {
    using Error::Error;
};
struct NotBoundaryPoint : Error {
    using Error::Error;
};
struct ArcTooWide : Error {
    using Error::Error;
};
struct InvalidSide : Error {
    using Error::Error;
};
struct NotObtuse : Error {
    using Error::Error;
};
struct NoSolutionFound : Error {
    using Error::Error;
};
struct DegenerateY : Error {
    using Error::Error;
};
struct NegativeHeight : Error {
    using Error::Error;
};
struct GridTooSmall : Error {
    using Error::Error;
};
struct ShapeParseError : Error {
    using Error::Error;
};

}  // namespace squarepeg
