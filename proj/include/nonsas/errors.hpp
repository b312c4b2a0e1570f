#pragma once

#include <stdexcept>
#include <string>

namespace nonsas {

// Precondition violations on kernel/labeling operations.
struct GeometryError : std::runtime_error {
    explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

struct CoincidentPoints : GeometryError {
    CoincidentPoints() : GeometryError("coincident points") {}
};
struct IdenticalLines : GeometryError {
    IdenticalLines() : GeometryError("identical lines") {}
};
struct NotCollinear : GeometryError {
    NotCollinear() : GeometryError("points not collinear") {}
};
struct DegeneratePoints : GeometryError {
    DegeneratePoints() : GeometryError("degenerate point triple") {}
};
struct PointOnLine : GeometryError {
    PointOnLine() : GeometryError("point lies on the line") {}
};
struct DistinctVertices : GeometryError {
    DistinctVertices() : GeometryError("rays have distinct vertices") {}
};
struct CollinearRays : GeometryError {
    CollinearRays() : GeometryError("rays lie on a common line") {}
};
struct VertexMismatch : GeometryError {
    VertexMismatch() : GeometryError("ray vertex differs from angle vertex") {}
};
struct OutOfDomain : GeometryError {
    explicit OutOfDomain(const std::string& what = "value outside the map's domain")
        : GeometryError(what) {}
};
struct RangeOverflow : GeometryError {
    RangeOverflow() : GeometryError("class sum leaves (0, 2pi)") {}
};
struct PrecisionExhausted : GeometryError {
    PrecisionExhausted() : GeometryError("precision cap reached") {}
};
struct MalformedSpec : GeometryError {
    explicit MalformedSpec(const std::string& what) : GeometryError(what) {}
};
struct InsufficientDomain : GeometryError {
    explicit InsufficientDomain(const std::string& what) : GeometryError(what) {}
};
struct ParseFailure : std::runtime_error {
    int line, column;
    ParseFailure(const std::string& what, int line_, int col_)
        : std::runtime_error(what + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
          line(line_), column(col_) {}
};

}  // namespace nonsas
