#pragma once

#include <stdexcept>
#include <string>

namespace sprawl {

// Base class for all domain errors raised by the toolkit.  CLI code catches
// this to produce machine-readable error reports with a stable type tag.
class Error : public std::runtime_error {
public:
    Error(std::string tag, const std::string& msg)
        : std::runtime_error(msg), tag_(std::move(tag)) {}
    const std::string& tag() const { return tag_; }

private:
    std::string tag_;
};

#define SPRAWL_DEFINE_ERROR(Name)                                    \
    class Name : public Error {                                      \
    public:                                                          \
        explicit Name(const std::string& msg) : Error(#Name, msg) {} \
    }

SPRAWL_DEFINE_ERROR(NotGenerating);
SPRAWL_DEFINE_ERROR(NotFullDimensional);
SPRAWL_DEFINE_ERROR(DegenerateFacet);
SPRAWL_DEFINE_ERROR(DimensionMismatch);
SPRAWL_DEFINE_ERROR(SingularMatrix);
SPRAWL_DEFINE_ERROR(NotPlanar);
SPRAWL_DEFINE_ERROR(NotHexagon);
SPRAWL_DEFINE_ERROR(OriginNotInterior);
SPRAWL_DEFINE_ERROR(UnsupportedParameter);
SPRAWL_DEFINE_ERROR(NoAsymptoticKnown);
SPRAWL_DEFINE_ERROR(InvalidInput);

#undef SPRAWL_DEFINE_ERROR

// Raised by sphere construction when the element budget is exhausted; carries
// the largest radius whose sphere was fully built.
class MemoryBudgetExceeded : public Error {
public:
    MemoryBudgetExceeded(const std::string& msg, int completed_radius)
        : Error("MemoryBudgetExceeded", msg), completed_radius_(completed_radius) {}
    int completed_radius() const { return completed_radius_; }

private:
    int completed_radius_;
};

} // namespace sprawl
