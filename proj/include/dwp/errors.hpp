#pragma once

#include <stdexcept>
#include <string>

namespace dwp {

// Base for all structured engine errors. `kind()` is a stable machine-readable
// tag used by the CLI to map failures onto exit codes and report entries.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define DWP_DEFINE_ERROR(NAME, TAG)                                          \
    class NAME : public Error {                                              \
    public:                                                                  \
        explicit NAME(const std::string& message) : Error(TAG, message) {}   \
    };

DWP_DEFINE_ERROR(MetricDegenerate, "MetricDegenerate")
DWP_DEFINE_ERROR(DegeneratePlane, "DegeneratePlane")
DWP_DEFINE_ERROR(NotUnit, "NotUnit")
DWP_DEFINE_ERROR(WrongDistribution, "WrongDistribution")
DWP_DEFINE_ERROR(NonPositiveWarping, "NonPositiveWarping")
DWP_DEFINE_ERROR(UnknownTensorName, "UnknownTensorName")
DWP_DEFINE_ERROR(KappaOne, "KappaOne")
DWP_DEFINE_ERROR(RankDeficient, "RankDeficient")
DWP_DEFINE_ERROR(NotNormal, "NotNormal")
DWP_DEFINE_ERROR(ConstraintViolated, "ConstraintViolated")
DWP_DEFINE_ERROR(NotCTotallyReal, "NotCTotallyReal")
DWP_DEFINE_ERROR(InvalidScenario, "InvalidScenario")
DWP_DEFINE_ERROR(DimensionMismatch, "DimensionMismatch")

#undef DWP_DEFINE_ERROR

// Parse failures carry the byte offset of the offending token so the CLI can
// report line/column diagnostics.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error("ParseError", message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace dwp
