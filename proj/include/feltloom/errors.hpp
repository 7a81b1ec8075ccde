#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace feltloom {

// Base class for all domain errors raised by the toolkit.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input stream (mesh files, machine programs, config, CSV).
class ParseError : public Error {
  public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column,
               std::size_t byte_offset = 0)
        : Error(msg), line(line), column(column), byte_offset(byte_offset) {}

    std::size_t line = 0;         // 1-based; 0 when not line-oriented
    std::size_t column = 0;       // 1-based; 0 when unknown
    std::size_t byte_offset = 0;  // for binary streams
};

// Pose outside the platform workspace; lists the legs that cannot close.
class UnreachablePoseError : public Error {
  public:
    UnreachablePoseError(const std::string& msg, std::vector<int> legs)
        : Error(msg), legs(std::move(legs)) {}

    std::vector<int> legs;
};

// Felting station(s) outside the tool's operating range. `where` holds the
// offending axle angles (felt_around) or heights (felt_vertical).
class UnreachableStationError : public Error {
  public:
    UnreachableStationError(const std::string& msg, std::vector<double> where)
        : Error(msg), where(std::move(where)) {}

    std::vector<double> where;
};

// Time-model calibration could not resolve one or more coefficients.
class CalibrationError : public Error {
  public:
    CalibrationError(const std::string& msg, std::vector<std::string> coefficients)
        : Error(msg), coefficients(std::move(coefficients)) {}

    std::vector<std::string> coefficients;
};

// Simulated deposit left the work envelope.
class EnvelopeError : public Error {
  public:
    EnvelopeError(const std::string& msg, std::size_t instruction_index)
        : Error(msg), instruction_index(instruction_index) {}

    std::size_t instruction_index = 0;
};

}  // namespace feltloom
