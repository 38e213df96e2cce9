#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace exh {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input values: empty point lists, non-finite coordinates, negative radii.
class ValidationError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::string field)
        : Error("line " + std::to_string(line) + (field.empty() ? "" : ", field '" + field + "'") +
                ": " + what),
          line_(line),
          field_(std::move(field)) {}

    std::size_t line() const { return line_; }
    const std::string& field() const { return field_; }

private:
    std::size_t line_;
    std::string field_;
};

class UnsupportedKindError : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

class CannotDiscardLastError : public Error {
public:
    CannotDiscardLastError() : Error("cannot discard the only body of an exhauster") {}
};

// Retention requires that no other member is a proper subset of the tested body.
class SubsetPresentError : public Error {
public:
    SubsetPresentError(std::size_t body, std::size_t subset)
        : Error("body " + std::to_string(body) + " has a proper subset (body " +
                std::to_string(subset) + ") in the exhauster; remove supersets first"),
          body_(body),
          subset_(subset) {}

    std::size_t body() const { return body_; }
    std::size_t subset() const { return subset_; }

private:
    std::size_t body_;
    std::size_t subset_;
};

}  // namespace exh
