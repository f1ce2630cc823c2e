#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hochcat {

/// Base class of every error raised by the library.
///
/// `kind()` is a stable tag ("MissingComposite", "HypothesisViolated", ...)
/// and `fields()` carries the labelled subjects of the error (morphism
/// names, degrees, ...). Both are copied verbatim into JSON reports.
class Error : public std::runtime_error {
public:
    using Field = std::pair<std::string, std::string>;

    Error(std::string kind, const std::string& message, std::vector<Field> fields = {})
        : std::runtime_error(message), kind_(std::move(kind)), fields_(std::move(fields))
    {
    }

    const std::string& kind() const noexcept { return kind_; }
    const std::vector<Field>& fields() const noexcept { return fields_; }

private:
    std::string kind_;
    std::vector<Field> fields_;
};

/// Malformed category description: parse errors and axiom violations.
class CategoryError : public Error {
public:
    using Error::Error;
};

/// A fixture constructor rejected its input (NotAGroup, NotAPartialOrder, UnknownFixture).
class FixtureError : public Error {
public:
    using Error::Error;
};

/// An operation needs a structural property the category does not have.
class HypothesisViolated : public Error {
public:
    HypothesisViolated(const std::string& predicate, const std::string& operation)
        : Error("HypothesisViolated",
                operation + " requires the category to be " + predicate,
                {{"predicate", predicate}, {"operation", operation}})
    {
    }
};

/// A cochain space would exceed the configured basis-size cap.
class DimensionCapExceeded : public Error {
public:
    DimensionCapExceeded(std::size_t degree, std::size_t required, std::size_t cap)
        : Error("DimensionCapExceeded",
                "degree " + std::to_string(degree) + " needs " + std::to_string(required) +
                    " basis elements, cap is " + std::to_string(cap),
                {{"m", std::to_string(degree)},
                 {"required", std::to_string(required)},
                 {"cap", std::to_string(cap)}})
    {
    }
};

/// Linear-algebra consistency failures (NotASubspace, NotChainCompatible,
/// NotASubcomplex). These indicate a broken complex or a wrong sign
/// convention, never bad user input.
class LinalgError : public Error {
public:
    using Error::Error;
};

/// Bad field selector such as `gf:4`.
class BadFieldSpec : public Error {
public:
    explicit BadFieldSpec(const std::string& text)
        : Error("BadFieldSpec", "invalid field '" + text + "' (expected gf:<prime> or q)",
                {{"field", text}})
    {
    }
};

/// Argument errors for chain/face operations (IndexOutOfRange, NonComposableChain, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

} // namespace hochcat
