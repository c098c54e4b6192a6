#pragma once

#include <stdexcept>
#include <string>

namespace psbench {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : Error {
  using Error::Error;
};

// ---- corpus ----

struct MalformedRecordError : Error {
  MalformedRecordError(std::size_t line, std::string field, const std::string& what)
      : Error("record " + std::to_string(line) + ", field '" + field + "': " + what),
        line(line),
        field(std::move(field)) {}
  std::size_t line;
  std::string field;
};

struct DuplicateIdError : Error {
  explicit DuplicateIdError(const std::string& id)
      : Error("duplicate sample id '" + id + "'"), id(id) {}
  std::string id;
};

struct UnknownTacticError : Error {
  explicit UnknownTacticError(const std::string& name)
      : Error("unknown MITRE tactic '" + name + "'"), name(name) {}
  std::string name;
};

struct EmptyDatasetError : Error {
  EmptyDatasetError() : Error("dataset is empty") {}
};

// ---- metrics / report ----

struct EmptyInputError : Error {
  using Error::Error;
};

struct MissingReferenceError : Error {
  explicit MissingReferenceError(const std::string& id)
      : Error("no reference sample with id '" + id + "'"), id(id) {}
  std::string id;
};

struct DuplicateRecordError : Error {
  explicit DuplicateRecordError(const std::string& id)
      : Error("more than one record for sample '" + id + "' in a single run"), id(id) {}
  std::string id;
};

struct InconsistentRunsError : Error {
  using Error::Error;
};

struct TooFewReportsError : Error {
  TooFewReportsError() : Error("comparison needs at least two reports") {}
};

struct SchemaVersionError : Error {
  using Error::Error;
};

// ---- genclient ----

struct EmptyDescriptionError : Error {
  EmptyDescriptionError() : Error("prompt description is empty") {}
};

struct EndpointUnreachableError : Error {
  using Error::Error;
};

struct TimeoutError : Error {
  using Error::Error;
};

struct HttpStatusError : Error {
  explicit HttpStatusError(int status)
      : Error("endpoint returned HTTP status " + std::to_string(status)), status(status) {}
  int status;
};

struct MalformedResponseError : Error {
  using Error::Error;
};

}  // namespace psbench
