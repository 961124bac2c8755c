#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ivspec {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A vertex/edge list that does not describe a simple graph.
class InvalidGraph : public Error {
public:
  explicit InvalidGraph(const std::string& what,
                        std::optional<std::size_t> edge_index = std::nullopt)
      : Error(what), edge_index_(edge_index) {}

  /// Index of the offending input pair, when the error is tied to one.
  std::optional<std::size_t> edge_index() const noexcept { return edge_index_; }

private:
  std::optional<std::size_t> edge_index_;
};

/// A label array that is not a bijection onto {1..m}.
class InvalidLabeling : public Error {
public:
  using Error::Error;
};

/// An operation was called outside its domain (bad vertex id, r < 2, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Malformed text input. `line()` is 1-based; `source()` names the file
/// when known.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& detail, const std::string& source = {})
      : Error((source.empty() ? "" : source + ": ") + "line " + std::to_string(line) + ": " +
              detail),
        line_(line),
        detail_(detail) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

private:
  std::size_t line_;
  std::string detail_;
};

/// A labeling for which one of the checked bound properties failed. Thrown
/// by the search routines instead of returning such a witness silently.
class CounterexampleFound : public Error {
public:
  CounterexampleFound(const std::string& what, std::vector<std::uint32_t> labels)
      : Error(what), labels_(std::move(labels)) {}

  const std::vector<std::uint32_t>& labels() const noexcept { return labels_; }

private:
  std::vector<std::uint32_t> labels_;
};

} // namespace ivspec
