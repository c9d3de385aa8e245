#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace acdkit {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates a precondition of an operation (wrong alphabet, empty
/// set, nondeterministic automaton where a deterministic one is needed...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input using a feature outside the supported subset.
class UnsupportedFeature : public Error {
 public:
  UnsupportedFeature(const std::string& message, std::string token);

  /// The offending token as it appeared in the input.
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// An exponential oracle or search was asked to exceed its configured cap.
class CapExceeded : public DomainError {
 public:
  CapExceeded(const std::string& cap, std::size_t value, std::size_t limit);

  const std::string& cap() const noexcept { return cap_; }
  std::size_t value() const noexcept { return value_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::string cap_;
  std::size_t value_;
  std::size_t limit_;
};

/// Reason a candidate tree is not the Zielonka tree of any family.
enum class TreeViolation {
  structure,      ///< malformed parent/child links, empty labels, wrong root
  alternation,    ///< a child has the polarity of its parent
  not_subset,     ///< a child label is not a strict subset of its parent label
  incomparable,   ///< two siblings are comparable under inclusion
  inconsistent,   ///< a round/square pair whose label intersection is both accepted and rejected
  not_maximal,    ///< a child is missing or is not a maximal subset of flipped membership
};

const char* to_string(TreeViolation v) noexcept;

/// validate_ztree failure, naming the violated condition and the nodes involved.
class TreeValidationError : public DomainError {
 public:
  TreeValidationError(TreeViolation kind, std::size_t node_a, std::size_t node_b,
                      const std::string& detail);

  TreeViolation kind() const noexcept { return kind_; }
  std::size_t node_a() const noexcept { return node_a_; }
  std::size_t node_b() const noexcept { return node_b_; }

 private:
  TreeViolation kind_;
  std::size_t node_a_;
  std::size_t node_b_;
};

/// A Zielonka DAG with a round node having two or more children has no
/// equivalent Rabin condition.
class NotRabinType : public DomainError {
 public:
  NotRabinType(std::size_t node, std::size_t children);

  std::size_t node() const noexcept { return node_; }
  std::size_t children() const noexcept { return children_; }

 private:
  std::size_t node_;
  std::size_t children_;
};

}  // namespace acdkit
