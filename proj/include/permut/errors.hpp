#ifndef PERMUT_ERRORS_HPP_
#define PERMUT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace permut {

// Malformed input text (algebra files, witness files, relation literals).
// what() is prefixed "source:line: " when a location is known.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::string source, int line, const std::string& msg)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + msg),
        source_(std::move(source)),
        line_(line) {}

  explicit parse_error(const std::string& msg)
      : std::runtime_error(msg), line_(0) {}

  const std::string& source() const { return source_; }
  int line() const { return line_; }

 private:
  std::string source_;
  int line_ = 0;
};

// A computation exceeded its element or enumeration budget. Distinct from
// both "property fails" and malformed input.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Term evaluation errors, one kind per failure mode.
class eval_error : public std::runtime_error {
 public:
  enum class kind { unknown_symbol, arity_mismatch, unassigned_variable };

  eval_error(kind k, const std::string& msg)
      : std::runtime_error(msg), kind_(k) {}

  kind which() const { return kind_; }

 private:
  kind kind_;
};

}  // namespace permut

#endif  // PERMUT_ERRORS_HPP_
