#ifndef BANHATTI_ERRORS_HPP
#define BANHATTI_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace banhatti {

/// Raised by the graph readers. `position()` is a 0-based byte offset for
/// graph6 input and a 1-based line number for edge-list input.
class ParseError : public std::runtime_error {
 public:
  enum class Where { ByteOffset, Line };

  ParseError(Where where, std::size_t position, const std::string& what)
      : std::runtime_error(what), where_(where), position_(position) {}

  Where where() const noexcept { return where_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Where where_;
  std::size_t position_;
};

enum class DomainErrorCode {
  Disconnected,
  ZeroDegree,
  ComplementZeroDegree,
  NotUnicyclic,
  NotRegular,
  OutOfRange,
};

std::string_view to_string(DomainErrorCode code) noexcept;

/// A precondition on the input graph (or an integer argument) does not hold.
class DomainError : public std::domain_error {
 public:
  DomainError(DomainErrorCode code, const std::string& what)
      : std::domain_error(what), code_(code) {}

  DomainErrorCode code() const noexcept { return code_; }

 private:
  DomainErrorCode code_;
};

}  // namespace banhatti

#endif  // BANHATTI_ERRORS_HPP
