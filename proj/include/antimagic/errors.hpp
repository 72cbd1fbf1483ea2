#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace antimagic {

// Caller violated a documented precondition.
struct contract_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An identity the construction guarantees failed to hold; the pipeline
// treats these as retryable with a fresh seed.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

// A failure we surface instead of asserting away (bounded search ran out,
// malformed input file, ...).
struct diagnostic_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {
[[noreturn]] inline void throw_internal(const char* expr, const char* file, int line,
                                        const std::string& msg) {
  std::ostringstream os;
  os << file << ":" << line << ": check failed: " << expr;
  if (!msg.empty()) os << " (" << msg << ")";
  throw internal_error(os.str());
}
}  // namespace detail

}  // namespace antimagic

#define AM_CHECK(cond, msg)                                                  \
  do {                                                                       \
    if (!(cond)) ::antimagic::detail::throw_internal(#cond, __FILE__, __LINE__, (msg)); \
  } while (0)

#define AM_REQUIRE(cond, msg)                             \
  do {                                                    \
    if (!(cond)) throw ::antimagic::contract_error(msg);  \
  } while (0)
