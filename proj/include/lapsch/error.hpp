#pragma once

#include <stdexcept>
#include <string>

namespace lapsch {

enum class errc {
  pole_evaluation,
  branch_domain,
  not_expandable,
  unsupported_input,
  not_invertible,
  contour_through_pole,
  divergent_moment,
  domain_error,
  invalid_quantum_number,
  unsupported_excitation,
  no_bound_states,
  budget_exceeded,
};

/// Base of every error raised by the library; `code()` identifies the failure class.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

template <errc Code>
class coded_error : public error {
 public:
  explicit coded_error(const std::string& what) : error(Code, what) {}
};

using pole_evaluation = coded_error<errc::pole_evaluation>;
using branch_domain = coded_error<errc::branch_domain>;
using not_expandable = coded_error<errc::not_expandable>;
using unsupported_input = coded_error<errc::unsupported_input>;
using not_invertible = coded_error<errc::not_invertible>;
using contour_through_pole = coded_error<errc::contour_through_pole>;
using divergent_moment = coded_error<errc::divergent_moment>;
using domain_error = coded_error<errc::domain_error>;
using invalid_quantum_number = coded_error<errc::invalid_quantum_number>;
using unsupported_excitation = coded_error<errc::unsupported_excitation>;
using no_bound_states = coded_error<errc::no_bound_states>;
using budget_exceeded = coded_error<errc::budget_exceeded>;

}  // namespace lapsch
