#ifndef TREENV_ERRORS_HPP
#define TREENV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace treenv {

enum class errc {
  self_loop,
  duplicate_edge,
  not_regular,
  not_connected,
  degree_too_small,
  unknown_name,
  bad_params,
  syntax_error,
  no_convergence,
  out_of_spectrum,
  root_out_of_range,
  wrong_branch,
  overflow,
  radius_too_large,
  not_coprime,
  not_stealthy,
  out_of_support,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace treenv

#endif
