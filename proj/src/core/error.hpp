#pragma once
#include <stdexcept>
#include <string>

namespace fanmat {

enum class Errc {
  parse,
  dimension,
  index_out_of_range,
  length_mismatch,
  empty_ideal,
  empty_polynomial,
  rank_deficient,
  no_solution,
  not_integer,
  not_gale_dual,
  not_simplicial,
  bad_intersection,
  not_maximal,
  not_free_homogeneous,
  check_failed,
  internal,
};

class Error : public std::runtime_error {
public:
  Error(Errc c, std::string msg) : std::runtime_error(std::move(msg)), code_(c) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

// input-shaped problems exit with 2 at the CLI, math failures with 1
inline bool is_input_error(Errc c) {
  switch (c) {
    case Errc::parse:
    case Errc::dimension:
    case Errc::index_out_of_range:
    case Errc::length_mismatch:
    case Errc::empty_ideal:
    case Errc::empty_polynomial:
      return true;
    default:
      return false;
  }
}

}  // namespace fanmat
