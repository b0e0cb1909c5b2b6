#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diagram.hpp"

namespace knotcert {

// Exact integer-coefficient Laurent polynomial in the single variable a.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly one() { return monomial(0, 1); }
  static LaurentPoly monomial(int exponent, long long coefficient);

  bool is_zero() const { return terms_.empty(); }
  long long coefficient(int exponent) const;
  const std::map<int, long long>& terms() const { return terms_; }

  LaurentPoly& operator+=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly&) const = default;

  // a -> a^-1
  LaurentPoly substitute_inverse() const;

  // leading degree minus lowest degree; throws std::domain_error on zero
  int span() const;

  // deterministic rendering, descending exponents, e.g. "-a^5 + -a^-3 + a^-7"
  std::string to_string() const;

  void add_term(int exponent, long long coefficient);

 private:
  std::map<int, long long> terms_;
};

struct TooLargeError : std::runtime_error {
  TooLargeError(std::size_t n, std::size_t limit)
      : std::runtime_error("state sum refused: " + std::to_string(n) +
                           " crossings exceeds the limit of " + std::to_string(limit)),
        crossings(n),
        limit(limit) {}
  std::size_t crossings;
  std::size_t limit;
};

struct BracketOptions {
  std::size_t limit = 24;  // refuse state sums beyond 2^limit states
  unsigned threads = 0;    // 0 = pick from hardware concurrency
};

// Loop count of one smoothing state. Bit c of white_mask set = white
// smoothing at crossing c (joins slots 1-2 and 3-0), clear = black (0-1, 2-3).
std::size_t state_loop_count(const Diagram& d, std::uint64_t white_mask);

// Kauffman bracket: sum over all 2^n states of
//   a^(#black - #white) * (-a^2 - a^-2)^(loops - 1),
// the black smoothing carrying the a factor. The empty diagram normalizes
// to 1. Throws TooLargeError above the configured limit.
LaurentPoly kauffman_bracket(const Diagram& d, const BracketOptions& options = {});

struct SpanReport {
  std::size_t n = 0;
  int span = 0;
  int chi = 0;
  int bound = 0;  // 4n + 2(chi - 2)
  bool equality = false;
};

SpanReport span_bound_report(const Diagram& d, const BracketOptions& options = {});

namespace detail {
// State-sum restricted to masks in [begin, end); exact partial sum used by
// the parallel driver and by the evaluation-order tests.
LaurentPoly bracket_over_range(const Diagram& d, std::uint64_t begin, std::uint64_t end);
}  // namespace detail

}  // namespace knotcert
