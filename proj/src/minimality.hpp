#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "atom.hpp"
#include "bracket.hpp"
#include "diagram.hpp"

namespace knotcert {

enum class Verdict { minimal_classical, minimal_framed, minimal_long, inconclusive };

const char* to_string(Verdict v);

// Tags naming the minimality criterion a certificate rests on.
inline constexpr const char* kClassicalCriterion = "good-classical-knot-minimality";
inline constexpr const char* kFramedCriterion = "good-framed-minimality";
inline constexpr const char* kLongCriterion = "good-long-closure-minimality";

struct Certificate {
  std::string input_pd;  // canonical serialization of the certified diagram
  std::size_t n = 0;
  bool classical = false;
  bool knot = false;
  bool good = false;
  int chi = 0;
  std::optional<int> span;  // absent when the state sum exceeds the limit
  int bound = 0;
  Verdict verdict = Verdict::inconclusive;
  std::string criterion;  // which theorem-level criterion was applied
  std::string failing;    // first failing predicate when inconclusive
  std::vector<GoodnessWitness> witnesses;
};

// A good classical knot diagram is minimal among classical diagrams.
Certificate certify_classical(const Diagram& d, const BracketOptions& options = {});

// A good diagram (links and non-classical diagrams allowed) is minimal in the
// framed category.
Certificate certify_framed(const Diagram& d, const BracketOptions& options = {});

// A long knot diagram whose closure is good is minimal in the long category.
Certificate certify_long(const LongDiagram& ld, const BracketOptions& options = {});

// Local patterns on the faces of the shadow. Only applicability is detected;
// no move is performed.
struct MoveSites {
  std::vector<std::size_t> r1_decreasing;                 // crossings with a monogon face
  std::vector<std::array<std::size_t, 2>> r2_decreasing;  // bigons, one strand over at both corners
  std::vector<std::array<std::size_t, 3>> r3_applicable;  // trigons with an all-over edge
};

MoveSites detect_reducing_moves(const Diagram& d);

struct CablingReport {
  int m = 0;
  std::size_t n = 0;       // crossings of the input diagram
  int chi = 0;             // atom chi of the input
  bool applicable = false; // input is good, so the span prediction is exact
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t cell_count = 0;
  int chi_m = 0;
  bool counts_ok = false;    // vertices == m^2 n, edges == 2 m^2 n, cells == m (n + chi)
  long long predicted_span = 0;  // 2 (m^2 + m) n + 2 m chi - 4
  bool identity_ok = false;      // 4 m^2 n + 2 (chi_m - 2) == predicted_span
  std::optional<long long> measured_span;  // only when within the state-sum limit
  bool span_ok = false;  // measured (when present and applicable) equals predicted
};

CablingReport cabling_consistency(const Diagram& d, int m, const BracketOptions& options = {});

struct PositiveBraidDiagram {
  Diagram diagram;
  bool knot = false;
  GoodnessReport goodness;
};

// Closure of s1^e1 s2^e2 ... with generators assigned cyclically; every
// exponent must be >= 2.
PositiveBraidDiagram generate_positive_braid(int strands, std::span<const int> exponents);

}  // namespace knotcert
