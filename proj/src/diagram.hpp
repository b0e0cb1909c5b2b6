#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knotcert {

// A diagram is an abstract 4-valent rotation system with over/under structure.
// Crossing c owns darts 4c+s for slots s = 0..3 in clockwise order; slots 0
// and 2 carry the understrand, 1 and 3 the overstrand. Arcs are recorded by
// the dart pairing (a fixed-point-free involution). Virtual crossings are
// never stored: a diagram whose rotation system does not embed in the sphere
// is simply reported as non-classical.
using Dart = std::uint32_t;

inline constexpr Dart kNoDart = 0xffffffffu;

inline Dart dart_at(std::size_t crossing, int slot) {
  return static_cast<Dart>(4 * crossing + static_cast<std::size_t>(slot));
}
inline std::size_t crossing_of(Dart d) { return d / 4; }
inline int slot_of(Dart d) { return static_cast<int>(d % 4); }
inline Dart rotated(Dart d, int k = 1) {
  return static_cast<Dart>(4 * (d / 4) + ((d % 4 + static_cast<unsigned>(k % 4 + 4)) % 4));
}
// straight through the crossing: slot s -> s+2
inline Dart through(Dart d) { return rotated(d, 2); }

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

class Diagram {
 public:
  // Validates the pairing: involution, no fixed points, connected shadow.
  // A diagram with zero crossings is the round unknot ("circle").
  static Diagram from_pairing(std::vector<Dart> pairing);
  static Diagram circle() { return Diagram({}); }

  std::size_t crossing_count() const { return pair_.size() / 4; }
  std::size_t dart_count() const { return pair_.size(); }
  Dart partner(Dart d) const { return pair_[d]; }
  std::span<const Dart> pairing() const { return pair_; }

  std::size_t component_count() const;
  bool is_knot() const { return component_count() == 1; }

  // Shadow Euler characteristic V - E + F with faces traced through the
  // rotation system (not the atom's cells). Classical <=> chi == 2.
  int shadow_euler_characteristic() const;
  bool is_classical() const { return shadow_euler_characteristic() == 2; }

  // Signs use the orientation obtained by traversing each component from its
  // lowest dart, leaving through that dart first. A crossing is positive when
  // the overstrand enters at the slot counterclockwise-adjacent to the
  // understrand entry slot: o_in == (u_in + 3) mod 4.
  std::vector<int> crossing_signs() const;
  int writhe() const;

  bool operator==(const Diagram& other) const { return pair_ == other.pair_; }

  // set by surgery operations that involve a choice (e.g. connected_sum arcs)
  std::string provenance;

 private:
  explicit Diagram(std::vector<Dart> pairing) : pair_(std::move(pairing)) {}
  std::vector<Dart> pair_;
};

// Faces of the embedded shadow: orbits of d -> rotated(partner(d)).
std::vector<std::vector<Dart>> rotation_faces(const Diagram& d);

// PD text: whitespace-separated X(a,b,c,d) terms, counterclockwise listing
// starting at the incoming understrand; mapped to internal clockwise slots by
// reversal (slot0=a, slot1=d, slot2=c, slot3=b). The token "circle" denotes
// the 0-crossing unknot.
Diagram parse_pd(std::string_view text);
std::string serialize_pd(const Diagram& d);

// Signed Gauss code: tokens O<id><sign> / U<id><sign>. Each id must occur
// exactly once as O and once as U, with equal signs. Under passes run slot0
// -> slot2; over passes enter slot3 for '+' and slot1 for '-'.
Diagram parse_gauss(std::string_view text);

struct BraidWord {
  int strands = 0;
  std::vector<std::pair<int, int>> letters;  // (generator index 1-based, exponent != 0)

  // "s1^3 s2^-1" style; strands == 0 infers max generator index + 1
  static BraidWord parse(std::string_view text, int strands = 0);
};

Diagram braid_closure(const BraidWord& word);

Diagram mirror(const Diagram& d);

// Blackboard-framed k-cable: every arc becomes k parallel arcs, every
// crossing a k x k grid of crossings with inherited over/under.
Diagram cable(const Diagram& d, int k);

// Cut the arcs {arc1, partner(arc1)} and {arc2, partner(arc2)} and
// cross-splice: arc1<->arc2 and partner(arc1)<->partner(arc2).
Diagram connected_sum(const Diagram& d1, Dart arc1, const Diagram& d2, Dart arc2);

// A knot diagram with two free ends. A zero-crossing long diagram is the
// bare arc.
class LongDiagram {
 public:
  static LongDiagram from_pairing(std::vector<Dart> pairing, Dart head, Dart tail);
  static LongDiagram arc() { return LongDiagram({}, kNoDart, kNoDart); }

  std::size_t crossing_count() const { return pair_.size() / 4; }
  Dart head() const { return head_; }
  Dart tail() const { return tail_; }
  std::span<const Dart> pairing() const { return pair_; }

 private:
  LongDiagram(std::vector<Dart> pairing, Dart head, Dart tail)
      : pair_(std::move(pairing)), head_(head), tail_(tail) {}
  std::vector<Dart> pair_;
  Dart head_, tail_;
};

// PD text with exactly two arc labels occurring once (the endpoints, ordered
// by label); the token "arc" denotes the 0-crossing long diagram.
LongDiagram parse_long_pd(std::string_view text);

// Join the two endpoints by an arc.
Diagram closure(const LongDiagram& ld);

}  // namespace knotcert
