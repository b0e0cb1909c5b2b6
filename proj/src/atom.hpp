#pragma once

#include <string>
#include <vector>

#include "diagram.hpp"

namespace knotcert {

// The atom of a diagram: the closed surface obtained by attaching black
// 2-cells along the black-corner boundary cycles and white 2-cells along the
// white ones. Corners at a crossing, with slots 0..3 clockwise and 0,2 under:
// (slot0,slot1) and (slot2,slot3) are black, (slot1,slot2) and (slot3,slot0)
// are white.

enum class CellColour { black, white };

inline const char* to_string(CellColour c) {
  return c == CellColour::black ? "black" : "white";
}

struct GoodnessWitness {
  std::size_t crossing;
  CellColour colour;
  Dart cell;  // canonical cell id: the smallest dart on the cell

  bool operator==(const GoodnessWitness&) const = default;
};

struct GoodnessReport {
  bool good = true;
  std::vector<GoodnessWitness> witnesses;  // sorted by (crossing, colour)
};

struct Atom {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  // Boundary cycles as dart sequences; every dart appears in exactly one cell
  // of each colour. Cycles start at their smallest dart and step corner-mate
  // first, so the representation is deterministic.
  std::vector<std::vector<Dart>> black_cells;
  std::vector<std::vector<Dart>> white_cells;
  // canonical cell id per dart
  std::vector<Dart> black_cell_id;
  std::vector<Dart> white_cell_id;

  std::size_t f_black = 0;
  std::size_t f_white = 0;
  std::size_t face_count() const { return f_black + f_white; }
  int chi = 0;
  bool orientable = true;
  // genus when orientable, crosscap number (2 - chi) otherwise
  int genus = 0;

  GoodnessReport goodness;
};

Atom build_atom(const Diagram& d);

GoodnessReport is_good(const Diagram& d);

}  // namespace knotcert
