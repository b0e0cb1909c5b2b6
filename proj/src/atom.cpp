#include "atom.hpp"

#include <algorithm>
#include <array>

namespace knotcert {

namespace {

// corner mate: black pairs slots (0,1),(2,3); white pairs (1,2),(3,0)
Dart corner_mate(Dart d, CellColour colour) {
  int s = slot_of(d);
  int m;
  if (colour == CellColour::black)
    m = s ^ 1;  // 0<->1, 2<->3
  else
    m = (s % 2 == 1) ? (s + 1) % 4 : (s + 3) % 4;  // 1<->2, 3<->0
  return rotated(d, m - s);
}

std::vector<std::vector<Dart>> trace_cells(const Diagram& d, CellColour colour) {
  std::vector<std::vector<Dart>> cells;
  std::vector<char> seen(d.dart_count(), 0);
  for (Dart d0 = 0; d0 < d.dart_count(); ++d0) {
    if (seen[d0]) continue;
    std::vector<Dart> cyc;
    Dart cur = d0;
    do {
      cyc.push_back(cur);
      seen[cur] = 1;
      Dart m = corner_mate(cur, colour);
      cyc.push_back(m);
      seen[m] = 1;
      cur = d.partner(m);
    } while (cur != d0);
    cells.push_back(std::move(cyc));
  }
  return cells;
}

void fill_cell_ids(const std::vector<std::vector<Dart>>& cells, std::vector<Dart>& ids) {
  for (const auto& cyc : cells) {
    Dart id = *std::min_element(cyc.begin(), cyc.end());
    for (Dart d : cyc) ids[d] = id;
  }
}

// Orientable iff the cells admit directions traversing every edge once each
// way. Each edge {d, partner(d)} is traversed by exactly one black and one
// white cell; propagate orientations across edges demanding disagreement.
bool propagate_orientation(const Diagram& d, const std::vector<std::vector<Dart>>& black,
                           const std::vector<std::vector<Dart>>& white) {
  std::size_t total = black.size() + white.size();
  // edge key = smaller dart; record (cell index, direction) per traversal
  struct Traversal {
    int cell = -1;
    int dir = 0;
  };
  std::vector<std::array<Traversal, 2>> edge(d.dart_count() / 2);
  std::vector<Dart> edge_index(d.dart_count(), kNoDart);
  Dart next_edge = 0;
  for (Dart x = 0; x < d.dart_count(); ++x)
    if (x < d.partner(x)) {
      edge_index[x] = next_edge;
      edge_index[d.partner(x)] = next_edge;
      ++next_edge;
    }
  auto record = [&](int cell, const std::vector<Dart>& cyc) {
    // arc steps are cyc[i] -> partner(cyc[i]) for odd i
    for (std::size_t i = 1; i < cyc.size(); i += 2) {
      Dart m = cyc[i];
      Dart idx = edge_index[m];
      int dir = (m < d.partner(m)) ? 1 : -1;
      auto& slots = edge[idx];
      if (slots[0].cell < 0)
        slots[0] = {cell, dir};
      else
        slots[1] = {cell, dir};
    }
  };
  for (std::size_t i = 0; i < black.size(); ++i) record(static_cast<int>(i), black[i]);
  for (std::size_t i = 0; i < white.size(); ++i)
    record(static_cast<int>(black.size() + i), white[i]);

  std::vector<int> orient(total, 0);
  std::vector<std::vector<std::pair<int, int>>> adj(total);  // (other cell, required product)
  for (const auto& slots : edge) {
    int a = slots[0].cell, b = slots[1].cell;
    // opposite directions required: o_a*dir_a == -o_b*dir_b
    int prod = -slots[0].dir * slots[1].dir;
    adj[static_cast<std::size_t>(a)].push_back({b, prod});
    adj[static_cast<std::size_t>(b)].push_back({a, prod});
  }
  for (std::size_t start = 0; start < total; ++start) {
    if (orient[start] != 0) continue;
    orient[start] = 1;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      std::size_t k = stack.back();
      stack.pop_back();
      for (auto [j, prod] : adj[k]) {
        int need = orient[k] * prod;
        auto ju = static_cast<std::size_t>(j);
        if (orient[ju] == 0) {
          orient[ju] = need;
          stack.push_back(ju);
        } else if (orient[ju] != need) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

Atom build_atom(const Diagram& d) {
  Atom a;
  a.vertices = d.crossing_count();
  a.edges = 2 * d.crossing_count();
  if (d.crossing_count() == 0) {
    // the circle: frame is a vertex-free loop; one cell of each colour
    a.f_black = a.f_white = 1;
    a.chi = 2;
    a.orientable = true;
    a.genus = 0;
    return a;
  }
  a.black_cells = trace_cells(d, CellColour::black);
  a.white_cells = trace_cells(d, CellColour::white);
  a.f_black = a.black_cells.size();
  a.f_white = a.white_cells.size();
  a.chi = static_cast<int>(a.vertices) - static_cast<int>(a.edges) +
          static_cast<int>(a.face_count());
  a.black_cell_id.assign(d.dart_count(), kNoDart);
  a.white_cell_id.assign(d.dart_count(), kNoDart);
  fill_cell_ids(a.black_cells, a.black_cell_id);
  fill_cell_ids(a.white_cells, a.white_cell_id);

  a.orientable = propagate_orientation(d, a.black_cells, a.white_cells);
  a.genus = a.orientable ? (2 - a.chi) / 2 : 2 - a.chi;

  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    if (a.black_cell_id[dart_at(c, 0)] == a.black_cell_id[dart_at(c, 2)])
      a.goodness.witnesses.push_back({c, CellColour::black, a.black_cell_id[dart_at(c, 0)]});
    if (a.white_cell_id[dart_at(c, 1)] == a.white_cell_id[dart_at(c, 3)])
      a.goodness.witnesses.push_back({c, CellColour::white, a.white_cell_id[dart_at(c, 1)]});
  }
  a.goodness.good = a.goodness.witnesses.empty();
  return a;
}

GoodnessReport is_good(const Diagram& d) { return build_atom(d).goodness; }

}  // namespace knotcert
