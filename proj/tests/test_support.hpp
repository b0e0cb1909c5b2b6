#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "atom.hpp"
#include "bracket.hpp"
#include "diagram.hpp"

namespace testsupport {

using namespace knotcert;

// fixtures
inline constexpr const char* kTrefoilPd = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
inline constexpr const char* kTrefoilCanonical = "X(1,4,3,2) X(5,6,4,1) X(2,3,6,5)";
inline constexpr const char* kKinkPd = "X(1,2,2,1)";
inline constexpr const char* kVirtualTrefoilGauss = "O1+O2+U1+U2+";
inline constexpr const char* kTrefoilGauss = "O1+U2+O3+U1+O2+U3+";
inline constexpr const char* kPokeGauss = "O1+O2-U2-U1+";
inline constexpr const char* kLongTrefoilPd = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,7)";

// random connected diagram: uniform fixed-point-free involution on the darts
// (covers random rotation systems and random over/under roles), resampled
// until the shadow is connected
inline Diagram random_diagram(std::mt19937_64& rng, std::size_t n) {
  std::vector<Dart> darts(4 * n);
  std::iota(darts.begin(), darts.end(), 0u);
  for (;;) {
    std::shuffle(darts.begin(), darts.end(), rng);
    std::vector<Dart> pair(4 * n);
    for (std::size_t i = 0; i < darts.size(); i += 2) {
      pair[darts[i]] = darts[i + 1];
      pair[darts[i + 1]] = darts[i];
    }
    try {
      return Diagram::from_pairing(std::move(pair));
    } catch (const std::invalid_argument&) {
      // disconnected; resample
    }
  }
}

namespace oracle {

// loop count of a smoothing state by plain graph traversal (the library uses
// union-find; this route stays independent)
inline std::size_t state_loops_dfs(const Diagram& d, std::uint64_t white_mask) {
  if (d.crossing_count() == 0) return 1;
  std::size_t darts = d.dart_count();
  std::vector<std::vector<Dart>> adj(darts);
  for (Dart x = 0; x < darts; ++x) {
    adj[x].push_back(d.partner(x));
  }
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    int a0 = (white_mask >> c & 1) ? 1 : 0;
    int a1 = (white_mask >> c & 1) ? 2 : 1;
    int b0 = (white_mask >> c & 1) ? 3 : 2;
    int b1 = (white_mask >> c & 1) ? 0 : 3;
    adj[dart_at(c, a0)].push_back(dart_at(c, a1));
    adj[dart_at(c, a1)].push_back(dart_at(c, a0));
    adj[dart_at(c, b0)].push_back(dart_at(c, b1));
    adj[dart_at(c, b1)].push_back(dart_at(c, b0));
  }
  std::vector<char> seen(darts, 0);
  std::size_t loops = 0;
  for (Dart s = 0; s < darts; ++s) {
    if (seen[s]) continue;
    ++loops;
    std::vector<Dart> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Dart x = stack.back();
      stack.pop_back();
      for (Dart y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
  }
  return loops;
}

// full state enumeration with the traversal loop counter and map-based
// polynomial arithmetic; independent of the library's accumulation scheme
inline LaurentPoly bracket_enumerated(const Diagram& d) {
  if (d.crossing_count() == 0) return LaurentPoly::one();
  LaurentPoly delta;
  delta.add_term(2, -1);
  delta.add_term(-2, -1);
  LaurentPoly total;
  auto n = d.crossing_count();
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
    std::size_t whites = 0;
    for (std::size_t c = 0; c < n; ++c)
      if (state >> c & 1) ++whites;
    LaurentPoly term = LaurentPoly::monomial(
        static_cast<int>(n) - 2 * static_cast<int>(whites), 1);
    std::size_t loops = state_loops_dfs(d, state);
    for (std::size_t i = 1; i < loops; ++i) term = term * delta;
    total += term;
  }
  return total;
}

// cell count by union-find over corner-mate and arc adjacencies (the library
// traces boundary walks)
inline std::size_t cell_count_union_find(const Diagram& d, CellColour colour) {
  std::size_t darts = d.dart_count();
  std::vector<Dart> parent(darts);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](Dart x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t merges = 0;
  auto unite = [&](Dart a, Dart b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[b] = a;
      ++merges;
    }
  };
  for (Dart x = 0; x < darts; ++x) unite(x, d.partner(x));
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    if (colour == CellColour::black) {
      unite(dart_at(c, 0), dart_at(c, 1));
      unite(dart_at(c, 2), dart_at(c, 3));
    } else {
      unite(dart_at(c, 1), dart_at(c, 2));
      unite(dart_at(c, 3), dart_at(c, 0));
    }
  }
  return darts - merges;
}

// component count from strand orbits (the library uses union-find)
inline std::size_t component_count_orbits(const Diagram& d) {
  if (d.crossing_count() == 0) return 1;
  std::vector<char> seen(d.dart_count(), 0);
  std::size_t orbits = 0;
  for (Dart s = 0; s < d.dart_count(); ++s) {
    if (seen[s]) continue;
    ++orbits;
    Dart x = s;
    while (!seen[x]) {
      seen[x] = 1;
      x = through(d.partner(x));
    }
  }
  return orbits / 2;  // forward and backward walks pair up
}

}  // namespace oracle

inline LaurentPoly make_poly(std::initializer_list<std::pair<int, long long>> terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p.add_term(e, c);
  return p;
}

inline const LaurentPoly& trefoil_bracket() {
  // eight-state brute force: -a^5 - a^-3 + a^-7
  static LaurentPoly p = make_poly({{5, -1}, {-3, -1}, {-7, 1}});
  return p;
}

}  // namespace testsupport
