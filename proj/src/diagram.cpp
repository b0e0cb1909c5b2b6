#include "diagram.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <utility>

namespace knotcert {

namespace {

struct DartUnionFind {
  std::vector<Dart> parent;
  explicit DartUnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  Dart find(Dart x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(Dart a, Dart b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

bool shadow_connected(const std::vector<Dart>& pair) {
  std::size_t n = pair.size() / 4;
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t c = stack.back();
    stack.pop_back();
    for (int s = 0; s < 4; ++s) {
      Dart e = pair[dart_at(c, s)];
      if (e == kNoDart) continue;
      std::size_t c2 = crossing_of(e);
      if (!seen[c2]) {
        seen[c2] = 1;
        ++reached;
        stack.push_back(c2);
      }
    }
  }
  return reached == n;
}

void validate_involution(const std::vector<Dart>& pair, std::size_t open_allowed) {
  if (pair.size() % 4 != 0) throw std::invalid_argument("dart count not a multiple of 4");
  std::size_t open = 0;
  for (Dart d = 0; d < pair.size(); ++d) {
    Dart e = pair[d];
    if (e == kNoDart) {
      ++open;
      continue;
    }
    if (e >= pair.size()) throw std::invalid_argument("dart pairing out of range");
    if (e == d) throw std::invalid_argument("dart paired with itself");
    if (pair[e] != d) throw std::invalid_argument("dart pairing is not an involution");
  }
  if (open != open_allowed) throw std::invalid_argument("unexpected unpaired darts");
}

}  // namespace

Diagram Diagram::from_pairing(std::vector<Dart> pairing) {
  validate_involution(pairing, 0);
  if (!shadow_connected(pairing)) throw std::invalid_argument("disconnected diagram");
  return Diagram(std::move(pairing));
}

std::size_t Diagram::component_count() const {
  if (pair_.empty()) return 1;  // the circle
  DartUnionFind uf(pair_.size());
  std::size_t merges = 0;
  for (Dart d = 0; d < pair_.size(); ++d) {
    if (uf.unite(d, pair_[d])) ++merges;
    if (uf.unite(d, through(d))) ++merges;
  }
  return pair_.size() - merges;
}

std::vector<std::vector<Dart>> rotation_faces(const Diagram& d) {
  std::vector<std::vector<Dart>> faces;
  std::vector<char> seen(d.dart_count(), 0);
  for (Dart d0 = 0; d0 < d.dart_count(); ++d0) {
    if (seen[d0]) continue;
    std::vector<Dart> cyc;
    Dart cur = d0;
    while (!seen[cur]) {
      seen[cur] = 1;
      cyc.push_back(cur);
      cur = rotated(d.partner(cur));
    }
    faces.push_back(std::move(cyc));
  }
  return faces;
}

int Diagram::shadow_euler_characteristic() const {
  if (pair_.empty()) return 2;
  auto n = static_cast<int>(crossing_count());
  auto f = static_cast<int>(rotation_faces(*this).size());
  return n - 2 * n + f;
}

std::vector<int> Diagram::crossing_signs() const {
  // 0 = unseen, 1 = out-dart, 2 = in-dart under the chosen orientation
  std::vector<char> dir(pair_.size(), 0);
  for (Dart d0 = 0; d0 < pair_.size(); ++d0) {
    if (dir[d0]) continue;
    Dart d = d0;
    do {
      dir[d] = 1;
      Dart e = pair_[d];
      dir[e] = 2;
      d = through(e);
    } while (d != d0);
  }
  std::vector<int> signs(crossing_count());
  for (std::size_t c = 0; c < crossing_count(); ++c) {
    int u_in = dir[dart_at(c, 0)] == 2 ? 0 : 2;
    int o_in = dir[dart_at(c, 1)] == 2 ? 1 : 3;
    signs[c] = (o_in == (u_in + 3) % 4) ? 1 : -1;
  }
  return signs;
}

int Diagram::writhe() const {
  auto signs = crossing_signs();
  return std::accumulate(signs.begin(), signs.end(), 0);
}

// ---------------------------------------------------------------------------
// PD codes

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  std::size_t line() const {
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(pos), '\n'));
  }
  std::size_t column() const {
    std::size_t start = text.rfind('\n', pos == 0 ? 0 : pos - 1);
    return pos - (start == std::string_view::npos ? 0 : start + 1) + 1;
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line(), column());
  }
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  bool eat(char c) {
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  long integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      fail("expected integer");
    return std::stol(std::string(text.substr(start, pos - start)));
  }
};

struct PdTerms {
  std::vector<std::array<long, 4>> terms;
  bool circle = false;
};

PdTerms scan_pd_terms(std::string_view text) {
  Cursor cur{text};
  PdTerms out;
  cur.skip_ws();
  if (text.substr(cur.pos, 6) == "circle") {
    cur.pos += 6;
    if (!cur.done()) cur.fail("trailing input after circle");
    out.circle = true;
    return out;
  }
  while (!cur.done()) {
    if (!cur.eat('X')) cur.fail("expected crossing term X(a,b,c,d)");
    if (!cur.eat('(')) cur.fail("expected '('");
    std::array<long, 4> labs{};
    for (int i = 0; i < 4; ++i) {
      labs[static_cast<std::size_t>(i)] = cur.integer();
      if (labs[static_cast<std::size_t>(i)] <= 0) cur.fail("arc labels must be positive");
      cur.skip_ws();
      if (i < 3 && !cur.eat(',')) cur.fail("expected ','");
    }
    if (!cur.eat(')')) cur.fail("expected ')'");
    out.terms.push_back(labs);
  }
  if (out.terms.empty()) cur.fail("empty input");
  return out;
}

// slot0=a, slot1=d, slot2=c, slot3=b (counterclockwise listing reversed)
constexpr int kPdLetterToSlot[4] = {0, 3, 2, 1};

std::vector<Dart> pd_pairing(const std::vector<std::array<long, 4>>& terms,
                             std::map<long, std::vector<Dart>>& occurrences) {
  std::size_t n = terms.size();
  for (std::size_t c = 0; c < n; ++c) {
    for (int i = 0; i < 4; ++i) {
      occurrences[terms[c][static_cast<std::size_t>(i)]].push_back(
          dart_at(c, kPdLetterToSlot[i]));
    }
  }
  std::vector<Dart> pair(4 * n, kNoDart);
  for (const auto& [label, darts] : occurrences) {
    if (darts.size() == 2) {
      pair[darts[0]] = darts[1];
      pair[darts[1]] = darts[0];
    }
  }
  return pair;
}

}  // namespace

Diagram parse_pd(std::string_view text) {
  PdTerms scanned = scan_pd_terms(text);
  if (scanned.circle) return Diagram::circle();
  std::map<long, std::vector<Dart>> occ;
  auto pair = pd_pairing(scanned.terms, occ);
  for (const auto& [label, darts] : occ) {
    if (darts.size() != 2)
      throw ParseError("arc label " + std::to_string(label) + " appears " +
                           std::to_string(darts.size()) + " time(s), expected 2",
                       1, 1);
  }
  if (!shadow_connected(pair)) throw ParseError("disconnected shadow", 1, 1);
  return Diagram::from_pairing(std::move(pair));
}

std::string serialize_pd(const Diagram& d) {
  if (d.crossing_count() == 0) return "circle";
  // canonical arc labels: arcs ordered by their smaller dart
  std::vector<Dart> order;
  for (Dart x = 0; x < d.dart_count(); ++x)
    if (x < d.partner(x)) order.push_back(x);
  std::vector<long> label(d.dart_count(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    label[order[i]] = static_cast<long>(i + 1);
    label[d.partner(order[i])] = static_cast<long>(i + 1);
  }
  std::string out;
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    if (c) out += ' ';
    out += "X(" + std::to_string(label[dart_at(c, 0)]) + ',' +
           std::to_string(label[dart_at(c, 3)]) + ',' +
           std::to_string(label[dart_at(c, 2)]) + ',' +
           std::to_string(label[dart_at(c, 1)]) + ')';
  }
  return out;
}

// ---------------------------------------------------------------------------
// signed Gauss codes

Diagram parse_gauss(std::string_view text) {
  Cursor cur{text};
  struct Pass {
    char role;
    long id;
    char sign;
  };
  std::vector<Pass> passes;
  while (!cur.done()) {
    char role = text[cur.pos];
    if (role != 'O' && role != 'U') cur.fail("expected O or U token");
    ++cur.pos;
    long id = cur.integer();
    cur.skip_ws();
    if (cur.pos >= text.size() || (text[cur.pos] != '+' && text[cur.pos] != '-'))
      cur.fail("expected sign + or -");
    char sign = text[cur.pos];
    ++cur.pos;
    passes.push_back({role, id, sign});
  }
  if (passes.empty()) cur.fail("empty input");

  std::map<long, std::vector<Pass>> byId;
  for (const auto& p : passes) byId[p.id].push_back(p);
  for (const auto& [id, v] : byId) {
    if (v.size() != 2 || v[0].role == v[1].role)
      throw ParseError("crossing " + std::to_string(id) +
                           " must occur exactly once as O and once as U",
                       1, 1);
    if (v[0].sign != v[1].sign)
      throw ParseError("sign mismatch for crossing " + std::to_string(id), 1, 1);
  }
  std::map<long, std::size_t> index;
  for (const auto& [id, v] : byId) index.emplace(id, index.size());

  std::size_t n = byId.size();
  std::vector<std::pair<Dart, Dart>> inout;  // (entry, exit) per pass
  inout.reserve(passes.size());
  for (const auto& p : passes) {
    std::size_t c = index[p.id];
    if (p.role == 'U')
      inout.emplace_back(dart_at(c, 0), dart_at(c, 2));
    else if (p.sign == '+')
      inout.emplace_back(dart_at(c, 3), dart_at(c, 1));
    else
      inout.emplace_back(dart_at(c, 1), dart_at(c, 3));
  }
  std::vector<Dart> pair(4 * n, kNoDart);
  for (std::size_t k = 0; k < inout.size(); ++k) {
    Dart from = inout[k].second;
    Dart to = inout[(k + 1) % inout.size()].first;
    pair[from] = to;
    pair[to] = from;
  }
  return Diagram::from_pairing(std::move(pair));
}

// ---------------------------------------------------------------------------
// braids

BraidWord BraidWord::parse(std::string_view text, int strands) {
  Cursor cur{text};
  BraidWord w;
  while (!cur.done()) {
    if (!cur.eat('s')) cur.fail("expected generator token s<i>[^<j>]");
    long i = cur.integer();
    if (i <= 0) cur.fail("generator index must be positive");
    long j = 1;
    if (cur.eat('^')) j = cur.integer();
    if (j == 0) cur.fail("exponent must be nonzero");
    w.letters.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  int maxgen = 0;
  for (auto [i, j] : w.letters) maxgen = std::max(maxgen, i);
  w.strands = strands > 0 ? strands : maxgen + 1;
  if (w.strands < 1) throw ParseError("strand count must be positive", 1, 1);
  if (maxgen >= w.strands)
    throw ParseError("generator index " + std::to_string(maxgen) +
                         " out of range for " + std::to_string(w.strands) + " strands",
                     1, 1);
  return w;
}

Diagram braid_closure(const BraidWord& word) {
  if (word.strands < 1) throw std::invalid_argument("strand count must be positive");
  struct Single {
    int position;  // leftmost of the two strands, 0-based
    bool positive;
  };
  std::vector<Single> crossings;
  for (auto [i, j] : word.letters) {
    if (i < 1 || i >= word.strands) throw std::invalid_argument("generator index out of range");
    if (j == 0) throw std::invalid_argument("exponent must be nonzero");
    for (int k = 0; k < std::abs(j); ++k) crossings.push_back({i - 1, j > 0});
  }
  std::size_t n = crossings.size();
  if (n == 0) {
    if (word.strands == 1) return Diagram::circle();
    throw std::invalid_argument("closure of the empty braid is disconnected");
  }
  std::vector<Dart> pair(4 * n, kNoDart);
  auto join = [&](Dart a, Dart b) {
    pair[a] = b;
    pair[b] = a;
  };
  // Positive generator: the strand entering top-left passes over. Slots per
  // the clockwise convention: positive crossing reads NE=0 (under-in),
  // SE=1, SW=2, NW=3; negative reads NW=0, NE=1, SE=2, SW=3.
  std::vector<Dart> hanging(static_cast<std::size_t>(word.strands), kNoDart);
  std::vector<Dart> tops(static_cast<std::size_t>(word.strands), kNoDart);
  std::vector<char> started(static_cast<std::size_t>(word.strands), 0);
  for (std::size_t c = 0; c < n; ++c) {
    auto [p, positive] = crossings[c];
    Dart tl, tr, bl, br;
    if (positive) {
      tl = dart_at(c, 3);
      tr = dart_at(c, 0);
      bl = dart_at(c, 2);
      br = dart_at(c, 1);
    } else {
      tl = dart_at(c, 0);
      tr = dart_at(c, 1);
      bl = dart_at(c, 3);
      br = dart_at(c, 2);
    }
    const std::pair<int, Dart> incoming[2] = {{p, tl}, {p + 1, tr}};
    for (auto [pos, din] : incoming) {
      auto u = static_cast<std::size_t>(pos);
      if (!started[u]) {
        started[u] = 1;
        tops[u] = din;
      } else {
        join(hanging[u], din);
      }
    }
    hanging[static_cast<std::size_t>(p)] = bl;
    hanging[static_cast<std::size_t>(p + 1)] = br;
  }
  for (int p = 0; p < word.strands; ++p) {
    auto u = static_cast<std::size_t>(p);
    if (!started[u])
      throw std::invalid_argument("strand " + std::to_string(p + 1) +
                                  " is not used by any crossing; closure is disconnected");
    join(hanging[u], tops[u]);
  }
  return Diagram::from_pairing(std::move(pair));
}

// ---------------------------------------------------------------------------
// surgery

Diagram mirror(const Diagram& d) {
  std::vector<Dart> pair(d.dart_count());
  for (Dart x = 0; x < d.dart_count(); ++x) pair[rotated(x)] = rotated(d.partner(x));
  return Diagram::from_pairing(std::move(pair));
}

Diagram cable(const Diagram& d, int k) {
  if (k < 1) throw std::invalid_argument("cable multiplicity must be >= 1");
  std::size_t n = d.crossing_count();
  if (n == 0) {
    if (k == 1) return Diagram::circle();
    throw std::invalid_argument("cable of the 0-crossing circle is disconnected for k >= 2");
  }
  auto K = static_cast<std::size_t>(k);
  std::size_t n2 = n * K * K;
  std::vector<Dart> pair(4 * n2, kNoDart);
  auto join = [&](Dart a, Dart b) {
    pair[a] = b;
    pair[b] = a;
  };
  // Grid crossing (x,y), 1-based: vertical (under-parallel) strand x,
  // horizontal (over-parallel) strand y. Slots: 0 = south (under-in side),
  // 1 = west, 2 = north, 3 = east.
  auto grid = [&](std::size_t c, std::size_t x, std::size_t y) {
    return c * K * K + (x - 1) * K + (y - 1);
  };
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t x = 1; x <= K; ++x)
      for (std::size_t y = 1; y + 1 <= K; ++y)
        join(dart_at(grid(c, x, y), 2), dart_at(grid(c, x, y + 1), 0));
    for (std::size_t y = 1; y <= K; ++y)
      for (std::size_t x = 1; x + 1 <= K; ++x)
        join(dart_at(grid(c, x, y), 3), dart_at(grid(c, x + 1, y), 1));
  }
  // Ribbon lanes are numbered left-to-right as seen facing outward along the
  // original dart, so lane l at one end of an arc meets lane k+1-l at the
  // other end.
  auto boundary = [&](Dart d0, std::size_t lane) {
    std::size_t c = crossing_of(d0);
    switch (slot_of(d0)) {
      case 0: return dart_at(grid(c, K + 1 - lane, 1), 0);
      case 2: return dart_at(grid(c, lane, K), 2);
      case 1: return dart_at(grid(c, 1, lane), 1);
      default: return dart_at(grid(c, K, K + 1 - lane), 3);
    }
  };
  for (Dart x = 0; x < d.dart_count(); ++x) {
    Dart e = d.partner(x);
    if (x < e)
      for (std::size_t lane = 1; lane <= K; ++lane)
        join(boundary(x, lane), boundary(e, K + 1 - lane));
  }
  return Diagram::from_pairing(std::move(pair));
}

Diagram connected_sum(const Diagram& d1, Dart arc1, const Diagram& d2, Dart arc2) {
  if (arc1 >= d1.dart_count()) throw std::invalid_argument("arc1 does not identify an arc of the first diagram");
  if (arc2 >= d2.dart_count()) throw std::invalid_argument("arc2 does not identify an arc of the second diagram");
  auto off = static_cast<Dart>(d1.dart_count());
  std::vector<Dart> pair(d1.dart_count() + d2.dart_count());
  for (Dart x = 0; x < d1.dart_count(); ++x) pair[x] = d1.partner(x);
  for (Dart x = 0; x < d2.dart_count(); ++x) pair[off + x] = off + d2.partner(x);
  Dart b1 = d1.partner(arc1);
  Dart b2 = d2.partner(arc2);
  pair[arc1] = off + arc2;
  pair[off + arc2] = arc1;
  pair[b1] = off + b2;
  pair[off + b2] = b1;
  Diagram out = Diagram::from_pairing(std::move(pair));
  out.provenance = "connected_sum(arc1=" + std::to_string(arc1) +
                   ",arc2=" + std::to_string(arc2) + ")";
  return out;
}

// ---------------------------------------------------------------------------
// long diagrams

LongDiagram LongDiagram::from_pairing(std::vector<Dart> pairing, Dart head, Dart tail) {
  if (pairing.empty()) {
    if (head != kNoDart || tail != kNoDart)
      throw std::invalid_argument("bare arc has no endpoint darts");
    return LongDiagram({}, kNoDart, kNoDart);
  }
  validate_involution(pairing, 2);
  if (head >= pairing.size() || tail >= pairing.size() || head == tail ||
      pairing[head] != kNoDart || pairing[tail] != kNoDart)
    throw std::invalid_argument("endpoints must be the two unpaired darts");
  if (!shadow_connected(pairing)) throw std::invalid_argument("disconnected long diagram");
  LongDiagram ld(std::move(pairing), head, tail);
  if (closure(ld).component_count() != 1)
    throw std::invalid_argument("long diagram must be a single open strand");
  return ld;
}

LongDiagram parse_long_pd(std::string_view text) {
  Cursor probe{text};
  probe.skip_ws();
  if (text.substr(probe.pos, 3) == "arc") {
    probe.pos += 3;
    if (!probe.done()) probe.fail("trailing input after arc");
    return LongDiagram::arc();
  }
  PdTerms scanned = scan_pd_terms(text);
  if (scanned.circle) throw ParseError("'circle' is not a long diagram", 1, 1);
  std::map<long, std::vector<Dart>> occ;
  auto pair = pd_pairing(scanned.terms, occ);
  std::vector<std::pair<long, Dart>> open;
  for (const auto& [label, darts] : occ) {
    if (darts.size() == 1)
      open.emplace_back(label, darts[0]);
    else if (darts.size() != 2)
      throw ParseError("arc label " + std::to_string(label) + " appears " +
                           std::to_string(darts.size()) + " time(s)",
                       1, 1);
  }
  if (open.size() != 2)
    throw ParseError("a long diagram needs exactly two endpoint labels, found " +
                         std::to_string(open.size()),
                     1, 1);
  std::sort(open.begin(), open.end());
  return LongDiagram::from_pairing(std::move(pair), open[0].second, open[1].second);
}

Diagram closure(const LongDiagram& ld) {
  if (ld.crossing_count() == 0) return Diagram::circle();
  std::vector<Dart> pair(ld.pairing().begin(), ld.pairing().end());
  pair[ld.head()] = ld.tail();
  pair[ld.tail()] = ld.head();
  return Diagram::from_pairing(std::move(pair));
}

}  // namespace knotcert
