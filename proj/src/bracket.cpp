#include "bracket.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <numeric>
#include <thread>

#include "atom.hpp"

namespace knotcert {

LaurentPoly LaurentPoly::monomial(int exponent, long long coefficient) {
  LaurentPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

long long LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int exponent, long long coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (auto [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (auto [e1, c1] : a.terms_)
    for (auto [e2, c2] : b.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::substitute_inverse() const {
  LaurentPoly r;
  for (auto [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

int LaurentPoly::span() const {
  if (terms_.empty()) throw std::domain_error("empty polynomial");
  return terms_.rbegin()->first - terms_.begin()->first;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    auto [e, c] = *it;
    if (e == 0)
      out += std::to_string(c);
    else if (c == 1)
      out += "a^" + std::to_string(e);
    else if (c == -1)
      out += "-a^" + std::to_string(e);
    else
      out += std::to_string(c) + "*a^" + std::to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// union-find specialized for repeated state evaluations
struct LoopCounter {
  std::vector<Dart> parent;

  Dart find(Dart x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  std::size_t count(const Diagram& d, std::uint64_t white_mask) {
    std::size_t darts = d.dart_count();
    parent.resize(darts);
    std::iota(parent.begin(), parent.end(), 0u);
    std::size_t merges = 0;
    auto unite = [&](Dart a, Dart b) {
      a = find(a);
      b = find(b);
      if (a != b) {
        parent[b] = a;
        ++merges;
      }
    };
    for (Dart x = 0; x < darts; ++x) {
      Dart e = d.partner(x);
      if (x < e) unite(x, e);
    }
    for (std::size_t c = 0; c < d.crossing_count(); ++c) {
      if (white_mask >> c & 1) {
        unite(dart_at(c, 1), dart_at(c, 2));
        unite(dart_at(c, 3), dart_at(c, 0));
      } else {
        unite(dart_at(c, 0), dart_at(c, 1));
        unite(dart_at(c, 2), dart_at(c, 3));
      }
    }
    return darts - merges;
  }
};

// rows of (-a^2 - a^-2)^m: exponents 2m-4j carry (-1)^m * C(m,j)
std::vector<std::vector<long long>> delta_power_table(std::size_t max_power) {
  std::vector<std::vector<long long>> rows(max_power + 1);
  rows[0] = {1};
  for (std::size_t m = 1; m <= max_power; ++m) {
    const auto& prev = rows[m - 1];
    std::vector<long long> row(m + 1, 0);
    for (std::size_t j = 0; j < prev.size(); ++j) {
      row[j] -= prev[j];
      row[j + 1] -= prev[j];
    }
    rows[m] = std::move(row);
  }
  return rows;
}

}  // namespace

std::size_t state_loop_count(const Diagram& d, std::uint64_t white_mask) {
  if (d.crossing_count() == 0) return 1;
  LoopCounter lc;
  return lc.count(d, white_mask);
}

namespace detail {

LaurentPoly bracket_over_range(const Diagram& d, std::uint64_t begin, std::uint64_t end) {
  auto n = static_cast<int>(d.crossing_count());
  // accumulate into a flat array: exponents lie in [-3n, 3n]
  std::vector<long long> acc(static_cast<std::size_t>(6 * n + 1), 0);
  int offset = 3 * n;
  auto deltas = delta_power_table(d.crossing_count() + 1);
  LoopCounter lc;
  for (std::uint64_t state = begin; state < end; ++state) {
    std::size_t loops = lc.count(d, state);
    int base = n - 2 * std::popcount(state);
    const auto& row = deltas[loops - 1];
    int top = 2 * static_cast<int>(loops - 1);
    for (std::size_t j = 0; j < row.size(); ++j)
      acc[static_cast<std::size_t>(base + top - 4 * static_cast<int>(j) + offset)] += row[j];
  }
  LaurentPoly out;
  for (std::size_t i = 0; i < acc.size(); ++i)
    out.add_term(static_cast<int>(i) - offset, acc[i]);
  return out;
}

}  // namespace detail

LaurentPoly kauffman_bracket(const Diagram& d, const BracketOptions& options) {
  std::size_t n = d.crossing_count();
  if (n > options.limit) throw TooLargeError(n, options.limit);
  if (n == 0) return LaurentPoly::one();
  std::uint64_t states = std::uint64_t{1} << n;

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (n < 14 || threads == 1) return detail::bracket_over_range(d, 0, states);

  std::uint64_t chunks = std::min<std::uint64_t>(threads * 4, states);
  std::uint64_t per = states / chunks;
  std::vector<std::future<LaurentPoly>> parts;
  for (std::uint64_t i = 0; i < chunks; ++i) {
    std::uint64_t lo = i * per;
    std::uint64_t hi = (i + 1 == chunks) ? states : lo + per;
    parts.push_back(std::async(std::launch::async, [&d, lo, hi] {
      return detail::bracket_over_range(d, lo, hi);
    }));
  }
  LaurentPoly total;
  for (auto& f : parts) total += f.get();
  return total;
}

SpanReport span_bound_report(const Diagram& d, const BracketOptions& options) {
  SpanReport r;
  r.n = d.crossing_count();
  r.chi = build_atom(d).chi;
  r.bound = 4 * static_cast<int>(r.n) + 2 * (r.chi - 2);
  r.span = kauffman_bracket(d, options).span();
  r.equality = r.span == r.bound;
  return r;
}

}  // namespace knotcert
