#include "contin/corpus.hpp"

#include <algorithm>
#include <set>

namespace contin {
namespace {

void extend(int den, int max_components, int start, std::vector<Component>& cur, std::vector<ClosedSet1D>& out) {
  for (int lo = start; lo <= den; ++lo) {
    for (int hi = lo; hi <= den; ++hi) {
      cur.push_back({Rational(lo, den), Rational(hi, den)});
      out.emplace_back(cur);
      if (static_cast<int>(cur.size()) < max_components) extend(den, max_components, hi + 1, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<ClosedSet1D> grid_corpus(int den, int max_components) {
  std::vector<ClosedSet1D> out;
  std::vector<Component> cur;
  extend(den, max_components, 0, cur, out);
  return out;
}

ClosedSet1D random_set(std::mt19937_64& rng, int den, int max_components) {
  std::uniform_int_distribution<int> count(1, max_components);
  while (true) {
    const int k = count(rng);
    std::uniform_int_distribution<int> coord(0, den);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<int> marks;
    for (int i = 0; i < 2 * k; ++i) marks.push_back(coord(rng));
    std::sort(marks.begin(), marks.end());
    std::vector<Component> raw;
    bool ok = true;
    int prev_hi = -1;
    for (int i = 0; i < k; ++i) {
      const int lo = marks[2 * i];
      const int hi = coin(rng) ? marks[2 * i + 1] : lo;
      if (lo <= prev_hi) ok = false;
      prev_hi = hi;
      raw.push_back({Rational(lo, den), Rational(hi, den)});
    }
    if (ok) return ClosedSet1D(raw);
  }
}

PLHomeo1D random_pl(std::mt19937_64& rng, int den, int max_inner) {
  std::uniform_int_distribution<int> count(0, max_inner);
  std::uniform_int_distribution<int> coord(1, den - 1);
  const int k = count(rng);
  std::set<int> xs;
  std::set<int> ys;
  while (static_cast<int>(xs.size()) < k) xs.insert(coord(rng));
  while (static_cast<int>(ys.size()) < k) ys.insert(coord(rng));
  const bool preserving = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
  std::vector<Breakpoint> bps;
  bps.push_back({0, preserving ? 0 : 1});
  auto y = preserving ? std::vector<int>(ys.begin(), ys.end()) : std::vector<int>(ys.rbegin(), ys.rend());
  std::size_t i = 0;
  for (int x : xs) bps.push_back({Rational(x, den), Rational(y[i++], den)});
  bps.push_back({1, preserving ? 1 : 0});
  return PLHomeo1D(std::move(bps),
                           preserving ? Orientation::preserving : Orientation::reversing);
}

IntSeq random_int_seq(std::mt19937_64& rng, long length, long lo, long hi) {
  std::uniform_int_distribution<long> v(lo, hi);
  IntSeq s;
  for (long i = 0; i < length; ++i) s.values.push_back(v(rng));
  return s;
}

}  // namespace contin
