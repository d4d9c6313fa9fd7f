#include "kee/pl_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace kee {
namespace {

std::vector<Rat> merged_grid(const PLFunction& f, const PLFunction& g) {
  std::vector<Rat> grid;
  for (const auto& k : f.knots()) grid.push_back(k.u);
  for (const auto& k : g.knots()) grid.push_back(k.u);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace

PLFunction::PLFunction(std::vector<Knot> knots) : knots_(std::move(knots)) {
  if (knots_.size() < 2) throw std::invalid_argument("PLFunction needs at least two knots");
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    if (!(knots_[i - 1].u < knots_[i].u)) throw std::invalid_argument("PLFunction knots must increase");
  }
}

PLFunction PLFunction::affine(const Rat& lo, const Rat& hi, const AffineMap& f) {
  return PLFunction({{lo, f(lo)}, {hi, f(hi)}});
}

PLFunction PLFunction::lower_envelope(const Rat& lo, const Rat& hi, std::span<const AffineMap> maps) {
  if (maps.empty()) throw std::invalid_argument("lower_envelope of no maps");
  if (!(lo < hi)) throw std::invalid_argument("lower_envelope on an empty interval");
  // The envelope can only bend where two of the maps cross.
  std::vector<Rat> grid{lo, hi};
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t j = i + 1; j < maps.size(); ++j) {
      if (maps[i].slope == maps[j].slope) continue;
      Rat u = (maps[j].intercept - maps[i].intercept) / (maps[i].slope - maps[j].slope);
      if (u > lo && u < hi) grid.push_back(u);
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<Knot> knots;
  for (const auto& u : grid) {
    Rat best = maps[0](u);
    for (std::size_t i = 1; i < maps.size(); ++i) best = std::min(best, Rat(maps[i](u)));
    knots.push_back({u, best});
  }
  return PLFunction(std::move(knots)).simplified();
}

std::vector<Rat> PLFunction::breakpoints() const {
  const auto s = simplified();
  std::vector<Rat> out;
  for (std::size_t i = 1; i + 1 < s.knots_.size(); ++i) out.push_back(s.knots_[i].u);
  return out;
}

std::vector<Rat> PLFunction::slopes() const {
  std::vector<Rat> out;
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    out.push_back((knots_[i].y - knots_[i - 1].y) / (knots_[i].u - knots_[i - 1].u));
  }
  return out;
}

Rat PLFunction::operator()(const Rat& u) const {
  if (u < lo() || u > hi()) throw std::out_of_range("PLFunction evaluated outside its domain");
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    if (u <= knots_[i].u) {
      const auto& a = knots_[i - 1];
      const auto& b = knots_[i];
      return a.y + (b.y - a.y) * (u - a.u) / (b.u - a.u);
    }
  }
  return knots_.back().y;
}

bool PLFunction::is_concave() const {
  const auto s = slopes();
  return std::is_sorted(s.begin(), s.end(), [](const Rat& x, const Rat& y) { return x > y; });
}

PLFunction PLFunction::simplified() const {
  std::vector<Knot> out{knots_.front()};
  const auto s = slopes();
  for (std::size_t i = 1; i + 1 < knots_.size(); ++i) {
    if (s[i - 1] != s[i]) out.push_back(knots_[i]);
  }
  out.push_back(knots_.back());
  return PLFunction(std::move(out));
}

PLFunction PLFunction::operator+(const PLFunction& other) const {
  if (lo() != other.lo() || hi() != other.hi()) throw std::invalid_argument("PLFunction domains differ");
  std::vector<Knot> out;
  for (const auto& u : merged_grid(*this, other)) out.push_back({u, (*this)(u) + other(u)});
  return PLFunction(std::move(out)).simplified();
}

PLFunction PLFunction::operator*(const Rat& t) const {
  std::vector<Knot> out = knots_;
  for (auto& k : out) k.y *= t;
  return PLFunction(std::move(out));
}

Rat PLFunction::integral() const {
  Rat total = 0;
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    total += (knots_[i].u - knots_[i - 1].u) * (knots_[i].y + knots_[i - 1].y) / 2;
  }
  return total;
}

Rat PLFunction::first_moment() const {
  return integrate_product(*this, PLFunction::affine(lo(), hi(), {1, 0}));
}

bool PLFunction::operator==(const PLFunction& other) const {
  return simplified().knots_ == other.simplified().knots_;
}

Rat integrate_product(const PLFunction& f, const PLFunction& g) {
  if (f.lo() != g.lo() || f.hi() != g.hi()) throw std::invalid_argument("PLFunction domains differ");
  const auto grid = merged_grid(f, g);
  Rat total = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    // f * g is quadratic on each cell, so Simpson's rule is exact.
    const Rat& a = grid[i - 1];
    const Rat& b = grid[i];
    const Rat mid = (a + b) / 2;
    total += (b - a) / 6 * (f(a) * g(a) + 4 * f(mid) * g(mid) + f(b) * g(b));
  }
  return total;
}

}  // namespace kee
