#include "kee/picard.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace kee {

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  if (c.size() != other.c.size()) throw std::invalid_argument("DivisorClass: dimension mismatch");
  a += other.a;
  b += other.b;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.c[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  if (c.size() != other.c.size()) throw std::invalid_argument("DivisorClass: dimension mismatch");
  a -= other.a;
  b -= other.b;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= other.c[i];
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rat& t) {
  a *= t;
  b *= t;
  for (auto& ci : c) ci *= t;
  return *this;
}

DivisorClass operator+(DivisorClass lhs, const DivisorClass& rhs) { return lhs += rhs; }
DivisorClass operator-(DivisorClass lhs, const DivisorClass& rhs) { return lhs -= rhs; }
DivisorClass operator*(const Rat& t, DivisorClass d) { return d *= t; }
DivisorClass operator-(DivisorClass d) { return d *= Rat(-1); }

std::string CurveId::name() const {
  switch (kind) {
    case CurveKind::C1Tilde: return "C1tilde";
    case CurveKind::C2Tilde: return "C2tilde";
    case CurveKind::Exceptional: return "E" + std::to_string(index);
    case CurveKind::FiberTilde: return "F" + std::to_string(index) + "tilde";
    case CurveKind::GenericFiber: return "GenericFiber";
    case CurveKind::PullbackC2: return "PullbackC2";
  }
  return "?";
}

std::optional<CurveId> CurveId::parse(std::string_view text) {
  if (text == "C1tilde" || text == "C1") return c1();
  if (text == "C2tilde" || text == "C2") return c2();
  if (text == "GenericFiber" || text == "F") return generic_fiber();
  if (text == "PullbackC2") return pullback_c2();
  if (text.size() < 2) return std::nullopt;

  const char head = text.front();
  if (head != 'E' && head != 'F') return std::nullopt;
  std::string_view digits = text.substr(1);
  if (head == 'F' && digits.ends_with("tilde")) digits.remove_suffix(5);
  if (digits.empty() || !std::isdigit(static_cast<unsigned char>(digits.front()))) return std::nullopt;
  int index = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || index < 1) return std::nullopt;
  return head == 'E' ? e(index) : f(index);
}

SurfaceModel::SurfaceModel(SurfaceParams params) : params_(params) {
  if (params.n < 0 || params.m < 0) {
    throw std::invalid_argument("SurfaceParams: n and m must be nonnegative");
  }
  candidates_.push_back(CurveId::c1());
  candidates_.push_back(CurveId::c2());
  for (int i = 1; i <= params.m; ++i) candidates_.push_back(CurveId::e(i));
  for (int i = 1; i <= params.m; ++i) candidates_.push_back(CurveId::f(i));
}

SurfaceModel make_surface(SurfaceParams params) { return SurfaceModel(params); }

Matrix SurfaceModel::gram() const {
  Matrix g(rank(), rank());
  g(0, 0) = params_.n;
  g(0, 1) = 1;
  g(1, 0) = 1;
  for (std::size_t i = 2; i < rank(); ++i) g(i, i) = -1;
  return g;
}

Matrix SurfaceModel::gram(const std::vector<CurveId>& curves) const {
  std::vector<DivisorClass> classes;
  classes.reserve(curves.size());
  for (const auto& id : curves) classes.push_back(class_of(id));
  Matrix g(curves.size(), curves.size());
  for (std::size_t i = 0; i < curves.size(); ++i) {
    for (std::size_t j = i; j < curves.size(); ++j) {
      g(i, j) = intersect(classes[i], classes[j]);
      g(j, i) = g(i, j);
    }
  }
  return g;
}

DivisorClass SurfaceModel::zero() const {
  return DivisorClass{0, 0, std::vector<Rat>(static_cast<std::size_t>(params_.m))};
}

bool SurfaceModel::valid(CurveId id) const {
  switch (id.kind) {
    case CurveKind::Exceptional:
    case CurveKind::FiberTilde: return id.index >= 1 && id.index <= params_.m;
    default: return id.index == 0;
  }
}

DivisorClass SurfaceModel::class_of(CurveId id) const {
  if (!valid(id)) {
    throw std::out_of_range("curve " + id.name() + " does not exist for m = " +
                            std::to_string(params_.m));
  }
  DivisorClass d = zero();
  switch (id.kind) {
    case CurveKind::C1Tilde:  // pi^*(C_2 - n F)
      d.a = 1;
      d.b = -params_.n;
      break;
    case CurveKind::C2Tilde:  // pi^*C_2 - sum E_i
      d.a = 1;
      for (auto& ci : d.c) ci = 1;
      break;
    case CurveKind::Exceptional:
      d.c[static_cast<std::size_t>(id.index - 1)] = -1;
      break;
    case CurveKind::FiberTilde:  // pi^*F - E_i
      d.b = 1;
      d.c[static_cast<std::size_t>(id.index - 1)] = 1;
      break;
    case CurveKind::GenericFiber:
      d.b = 1;
      break;
    case CurveKind::PullbackC2:
      d.a = 1;
      break;
  }
  return d;
}

Rat SurfaceModel::intersect(const DivisorClass& d1, const DivisorClass& d2) const {
  const auto m = static_cast<std::size_t>(params_.m);
  if (d1.c.size() != m || d2.c.size() != m) {
    throw std::invalid_argument("intersect: divisor classes do not live on this surface");
  }
  Rat r = params_.n * d1.a * d2.a + d1.a * d2.b + d2.a * d1.b;
  for (std::size_t i = 0; i < m; ++i) r -= d1.c[i] * d2.c[i];
  return r;
}

bool SurfaceModel::is_nef(const DivisorClass& d) const {
  Rat sum_c = 0;
  for (const auto& ci : d.c) {
    if (ci < 0 || d.a - ci < 0) return false;
    sum_c += ci;
  }
  return d.b >= 0 && params_.n * d.a + d.b - sum_c >= 0 && d.a >= 0;
}

DivisorClass SurfaceModel::anticanonical() const {
  // C1 + C2 + 2 pi^*F
  DivisorClass d = class_of(CurveId::c1()) + class_of(CurveId::c2());
  d.b += 2;
  return d;
}

DivisorClass SurfaceModel::boundary_class(const Angles& angles) const {
  return (1 - angles.beta1) * class_of(CurveId::c1()) + (1 - angles.beta2) * class_of(CurveId::c2());
}

DivisorClass SurfaceModel::log_anticanonical(const Angles& angles) const {
  return anticanonical() - boundary_class(angles);
}

std::optional<std::string> ample_range_violation(const SurfaceParams& params, const Angles& angles) {
  const int n = params.n;
  const int m = params.m;
  if (angles.beta1 <= 0) return "beta1 = " + to_string(angles.beta1) + " must be > 0";
  if (n > 0 && angles.beta1 >= rat(2, n)) {
    return "beta1 = " + to_string(angles.beta1) + " violates beta1 < 2/n = " + to_string(rat(2, n)) +
           " (n = " + std::to_string(n) + ")";
  }
  if (angles.beta2 <= 0) return "beta2 = " + to_string(angles.beta2) + " must be > 0";
  if (n < m && angles.beta2 >= rat(2, m - n)) {
    return "beta2 = " + to_string(angles.beta2) + " violates beta2 < 2/(m-n) = " +
           to_string(rat(2, m - n)) + " (n = " + std::to_string(n) + ", m = " + std::to_string(m) + ")";
  }
  return std::nullopt;
}

bool ample_angle_range(const SurfaceParams& params, const Angles& angles) {
  return !ample_range_violation(params, angles).has_value();
}

bool angles_exceed_one(const Angles& angles) { return angles.beta1 > 1 || angles.beta2 > 1; }

}  // namespace kee
