#include "conespan/geometry.hpp"

#include <algorithm>
#include <limits>

namespace conespan {

Point make_point(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw PreconditionError("point coordinates must be finite");
  }
  return {x, y};
}

Angle normalize_angle(double radians) {
  if (!std::isfinite(radians)) {
    throw PreconditionError("angle must be finite");
  }
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2*pi.
  if (r >= kTwoPi) r = 0.0;
  return Angle(r);
}

Angle::Angle(double radians) {
  if (!std::isfinite(radians)) {
    throw PreconditionError("angle must be finite");
  }
  if (radians >= 0.0 && radians < kTwoPi) {
    radians_ = radians;
  } else {
    radians_ = normalize_angle(radians).radians();
  }
}

Angle Angle::operator-(Angle other) const {
  double d = radians_ - other.radians_;
  if (d < 0.0) d += kTwoPi;
  if (d >= kTwoPi) d = 0.0;
  return Angle(d);
}

Angle Angle::operator+(Angle other) const {
  double s = radians_ + other.radians_;
  if (s >= kTwoPi) s -= kTwoPi;
  if (s >= kTwoPi || s < 0.0) s = 0.0;
  return Angle(s);
}

Angle polar_angle(Point u, Point v) {
  if (u == v) {
    throw PreconditionError("polar angle of a degenerate pair (u == v)");
  }
  return normalize_angle(std::atan2(v.y - u.y, v.x - u.x));
}

double signed_polar_angle(Point u, Point v) {
  if (u == v) {
    throw PreconditionError("polar angle of a degenerate pair (u == v)");
  }
  double a = std::atan2(v.y - u.y, v.x - u.x);
  return a == -kPi ? kPi : a;
}

double cone_lower(int j, int k) {
  return kTwoPi * static_cast<double>(j) / static_cast<double>(k);
}

int cone_index(int k, Angle phi) {
  if (k < 1) throw PreconditionError("cone count k must be >= 1");
  const double a = phi.radians();
  int j = static_cast<int>(std::floor(a * static_cast<double>(k) / kTwoPi));
  j = std::clamp(j, 0, k - 1);
  // Settle against the exact boundary expressions used everywhere else.
  while (j > 0 && a < cone_lower(j, k)) --j;
  while (j + 1 < k && a >= cone_lower(j + 1, k)) ++j;
  return j;
}

Cone::Cone(Point apex_, Angle lo_, double width_)
    : apex(apex_), lo(lo_), width(width_) {
  if (!(width > 0.0 && width <= kTwoPi)) {
    throw PreconditionError("cone width must lie in (0, 2*pi]");
  }
}

bool Cone::contains(Angle phi) const { return (phi - lo).radians() < width; }

bool Cone::contains(Point w) const {
  if (w == apex) return false;
  return contains(polar_angle(apex, w));
}

int gamma_span(int k) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  return (k + 3) / 4;
}

double gamma(int k) { return cone_lower(gamma_span(k), k); }

int theta_span(int k) {
  if (k <= 24) {
    throw PreconditionError("trapezoid angle needs k > 24, got k = " +
                            std::to_string(k));
  }
  return (k + 7) / 8;
}

double theta(int k) { return cone_lower(theta_span(k), k); }

TrapezoidFrame::TrapezoidFrame(Point apex_, Angle orientation_,
                               bool reflected_, double theta_)
    : apex(apex_), orientation(orientation_), reflected(reflected_),
      theta(theta_) {
  if (!(theta >= kPi / 4.0 - kAngleTol && theta < kPi / 3.0)) {
    throw PreconditionError("trapezoid angle must lie in [pi/4, pi/3)");
  }
}

Point to_local(const TrapezoidFrame& frame, Point w) {
  const Point d = w - frame.apex;
  const double c = std::cos(frame.orientation.radians());
  const double s = std::sin(frame.orientation.radians());
  const double x = c * d.x + s * d.y;
  const double y = -s * d.x + c * d.y;
  return {x, frame.reflected ? -y : y};
}

Point to_global(const TrapezoidFrame& frame, Point local) {
  const double ly = frame.reflected ? -local.y : local.y;
  const double c = std::cos(frame.orientation.radians());
  const double s = std::sin(frame.orientation.radians());
  return frame.apex + Point{c * local.x - s * ly, s * local.x + c * ly};
}

bool in_unit_trapezoid(Point local, double theta) {
  const double x = local.x;
  const double y = local.y;
  return x > 0.0 && x < 1.0 && y > 0.0 && y < std::sin(theta) &&
         x * x + y * y < 1.0 && (x - 1.0) * (x - 1.0) + y * y < 1.0;
}

std::string to_string(HitPart part) {
  switch (part) {
    case HitPart::critical_arc: return "critical_arc";
    case HitPart::near_arc: return "near_arc";
    case HitPart::top: return "top";
    case HitPart::bottom: return "bottom";
    case HitPart::none: return "none";
  }
  return "none";
}

HitResult scale_to_hit_polar(const TrapezoidFrame& frame, double dist,
                             Angle phi) {
  constexpr HitResult kUnreachable{std::numeric_limits<double>::infinity(),
                                   HitPart::none};
  if (!(dist > 0.0)) {
    throw PreconditionError("query point coincides with the frame apex");
  }
  // Near zero this subtraction is exact, so the side of the orientation ray
  // agrees with cone_index on the same doubles.
  double r = phi.radians() - frame.orientation.radians();
  if (r > kPi) {
    r -= kTwoPi;
  } else if (r <= -kPi) {
    r += kTwoPi;
  }
  if (frame.reflected) {
    if (r == 0.0) return kUnreachable;
    r = -r;
  }
  const double x = dist * std::cos(r);
  const double y = dist * std::sin(r);
  if (x <= 0.0 || y < 0.0) return kUnreachable;

  const double top = y / std::sin(frame.theta);
  const double near = dist * dist / (2.0 * x);
  const double lambda = std::max({dist, top, near});
  if (lambda <= dist * (1.0 + kRelTol)) {
    return {dist, HitPart::critical_arc};
  }
  return {lambda, top >= near ? HitPart::top : HitPart::near_arc};
}

HitResult scale_to_hit(const TrapezoidFrame& frame, Point w) {
  if (w == frame.apex) {
    throw PreconditionError("query point coincides with the frame apex");
  }
  return scale_to_hit_polar(frame, distance(frame.apex, w),
                            polar_angle(frame.apex, w));
}

}  // namespace conespan
