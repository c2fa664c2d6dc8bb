#include "flopdyn/fan_export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <utility>
#include <vector>

#include "flopdyn/errors.hpp"

namespace flopdyn {
namespace {

constexpr double kExtent = 2.0;
constexpr double kScale = 100.0;  // pixels per unit

struct Point {
  double x;
  double y;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  // Avoid "-0.000" so equal geometry always prints identically.
  if (std::string(buf) == "-0.000") return "0.000";
  return buf;
}

std::string px(Point p) { return fmt(kExtent * kScale + kScale * p.x) + "," + fmt(kExtent * kScale - kScale * p.y); }

Point as_point(const Ray2& r) { return {r.x.get_d(), r.y.get_d()}; }

// Where the ray leaves the viewport square.
Point exit_point(Point dir) {
  const double s = kExtent / std::max(std::fabs(dir.x), std::fabs(dir.y));
  return {dir.x * s, dir.y * s};
}

// Viewport polygon of the convex wedge spanned by two rays.
std::vector<Point> wedge(const Ray2& ra, const Ray2& rb) {
  Point a = as_point(ra);
  Point b = as_point(rb);
  if (a.x * b.y - a.y * b.x < 0) std::swap(a, b);
  const double ta = std::atan2(a.y, a.x);
  double tb = std::atan2(b.y, b.x);
  if (tb < ta) tb += 2 * std::numbers::pi;
  std::vector<Point> poly{{0, 0}, exit_point(a)};
  const Point corners[] = {{kExtent, kExtent}, {-kExtent, kExtent}, {-kExtent, -kExtent}, {kExtent, -kExtent}};
  std::vector<std::pair<double, Point>> inner;
  for (const auto& c : corners) {
    double tc = std::atan2(c.y, c.x);
    if (tc <= ta) tc += 2 * std::numbers::pi;
    if (tc < tb) inner.emplace_back(tc, c);
  }
  std::sort(inner.begin(), inner.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  for (const auto& [t, c] : inner) poly.push_back(c);
  poly.push_back(exit_point(b));
  return poly;
}

// Viewport square clipped to {n . p >= 0}.
std::vector<Point> clip_square(const HalfPlane& h) {
  const double nx = h.normal()[0].to_double();
  const double ny = h.normal()[1].to_double();
  auto f = [&](Point p) { return nx * p.x + ny * p.y; };
  const std::vector<Point> square{{kExtent, -kExtent}, {kExtent, kExtent}, {-kExtent, kExtent}, {-kExtent, -kExtent}};
  std::vector<Point> out;
  for (std::size_t i = 0; i < square.size(); ++i) {
    const Point p = square[i];
    const Point q = square[(i + 1) % square.size()];
    const double fp = f(p);
    const double fq = f(q);
    if (fp >= 0) out.push_back(p);
    if ((fp > 0 && fq < 0) || (fp < 0 && fq > 0)) {
      const double t = fp / (fp - fq);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  return out;
}

std::string polygon(const std::vector<Point>& pts, const std::string& fill) {
  std::string s = "  <polygon points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + px(pts[i]);
  return s + "\" fill=\"" + fill + "\" stroke=\"none\"/>\n";
}

std::string segment(Point a, Point b, const std::string& stroke, double width) {
  return "  <line x1=\"" + fmt(kExtent * kScale + kScale * a.x) + "\" y1=\"" + fmt(kExtent * kScale - kScale * a.y) +
         "\" x2=\"" + fmt(kExtent * kScale + kScale * b.x) + "\" y2=\"" + fmt(kExtent * kScale - kScale * b.y) +
         "\" stroke=\"" + stroke + "\" stroke-width=\"" + fmt(width) + "\"/>\n";
}

}  // namespace

Json fan_to_json(const ChamberFan& fan) {
  Json j;
  j["depth"] = fan.depth;
  Json chambers = Json::array();
  for (std::size_t k = 0; k < fan.chambers.size(); ++k) {
    Json c;
    c["k"] = k;
    c["ray_a"] = to_json(fan.chambers[k].ray_a());
    c["ray_b"] = to_json(fan.chambers[k].ray_b());
    chambers.push_back(std::move(c));
  }
  j["chambers"] = std::move(chambers);
  j["accumulation_ray"] = fan.accumulation_ray ? to_json(*fan.accumulation_ray) : Json(nullptr);
  return j;
}

std::string fan_to_svg(const ChamberFan& fan, const std::optional<HalfPlane>& effective) {
  const double side = 2 * kExtent * kScale;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(side) << "\" height=\"" << fmt(side)
     << "\" viewBox=\"0 0 " << fmt(side) << " " << fmt(side) << "\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << fmt(side) << "\" height=\"" << fmt(side) << "\" fill=\"white\"/>\n";
  if (effective) os << polygon(clip_square(*effective), "#e6e6e6");
  for (std::size_t k = 0; k < fan.chambers.size(); ++k) {
    const char* fill = k == 0 ? "#a0a0a0" : (k % 2 ? "#c8c8c8" : "#d8d8d8");
    os << polygon(wedge(fan.chambers[k].ray_a(), fan.chambers[k].ray_b()), fill);
  }
  os << segment({-kExtent, 0}, {kExtent, 0}, "black", 1.5);
  os << segment({0, -kExtent}, {0, kExtent}, "black", 1.5);
  for (const auto& c : fan.chambers) {
    for (const Ray2* r : {&c.ray_a(), &c.ray_b()}) os << segment({0, 0}, exit_point(as_point(*r)), "#404040", 1.0);
  }
  if (fan.accumulation_ray) {
    const Point e = exit_point(as_point(*fan.accumulation_ray));
    os << segment({-e.x, -e.y}, e, "black", 2.5);
  }
  os << "</svg>\n";
  return os.str();
}

void write_file_atomically(const std::string& path, const std::string& contents) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot open '" + tmp.string() + "' for writing");
    out << contents;
    if (!out.flush()) throw ConfigError("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw ConfigError("cannot move output into place at '" + path + "': " + ec.message());
  }
}

}  // namespace flopdyn
