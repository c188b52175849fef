#include "dconic/render.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dconic/error.hpp"

namespace dconic {

namespace {

// Fixed six decimals with -0 folded into 0, so goldens are byte-stable.
std::string fixed(double v) {
  if (std::abs(v) < 5e-7) v = 0.0;
  return fmt::format("{:.6f}", v);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

struct Box {
  double xmin, ymin, xmax, ymax;

  bool contains(Point p) const { return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax; }
  Box grown(double factor) const {
    const double mx = factor * (xmax - xmin), my = factor * (ymax - ymin);
    return {xmin - mx, ymin - my, xmax + mx, ymax + my};
  }
};

// Open focal-angle intervals on which the radius keeps one sign.
std::vector<std::pair<double, double>> branch_intervals(const FocalConic& c) {
  const double g = std::sqrt(c.t()) * c.p();
  if (std::abs(g) < 1.0) return {{0.0, kTwoPi}};
  const double a = std::acos(1.0 / g);
  std::vector<std::pair<double, double>> out;
  if (g > 0.0) {
    out.emplace_back(a, kTwoPi - a);
    if (a > 1e-12) out.emplace_back(-a, a);
  } else {
    out.emplace_back(-a, a);
    if (kPi - a > 1e-12) out.emplace_back(a, kTwoPi - a);
  }
  return out;
}

std::string conic_path(const FocalConic& c, const Box& clip) {
  std::string d;
  const bool closed = c.kind() == ConicKind::Ellipse;
  for (const auto& [lo, hi] : branch_intervals(c)) {
    bool open = false;
    bool broken = false;
    for (int i = 0; i < kBranchSamples; ++i) {
      const double alpha = closed ? lo + (hi - lo) * i / kBranchSamples : lo + (hi - lo) * (i + 0.5) / kBranchSamples;
      Point q;
      try {
        q = point_at(c, alpha);
      } catch (const GeometryError&) {
        open = false;
        broken = true;
        continue;
      }
      if (!is_finite(q) || !clip.contains(q)) {
        open = false;
        broken = true;
        continue;
      }
      d += fmt::format("{}{} {} ", open ? "L" : "M", fixed(q.x), fixed(q.y));
      open = true;
    }
    if (closed && !broken) d += "Z";
  }
  while (!d.empty() && d.back() == ' ') d.pop_back();
  return d;
}

// Segment of the line inside the box, or nothing.
std::optional<std::pair<Point, Point>> clip_line(const Line& l, const Box& b) {
  const Point o = l.anchor(), u = l.direction();
  double lo = -std::numeric_limits<double>::infinity(), hi = std::numeric_limits<double>::infinity();
  auto slab = [&](double origin, double dir, double min, double max) {
    if (std::abs(dir) < 1e-15) return origin >= min && origin <= max;
    double s0 = (min - origin) / dir, s1 = (max - origin) / dir;
    if (s0 > s1) std::swap(s0, s1);
    lo = std::max(lo, s0);
    hi = std::min(hi, s1);
    return true;
  };
  if (!slab(o.x, u.x, b.xmin, b.xmax) || !slab(o.y, u.y, b.ymin, b.ymax) || lo > hi) return std::nullopt;
  return std::pair{o + lo * u, o + hi * u};
}

void check_finite(double v) {
  if (!std::isfinite(v)) throw GeometryError(ErrorCode::InvalidArgument, "scene holds a non-finite value");
}

}  // namespace

std::string render_svg(const Scene& s) {
  if (s.item_count() == 0) throw GeometryError(ErrorCode::EmptyScene, "nothing to draw");
  const auto [xmin, ymin, xmax, ymax] = s.viewbox;
  for (double v : s.viewbox) check_finite(v);
  if (!(xmax > xmin) || !(ymax > ymin)) throw GeometryError(ErrorCode::InvalidArgument, "degenerate viewbox");

  const Box box{xmin, ymin, xmax, ymax};
  const double w = xmax - xmin, h = ymax - ymin;
  const double stroke = std::max(w, h) / 400.0;
  const int pixel_w = 800;
  const int pixel_h = static_cast<int>(std::lround(800.0 * h / w));

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">\n",
      pixel_w, pixel_h, fixed(xmin), fixed(-ymax), fixed(w), fixed(h));
  out += fmt::format("<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"{}\">\n", fixed(stroke));

  for (const FocalConic& c : s.conics) {
    out += fmt::format("<path class=\"conic\" stroke=\"#1f4e9c\" d=\"{}\"/>\n", conic_path(c, box.grown(0.5)));
  }
  for (const DiscreteConic& d : s.polygons) {
    std::string pts;
    for (Point v : d.vertices) {
      check_finite(v.x);
      check_finite(v.y);
      if (!pts.empty()) pts += ' ';
      pts += fixed(v.x) + "," + fixed(v.y);
    }
    out += fmt::format("<{} class=\"polygon\" stroke=\"#b2182b\" points=\"{}\"/>\n", d.closed ? "polygon" : "polyline",
                       pts);
  }
  for (const Line& l : s.lines) {
    check_finite(l.c);
    const auto seg = clip_line(l, box);
    if (seg) {
      out += fmt::format("<line class=\"line\" stroke=\"#4d4d4d\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
                         fixed(seg->first.x), fixed(seg->first.y), fixed(seg->second.x), fixed(seg->second.y));
    } else {
      out += "<line class=\"line\" stroke=\"#4d4d4d\" visibility=\"hidden\" x1=\"0\" y1=\"0\" x2=\"0\" y2=\"0\"/>\n";
    }
  }
  for (const LabeledPoint& p : s.points) {
    check_finite(p.at.x);
    check_finite(p.at.y);
    out += fmt::format("<circle class=\"point\" fill=\"#000000\" cx=\"{}\" cy=\"{}\" r=\"{}\"><title>{}</title></circle>\n",
                       fixed(p.at.x), fixed(p.at.y), fixed(2.5 * stroke), escape(p.label));
  }
  out += "</g>\n</svg>\n";
  return out;
}

Scene scene_from_polygon(const DiscreteConic& d) {
  Scene s;
  s.conics.push_back(d.carrier());
  if (d.closed) {
    const double c = std::cos(0.5 * d.theta);
    s.conics.emplace_back(d.p, d.t * c * c);
  }
  s.polygons.push_back(d);
  s.points.push_back({"F", d.focus()});

  Box b{d.focus().x, 0.0, d.focus().x, 0.0};
  auto include = [&](Point q) {
    b.xmin = std::min(b.xmin, q.x);
    b.xmax = std::max(b.xmax, q.x);
    b.ymin = std::min(b.ymin, q.y);
    b.ymax = std::max(b.ymax, q.y);
  };
  for (Point v : d.vertices) include(v);
  const FocalConic carrier = d.carrier();
  if (carrier.kind() == ConicKind::Ellipse) {
    for (int i = 0; i < 64; ++i) include(point_at(carrier, kTwoPi * i / 64));
  }
  const double span = std::max({b.xmax - b.xmin, b.ymax - b.ymin, 1e-3});
  const double pad = 0.1 * span;
  s.viewbox = {b.xmin - pad, b.ymin - pad, b.xmax + pad, b.ymax + pad};
  return s;
}

Scene pencil_scene(double p, const std::vector<double>& ts, std::array<double, 4> viewbox) {
  Scene s;
  s.viewbox = viewbox;
  for (double t : ts) s.conics.emplace_back(p, t);
  s.points.push_back({"F", {-p, 0.0}});
  return s;
}

}  // namespace dconic
