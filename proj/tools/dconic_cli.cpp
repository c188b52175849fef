// dconic: generate, transform, verify and draw discrete conics.
//
// Polygons travel as JSON on stdin/stdout (or --in FILE). Exit status is 0 on
// success, 1 when `verify` finds a failing check, 2 on bad usage or input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "dconic/discrete_conic.hpp"
#include "dconic/error.hpp"
#include "dconic/group.hpp"
#include "dconic/io.hpp"
#include "dconic/render.hpp"
#include "dconic/verifier.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw dconic::GeometryError(dconic::ErrorCode::InvalidArgument, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete conics on the focal pencil (p + x)^2 + y^2 = t (1 + p x)^2"};
  app.require_subcommand(1);

  std::string in_path;
  double p = 0.0, t = 1.0;
  std::string theta_text, phi_text = "0", angle_text;
  int n = 0, k = 1;
  std::string op = "G", check = "all", out_path;
  double tol = dconic::kDefaultTolerance;

  auto* generate = app.add_subcommand("generate", "Vertices at equal focal angles on member (p, t)");
  generate->add_option("--p", p, "Pencil parameter")->required();
  generate->add_option("--t", t, "Member parameter (> 0)")->required();
  generate->add_option("--n", n, "Vertex count")->required();
  generate->add_option("--theta", theta_text, "Focal angle step (default 2pi/n)");
  generate->add_option("--phi", phi_text, "Phase of the first vertex");

  auto* pedal = app.add_subcommand("pedal", "Discrete negative pedal of the unit circle from (p, 0)");
  pedal->add_option("--p", p, "Pedal point abscissa")->required();
  pedal->add_option("--n", n, "Vertex count")->required();
  pedal->add_option("--theta", theta_text, "Sample angle step (default 2pi/n)");
  pedal->add_option("--phi", phi_text, "Phase of the first sample");

  auto* transform = app.add_subcommand("transform", "Apply G_angle or H_angle to a polygon");
  transform->add_option("--op", op, "G or H")->check(CLI::IsMember({"G", "H"}));
  transform->add_option("--angle", angle_text, "Group angle in [0, pi)")->required();
  transform->add_option("--in", in_path, "Polygon JSON (default stdin)");

  auto* grid = app.add_subcommand("grid", "Intersections of side lines k apart");
  grid->add_option("--k", k, "Side offset")->required();
  grid->add_option("--in", in_path, "Polygon JSON (default stdin)");

  auto* verify = app.add_subcommand("verify", "Run checks; prints a JSON array of reports");
  verify->add_option("--check", check, "all or a check name");
  verify->add_option("--tol", tol, "Tolerance");
  verify->add_option("--in", in_path, "Polygon JSON or an array of polygons (default stdin)");

  auto* render = app.add_subcommand("render", "Draw a scene or polygon as SVG");
  render->add_option("--out", out_path, "Output file (default stdout)");
  render->add_option("--in", in_path, "Scene or polygon JSON (default stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    auto theta_or_default = [&] { return theta_text.empty() ? dconic::kTwoPi / n : dconic::parse_angle(theta_text); };

    if (*generate) {
      const auto d = dconic::synthesize(p, t, theta_or_default(), dconic::parse_angle(phi_text), n);
      std::cout << dconic::serialize(d) << '\n';
    } else if (*pedal) {
      const auto c = dconic::negative_pedal(p, theta_or_default(), dconic::parse_angle(phi_text), n);
      std::cout << dconic::serialize(c.conic) << '\n';
    } else if (*transform) {
      const auto d = dconic::deserialize_polygon(read_input(in_path));
      const auto kind = op == "G" ? dconic::ActionKind::G : dconic::ActionKind::H;
      const auto e = dconic::from_angle(kind, dconic::parse_angle(angle_text));
      std::cout << dconic::serialize(dconic::act_on_discrete(e, d)) << '\n';
    } else if (*grid) {
      const auto d = dconic::deserialize_polygon(read_input(in_path));
      std::cout << dconic::serialize(dconic::grid_layer(d, k)) << '\n';
    } else if (*verify) {
      std::vector<dconic::Report> reports;
      for (const auto& d : dconic::deserialize_polygons(read_input(in_path))) {
        auto part = dconic::run_checks(d, check, tol);
        reports.insert(reports.end(), part.begin(), part.end());
      }
      std::cout << dconic::serialize(reports) << '\n';
      for (const auto& r : reports) {
        if (!r.pass) return kExitFail;
      }
    } else if (*render) {
      const std::string text = read_input(in_path);
      const auto scene = dconic::looks_like_scene(text) ? dconic::deserialize_scene(text)
                                                        : dconic::scene_from_polygon(dconic::deserialize_polygon(text));
      const std::string svg = dconic::render_svg(scene);
      if (out_path.empty()) {
        std::cout << svg;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw dconic::GeometryError(dconic::ErrorCode::InvalidArgument, "cannot write " + out_path);
        out << svg;
      }
    }
  } catch (const dconic::GeometryError& e) {
    std::cerr << "dconic: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
