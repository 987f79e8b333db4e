#include "cwidth/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>

#include <CLI11.hpp>

#include "cwidth/errors.hpp"
#include "cwidth/focal.hpp"
#include "cwidth/measures.hpp"

namespace cwidth {

namespace {

QuadratureGrid measure_grid(const SceneConfig& c) { return build_quadrature(c.n_theta, c.n_phi); }

// Margin minimization wants a finer seed grid than integration.
QuadratureGrid margin_grid(const SceneConfig& c) {
  return build_quadrature(std::clamp(2 * c.n_theta, 128, 4096), std::clamp(2 * c.n_phi, 256, 4096));
}

Json angles_json(const ChartPoint& p) {
  const SphereAngles a = p.angles();
  return {{"theta", round12(a.theta)}, {"phi", round12(a.phi)}};
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInputError("cannot write '" + path + "'");
  return out;
}

void write_mesh(const std::string& path, const SurfaceMesh& m) {
  auto out = open_output(path);
  write_obj(out, m);
}

void write_focal_meshes(const std::string& prefix, const SupportFunction& s, const SceneConfig& c,
                        std::vector<std::string>& files) {
  const SurfaceMesh plus = mesh_with(c.n_theta, c.n_phi, [&](const ChartPoint& p) { return focal_points(s, p).first; });
  const SurfaceMesh minus =
      mesh_with(c.n_theta, c.n_phi, [&](const ChartPoint& p) { return focal_points(s, p).second; });
  write_mesh(prefix + "_focal_plus.obj", plus);
  write_mesh(prefix + "_focal_minus.obj", minus);
  files.push_back(prefix + "_focal_plus.obj");
  files.push_back(prefix + "_focal_minus.obj");
}

std::vector<double> cusps_or_empty(const SupportFunction& s) {
  const auto profile = s.rotsym_profile();
  if (!profile) return {};
  try {
    return rotsym_cusps(*profile);
  } catch (const DegenerateError&) {
    return {};
  }
}

Json scene_json(const SceneConfig& c, const Json& support) {
  Json j = {{"support", support},
            {"grid", {{"n_theta", c.n_theta}, {"n_phi", c.n_phi}}},
            {"output", c.output},
            {"format", c.format}};
  if (c.group) j["group"] = *c.group;
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  auto out = open_output(path);
  out << dump_json(j);
}

}  // namespace

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

CommandOutput cmd_check(const SceneConfig& config) {
  const SupportFunction s = support_from_json(config.support);
  const WidthReport wr = check_constant_width(s, measure_grid(config));
  CommandOutput res;
  res.json = {{"width", round12(wr.width)},
              {"width_max_dev", round12(wr.max_dev)},
              {"reflection_dev", round12(wr.reflection_dev)}};
  if (const RationalSupport* rs = s.as_rational()) {
    const RationalWidthReport rr = check_rational_cw(*rs);
    res.json["rational"] = {{"constant_width", rr.is_cw}, {"K", round12(rr.K)}, {"w", round12(rr.w)}};
  }
  const bool ok = wr.max_dev <= kCliWidthTolerance;
  res.json["constant_width"] = ok;
  if (!ok) res.exit_code = kExitWidthViolation;
  return res;
}

CommandOutput cmd_measure(const SceneConfig& config) {
  const SupportFunction s = support_from_json(config.support);
  const QuadratureGrid grid = measure_grid(config);
  CommandOutput res;
  const WidthReport wr = check_constant_width(s, grid);
  if (wr.max_dev > kCliWidthTolerance) {
    res.json = {{"width", round12(wr.width)}, {"width_max_dev", round12(wr.max_dev)}};
    res.exit_code = kExitWidthViolation;
    return res;
  }
  const MeasureReport rep = measure(s, grid);
  res.json = to_json(rep);

  // Cheap convergence check on a 1.5x finer grid.
  const QuadratureGrid fine = build_quadrature(std::min(4096, config.n_theta * 3 / 2), std::min(4096, config.n_phi * 3 / 2));
  const double fine_I = iso_ratio(s, fine);
  if (std::abs(fine_I - rep.ratio_I) > 1e-8)
    res.warnings.push_back("ratio_I changes by " + std::to_string(std::abs(fine_I - rep.ratio_I)) +
                           " under 1.5x grid refinement; increase the grid");
  if (!rep.convex) res.warnings.push_back("surface is not convex: some normal crosses its focal set");
  return res;
}

CommandOutput cmd_shrink(const SceneConfig& config, bool write_files) {
  const SupportFunction s = support_from_json(config.support);
  const ShrinkResult sh = shrink_limit(s, margin_grid(config), measure_grid(config));
  const double C_star = round12(sh.C_star);
  const Json critical = {{"type", "shift"}, {"base", config.support}, {"C", C_star}};

  CommandOutput res;
  res.json = {{"C_star", C_star},
              {"I_at_limit", round12(sh.I_at_limit)},
              {"limit_width", round12(sh.limit_width)},
              {"argmin", angles_json(sh.argmin)},
              {"critical_support", critical}};
  if (write_files) {
    const std::string prefix = config.output + "_critical";
    write_json_file(prefix + ".json", scene_json(config, critical));
    res.files.push_back(prefix + ".json");
    const SupportFunction crit = shift(s, C_star);
    write_mesh(prefix + ".obj", mesh(crit, config.n_theta, config.n_phi));
    res.files.push_back(prefix + ".obj");
    write_focal_meshes(prefix, crit, config, res.files);
    res.json["files"] = res.files;
  }
  return res;
}

CommandOutput cmd_export(const SceneConfig& config, const std::string& what) {
  const SupportFunction s = support_from_json(config.support);
  CommandOutput res;
  const std::string& prefix = config.output;
  if (what == "surface") {
    const SurfaceMesh m = mesh(s, config.n_theta, config.n_phi);
    write_mesh(prefix + "_surface.obj", m);
    res.files.push_back(prefix + "_surface.obj");
    if (!m.convex) res.warnings.push_back("surface is not convex: some normal crosses its focal set");
  } else if (what == "focal") {
    write_focal_meshes(prefix, s, config, res.files);
  } else if (what == "cross_section") {
    const std::vector<double> R = meridian_samples(4 * config.n_theta, cusps_or_empty(s));
    std::vector<EuclideanPoint> surface, plus, minus;
    for (double x : R) {
      const ChartPoint p = ChartPoint::from_xi(x);
      surface.push_back(embed(s, p));
      const auto [fp, fm] = focal_points(s, p);
      plus.push_back(fp);
      minus.push_back(fm);
    }
    const std::pair<const char*, const std::vector<EuclideanPoint>*> parts[] = {
        {"_cross_section.csv", &surface}, {"_focal_plus.csv", &plus}, {"_focal_minus.csv", &minus}};
    for (const auto& [suffix, pts] : parts) {
      auto out = open_output(prefix + suffix);
      write_cross_section_csv(out, R, *pts);
      res.files.push_back(prefix + suffix);
    }
  } else if (what == "cusps") {
    const auto profile = s.rotsym_profile();
    if (!profile) throw InvalidInputError("cusp export needs a rotationally symmetric support");
    Json roots = Json::array();
    for (double r : rotsym_cusps(*profile)) roots.push_back(round12(r));
    res.json["cusps"] = roots;
    write_json_file(prefix + "_cusps.json", {{"cusps", roots}});
    res.files.push_back(prefix + "_cusps.json");
  } else {
    throw InvalidInputError("unknown export target '" + what + "'");
  }
  res.json["files"] = res.files;
  return res;
}

CommandOutput cmd_symmetrize(const SceneConfig& config, const std::optional<Quaternion>& orientation,
                             bool write_files) {
  const SupportFunction seed = support_from_json(config.support);
  Json group_cfg = config.group.value_or(Json{{"group", "tetrahedral"}});
  auto [G, o] = group_from_json(group_cfg);
  if (orientation) {
    o = *orientation;
    group_cfg["orientation"] = {o.w, o.x, o.y, o.z};
  }
  const SupportFunction avg = average_support(seed, G, o);
  const QuadratureGrid grid = measure_grid(config);
  const WidthReport wr = check_constant_width(avg, grid);

  CommandOutput res;
  res.json = {{"group", G.name},
              {"order", G.order()},
              {"orientation", {round12(o.w), round12(o.x), round12(o.y), round12(o.z)}},
              {"width", round12(wr.width)},
              {"width_max_dev", round12(wr.max_dev)},
              {"invariance_dev", round12(verify_invariance(avg, G, grid))}};
  if (wr.max_dev > kCliWidthTolerance) {
    res.exit_code = kExitWidthViolation;
    return res;
  }
  res.json["ratio_I"] = round12(iso_ratio(avg, grid));
  const ShrinkResult sh = shrink_limit(avg, margin_grid(config), grid);
  res.json["C_star"] = round12(sh.C_star);
  res.json["I_at_limit"] = round12(sh.I_at_limit);
  res.json["argmin"] = angles_json(sh.argmin);
  const Json averaged = {{"type", "average"}, {"base", config.support}, {"group", group_cfg}};
  res.json["symmetrized_support"] = averaged;
  if (write_files) {
    const std::string path = config.output + "_symmetrized.json";
    write_json_file(path, scene_json(config, averaged));
    res.files.push_back(path);
    res.json["files"] = res.files;
  }
  return res;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constant-width surfaces from rational support functions"};
  app.require_subcommand(1);

  std::string config_path, grid_text, out_prefix, orientation_text, what;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "scene config JSON")->required();
    sub->add_option("--grid", grid_text, "quadrature grid NxM (overrides the config)");
    sub->add_option("--out", out_prefix, "output path prefix (overrides the config)");
  };
  auto* check = app.add_subcommand("check", "verify constant width");
  auto* measure_cmd = app.add_subcommand("measure", "area, volume, width ratio and deficit");
  auto* shrink_cmd = app.add_subcommand("shrink", "shrink along normals until contact with the focal set");
  auto* export_cmd = app.add_subcommand("export", "write surface, focal, cross-section or cusp data");
  auto* sym = app.add_subcommand("symmetrize", "average over a point group and shrink");
  for (auto* sub : {check, measure_cmd, shrink_cmd, export_cmd, sym}) add_common(sub);
  export_cmd->add_option("--what", what, "surface | focal | cross_section | cusps")
      ->check(CLI::IsMember({"surface", "focal", "cross_section", "cusps"}));
  sym->add_option("--orientation", orientation_text, "group orientation quaternion \"q0,q1,q2,q3\"");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }

  try {
    SceneConfig config = load_scene(config_path);
    if (!grid_text.empty()) {
      auto [nt, np] = parse_grid(grid_text);
      Json j = scene_json(config, config.support);
      j["grid"] = {{"n_theta", nt}, {"n_phi", np}};
      config = scene_from_json(j);
    }
    if (!out_prefix.empty()) config.output = out_prefix;

    CommandOutput res;
    if (check->parsed()) {
      res = cmd_check(config);
    } else if (measure_cmd->parsed()) {
      res = cmd_measure(config);
    } else if (shrink_cmd->parsed()) {
      res = cmd_shrink(config, !out_prefix.empty());
    } else if (export_cmd->parsed()) {
      if (what.empty()) what = config.format == "csv" ? "cross_section" : config.format == "json" ? "cusps" : "surface";
      res = cmd_export(config, what);
    } else {
      std::optional<Quaternion> o;
      if (!orientation_text.empty()) o = parse_orientation(orientation_text);
      res = cmd_symmetrize(config, o, !out_prefix.empty());
    }
    for (const auto& w : res.warnings) err << "warning: " << w << "\n";
    out << dump_json(res.json);
    return res.exit_code;
  } catch (const WidthViolationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitWidthViolation;
  } catch (const DegenerateError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const InvalidInputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const Json::exception& e) {
    err << "error: malformed config: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace cwidth
