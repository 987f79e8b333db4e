#include "cwidth/config.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cwidth/errors.hpp"

namespace cwidth {

namespace {

double number(const Json& j, const char* key, std::optional<double> fallback = std::nullopt) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    throw InvalidInputError(std::string("missing field '") + key + "'");
  }
  if (!j.at(key).is_number()) throw InvalidInputError(std::string("field '") + key + "' must be a number");
  return j.at(key).get<double>();
}

Complex complex_entry(const Json& e) {
  if (e.is_number()) return e.get<double>();
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return {e[0].get<double>(), e[1].get<double>()};
  throw InvalidInputError("matrix entries must be numbers or [re, im] pairs");
}

BivariatePolynomial matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInputError("coefficient matrix must be a nonempty array");
  const int m = static_cast<int>(j.size()) - 1;
  BivariatePolynomial p(m);
  for (int k = 0; k <= m; ++k) {
    if (!j[k].is_array() || j[k].size() != j.size()) throw InvalidInputError("coefficient matrix must be square");
    for (int l = 0; l <= m; ++l) p.at(k, l) = complex_entry(j[k][l]);
  }
  return p;
}

Json matrix_to_json(const BivariatePolynomial& p) {
  Json rows = Json::array();
  for (int k = 0; k <= p.m(); ++k) {
    Json row = Json::array();
    for (int l = 0; l <= p.m(); ++l) {
      const Complex c = p.at(k, l);
      if (c.imag() == 0.0) row.push_back(round12(c.real()));
      else row.push_back({round12(c.real()), round12(c.imag())});
    }
    rows.push_back(row);
  }
  return rows;
}

Polynomial poly_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInputError("polynomial coefficients must be an array");
  std::vector<double> c;
  for (const auto& e : j) {
    if (!e.is_number()) throw InvalidInputError("polynomial coefficients must be numbers");
    c.push_back(e.get<double>());
  }
  return Polynomial(c);
}

Json poly_to_json(const Polynomial& p) {
  Json a = Json::array();
  for (double v : p.coeffs()) a.push_back(round12(v));
  if (a.empty()) a.push_back(0.0);
  return a;
}

Quaternion quaternion_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw InvalidInputError("quaternion must be [w, x, y, z]");
  for (const auto& e : j)
    if (!e.is_number()) throw InvalidInputError("quaternion components must be numbers");
  return Quaternion{j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()}.normalized();
}

}  // namespace

double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::pair<PointGroup, Quaternion> group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("group") || !j.at("group").is_string())
    throw InvalidInputError("group must be an object with a \"group\" name");
  const std::string name = j.at("group").get<std::string>();
  PointGroup G;
  Quaternion orientation;
  if (name == "tetrahedral") {
    G = tetrahedral_group();
    orientation = default_tetrahedral_orientation();
  } else if (name == "cyclic") {
    G = cyclic_group(static_cast<int>(number(j, "n")));
  } else {
    throw InvalidInputError("unknown group '" + name + "'");
  }
  if (j.contains("orientation")) orientation = quaternion_from_json(j.at("orientation"));
  return {G, orientation};
}

SupportFunction support_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
    throw InvalidInputError("support must be an object with a \"type\"");
  const std::string type = j.at("type").get<std::string>();
  if (type == "example") return example_family(number(j, "a"), number(j, "b"), number(j, "C", 0.0));
  if (type == "sphere") return SupportFunction::sphere(number(j, "width"));
  if (type == "rotsym") {
    if (!j.contains("p") || !j.contains("q")) throw InvalidInputError("rotsym support needs p and q");
    return SupportFunction::rotsym(
        RotSymSupport(poly_from_json(j.at("p")), poly_from_json(j.at("q")), number(j, "shift", 0.0)));
  }
  if (type == "rational") {
    if (!j.contains("A") || !j.contains("B")) throw InvalidInputError("rational support needs A and B");
    return SupportFunction::rational(RationalSupport(matrix_from_json(j.at("A")), matrix_from_json(j.at("B"))));
  }
  if (!j.contains("base")) throw InvalidInputError("support of type '" + type + "' needs a base");
  const SupportFunction base = support_from_json(j.at("base"));
  if (type == "shift") return shift(base, number(j, "C"));
  if (type == "translate") {
    const Json& p = j.at("p");
    if (!p.is_array() || p.size() != 3) throw InvalidInputError("translation p must be [x1, x2, x3]");
    return translate(base, {p[0].get<double>(), p[1].get<double>()}, p[2].get<double>());
  }
  if (type == "average") {
    if (j.contains("elements")) {
      std::vector<RotationElement> elements;
      for (const auto& e : j.at("elements"))
        elements.push_back({quaternion_from_json(e.at("q")), e.value("improper", false)});
      return SupportFunction::averaged(base, elements);
    }
    if (!j.contains("group")) throw InvalidInputError("average support needs group or elements");
    auto [G, orientation] = group_from_json(j.at("group"));
    return average_support(base, G, orientation);
  }
  throw InvalidInputError("unknown support type '" + type + "'");
}

Json support_to_json(const SupportFunction& s) {
  switch (s.kind()) {
    case SupportKind::RotSym: {
      const auto& r = *s.as_rotsym();
      return {{"type", "rotsym"}, {"p", poly_to_json(r.p())}, {"q", poly_to_json(r.q())}, {"shift", round12(r.shift())}};
    }
    case SupportKind::Rational: {
      const auto& r = *s.as_rational();
      return {{"type", "rational"}, {"A", matrix_to_json(r.numerator())}, {"B", matrix_to_json(r.denominator())}};
    }
    case SupportKind::Shifted:
      return {{"type", "shift"}, {"base", support_to_json(*s.base())}, {"C", round12(s.shift_amount())}};
    case SupportKind::Translated: {
      auto [pz, pt] = s.translation();
      return {{"type", "translate"},
              {"base", support_to_json(*s.base())},
              {"p", {round12(pz.real()), round12(pz.imag()), round12(pt)}}};
    }
    case SupportKind::Averaged: {
      Json elements = Json::array();
      for (const auto& g : *s.group_elements())
        elements.push_back({{"q", {g.q.w, g.q.x, g.q.y, g.q.z}}, {"improper", g.improper}});
      return {{"type", "average"}, {"base", support_to_json(*s.base())}, {"elements", elements}};
    }
  }
  throw InvalidInputError("unserializable support");
}

Quaternion parse_orientation(const std::string& text) {
  std::stringstream ss(text);
  std::array<double, 4> q{};
  for (int i = 0; i < 4; ++i) {
    std::string item;
    if (!std::getline(ss, item, ',')) throw InvalidInputError("orientation must be \"q0,q1,q2,q3\"");
    char* end = nullptr;
    q[i] = std::strtod(item.c_str(), &end);
    if (end == item.c_str()) throw InvalidInputError("orientation component is not a number");
  }
  std::string rest;
  if (std::getline(ss, rest) && !rest.empty()) throw InvalidInputError("orientation has more than 4 components");
  return Quaternion{q[0], q[1], q[2], q[3]}.normalized();
}

std::pair<int, int> parse_grid(const std::string& text) {
  int a = 0, b = 0;
  char x = 0, extra = 0;
  if (std::sscanf(text.c_str(), "%d%c%d%c", &a, &x, &b, &extra) != 3 || (x != 'x' && x != 'X'))
    throw InvalidInputError("grid must be NxM");
  return {a, b};
}

SceneConfig scene_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("support")) throw InvalidInputError("config needs a \"support\" object");
  SceneConfig c;
  c.support = j.at("support");
  if (j.contains("grid")) {
    c.n_theta = static_cast<int>(number(j.at("grid"), "n_theta"));
    c.n_phi = static_cast<int>(number(j.at("grid"), "n_phi"));
  }
  if (j.contains("output")) c.output = j.at("output").get<std::string>();
  if (j.contains("format")) c.format = j.at("format").get<std::string>();
  if (c.format != "obj" && c.format != "csv" && c.format != "json")
    throw InvalidInputError("format must be obj, csv or json");
  if (j.contains("group")) c.group = j.at("group");
  if (c.n_theta < 8 || c.n_theta > 4096 || c.n_phi < 8 || c.n_phi > 4096)
    throw InvalidInputError("grid sizes must lie in [8, 4096]");
  return c;
}

SceneConfig load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open config file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw InvalidInputError(std::string("config is not valid JSON: ") + e.what());
  }
  return scene_from_json(j);
}

Json to_json(const MeasureReport& r) {
  return {{"area", round12(r.area)},
          {"volume", round12(r.volume)},
          {"width", round12(r.width)},
          {"ratio_I", round12(r.ratio_I)},
          {"deficit", round12(r.deficit)}};
}

}  // namespace cwidth
