#include "foliage/model_config.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace foliage {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw ArgumentError("");
    return v;
  } catch (const std::exception&) {
    throw ArgumentError("cannot parse " + what + " '" + s + "'");
  }
}

}  // namespace

ModelConfig parse_model_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("model config is not valid JSON: ") + e.what());
  }
  ModelConfig c;
  try {
    c.name = parse_model_name(j.at("name").get<std::string>());
    if (j.contains("A")) {
      auto a = j.at("A").get<std::vector<double>>();
      if (a.size() != 4) throw ArgumentError("model config: A must have four entries");
      for (int i = 0; i < 4; ++i) c.params.A[i] = a[i];
    }
    if (j.contains("deformation"))
      for (const auto& t : j.at("deformation"))
        c.deformation.push_back({t.at("mode").get<std::vector<int>>(), t.value("re", 0.0), t.value("im", 0.0)});
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("model config: ") + e.what());
  }
  return c;
}

ModelConfig load_model_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open model config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_model_config(ss.str());
}

FourierScalar deformation_scalar(const std::vector<DeformationTerm>& terms, int dims) {
  FourierScalar f(dims);
  for (const auto& t : terms) {
    if (static_cast<int>(t.mode.size()) != dims)
      throw ArgumentError("deformation mode has " + std::to_string(t.mode.size()) + " entries, model has " +
                          std::to_string(dims) + " coordinates");
    ModeVector m{};
    for (int j = 0; j < dims; ++j) m[j] = t.mode[j];
    f.add_term(m, Complex(t.re, t.im));
  }
  return f;
}

FoliationModel realize(const ModelConfig& config) {
  FoliationModel m = build_model(config.name, config.params);
  if (config.deformation.empty()) return m;
  return deform_leafwise(m, deformation_scalar(config.deformation, m.dims()));
}

std::vector<DeformationTerm> parse_deformation_spec(const std::string& spec) {
  std::vector<DeformationTerm> out;
  for (const std::string& item : split(spec, ';')) {
    if (item.empty()) continue;
    auto parts = split(item, ':');
    if (parts.size() != 3) throw ArgumentError("deformation term '" + item + "' must look like 'm1[,m2]:re:im'");
    DeformationTerm t;
    for (const std::string& x : split(parts[0], ','))
      t.mode.push_back(static_cast<int>(parse_double(x, "mode entry")));
    t.re = parse_double(parts[1], "real part");
    t.im = parse_double(parts[2], "imaginary part");
    out.push_back(t);
  }
  return out;
}

CarriereParams parse_matrix_spec(const std::string& spec) {
  auto parts = split(spec, ',');
  if (parts.size() != 4) throw ArgumentError("matrix A must be given as 'a,b,c,d'");
  CarriereParams p;
  for (int i = 0; i < 4; ++i) p.A[i] = parse_double(parts[i], "matrix entry");
  return p;
}

}  // namespace foliage
