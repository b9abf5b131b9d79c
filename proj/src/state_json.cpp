#include "tomo/state_json.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace tomo {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& message) {
  fail(ErrorKind::parse, message);
}

double need_number(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_number())
    parse_fail(std::string("missing numeric field '") + key + "'");
  return obj[key].get<double>();
}

double number_or(const json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number())
    parse_fail(std::string("field '") + key + "' must be numeric");
  return obj[key].get<double>();
}

Grid parse_grid(const json& obj) {
  if (!obj.is_object()) parse_fail("grid must be an object");
  return Grid(need_number(obj, "x_min"), need_number(obj, "step"),
              Index(need_number(obj, "n_points")));
}

ArrayXcd parse_amplitudes(const json& doc, Index n) {
  if (!doc.contains("re") || !doc["re"].is_array())
    parse_fail("sampled state needs an 're' array");
  const auto& re = doc["re"];
  if (Index(re.size()) != n)
    parse_fail("'re' length does not match grid n_points");
  const bool has_im = doc.contains("im");
  if (has_im && Index(doc["im"].size()) != n)
    parse_fail("'im' length does not match grid n_points");
  ArrayXcd amps(n);
  for (Index k = 0; k < n; ++k) {
    const double re_k = re[size_t(k)].get<double>();
    const double im_k = has_im ? doc["im"][size_t(k)].get<double>() : 0.0;
    amps[k] = Complex(re_k, im_k);
  }
  return amps;
}

PureState parse_pure(const std::string& family, const json& doc) {
  const json params = doc.contains("params") ? doc["params"] : json::object();
  if (family == "ground") return PureState(Ground{});
  if (family == "waist") return PureState(Waist{need_number(params, "sigma")});
  if (family == "squeezed") {
    if (params.contains("r")) {
      return PureState(squeezed_from_correlation(
          need_number(params, "r"), number_or(params, "a1", 0.5)));
    }
    return PureState(SqueezedCorrelated{
        need_number(params, "a1"), need_number(params, "a2"),
        Complex(number_or(params, "b_re", 0.0), number_or(params, "b_im", 0.0))});
  }
  if (family == "soliton") return PureState(Soliton{need_number(params, "lz")});
  if (family == "sampled") {
    if (!doc.contains("grid")) parse_fail("sampled state needs a grid");
    const Grid grid = parse_grid(doc["grid"]);
    return PureState(Sampled{grid, parse_amplitudes(doc, grid.n_points)},
                     number_or(doc, "norm_tol", 1e-6));
  }
  parse_fail("unknown pure-state family '" + family + "'");
}

std::string need_family(const json& doc) {
  if (!doc.is_object() || !doc.contains("family") ||
      !doc["family"].is_string())
    parse_fail("state document needs a string 'family' field");
  return doc["family"].get<std::string>();
}

State parse_one_mode(const json& doc) {
  const std::string family = need_family(doc);
  const json params = doc.contains("params") ? doc["params"] : json::object();
  if (family == "gaussian-covariance" || family == "gauss") {
    return GaussianCovariance(need_number(params, "sigma_qq"),
                              need_number(params, "sigma_pp"),
                              number_or(params, "sigma_qp", 0.0));
  }
  if (family == "thermal")
    return thermal_covariance(need_number(params, "beta"));
  if (family == "squeezed-thermal")
    return squeezed_thermal_covariance(need_number(params, "lambda"),
                                       need_number(params, "beta"));
  if (family == "mixed") {
    if (!doc.contains("components") || !doc["components"].is_array())
      parse_fail("mixed state needs a 'components' array");
    std::vector<MixedComponent> components;
    for (const auto& c : doc["components"]) {
      if (!c.is_object() || !c.contains("state"))
        parse_fail("mixed component needs 'weight' and 'state'");
      components.push_back(MixedComponent{
          need_number(c, "weight"),
          parse_pure(need_family(c["state"]), c["state"])});
    }
    return MixedState(std::move(components));
  }
  return parse_pure(family, doc);
}

}  // namespace

ParsedState parse_state_json(const nlohmann::json& doc) {
  const std::string family = need_family(doc);
  if (family == "product") {
    if (!doc.contains("modes") || !doc["modes"].is_array())
      parse_fail("product state needs a 'modes' array");
    std::vector<ModeState> modes;
    for (const auto& m : doc["modes"]) {
      State mode = parse_one_mode(m);
      if (std::holds_alternative<MixedState>(mode))
        parse_fail("product modes must be pure or Gaussian-covariance states");
      if (auto* pure = std::get_if<PureState>(&mode))
        modes.push_back(std::move(*pure));
      else
        modes.push_back(std::get<GaussianCovariance>(mode));
    }
    return ProductState(std::move(modes));
  }
  return parse_one_mode(doc);
}

namespace {

std::map<std::string, double> parse_shorthand_args(const std::string& text) {
  std::map<std::string, double> args;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      parse_fail("shorthand arguments must look like key=value");
    const std::string key = item.substr(0, eq);
    try {
      args[key] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      parse_fail("bad numeric value for '" + key + "'");
    }
  }
  return args;
}

double need_arg(const std::map<std::string, double>& args,
                const std::string& key) {
  const auto it = args.find(key);
  if (it == args.end()) parse_fail("shorthand needs '" + key + "'");
  return it->second;
}

double arg_or(const std::map<std::string, double>& args,
              const std::string& key, double fallback) {
  const auto it = args.find(key);
  return it == args.end() ? fallback : it->second;
}

ParsedState parse_shorthand(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string family = spec.substr(0, colon);
  const auto args = colon == std::string::npos
                        ? std::map<std::string, double>{}
                        : parse_shorthand_args(spec.substr(colon + 1));

  if (family == "ground") return State(PureState(Ground{}));
  if (family == "waist")
    return State(PureState(Waist{need_arg(args, "sigma")}));
  if (family == "soliton")
    return State(PureState(Soliton{need_arg(args, "lz")}));
  if (family == "squeezed") {
    if (args.count("r"))
      return State(PureState(
          squeezed_from_correlation(need_arg(args, "r"), arg_or(args, "a1", 0.5))));
    return State(PureState(SqueezedCorrelated{
        need_arg(args, "a1"), need_arg(args, "a2"),
        Complex(arg_or(args, "br", 0.0), arg_or(args, "bi", 0.0))}));
  }
  if (family == "thermal")
    return State(thermal_covariance(need_arg(args, "beta")));
  if (family == "squeezed-thermal")
    return State(squeezed_thermal_covariance(need_arg(args, "lambda"),
                                             need_arg(args, "beta")));
  if (family == "gauss" || family == "gaussian-covariance")
    return State(GaussianCovariance(need_arg(args, "qq"), need_arg(args, "pp"),
                                    arg_or(args, "qp", 0.0)));
  parse_fail("unknown state shorthand '" + family + "'");
}

}  // namespace

ParsedState parse_state_spec(const std::string& spec) {
  if (spec.empty()) parse_fail("empty state spec");
  if (spec[0] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(spec);
    } catch (const std::exception& e) {
      parse_fail(std::string("invalid state JSON: ") + e.what());
    }
    return parse_state_json(doc);
  }
  if (spec[0] == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) parse_fail("cannot open state file '" + spec.substr(1) + "'");
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const std::exception& e) {
      parse_fail(std::string("invalid state JSON file: ") + e.what());
    }
    return parse_state_json(doc);
  }
  return parse_shorthand(spec);
}

}  // namespace tomo
