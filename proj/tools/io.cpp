#include "io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "nevpick/error.hpp"

namespace nevpick::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

double real_from_json(const Json& j) {
  if (!j.is_number()) bad("expected a number, got " + j.dump());
  return j.get<double>();
}

std::string format_double(double x) {
  if (std::isnan(x)) return "\"nan\"";
  if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
  if (x == 0.0) return "0.0";  // folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

void dump_rec(const Json& j, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  const std::string inner(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner + Json(it.key()).dump() + ": ";
        dump_rec(it.value(), depth + 1, out);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      bool flat = true;
      for (const auto& e : j)
        if (e.is_structured()) flat = false;
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          dump_rec(j[i], depth + 1, out);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        dump_rec(j[i], depth + 1, out);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

void text_rec(const Json& j, const std::string& path, std::string& out) {
  if (j.is_object() && !j.empty()) {
    for (auto it = j.begin(); it != j.end(); ++it) text_rec(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    return;
  }
  if (j.is_array() && !j.empty()) {
    bool pair = j.size() == 2 && j[0].is_number() && j[1].is_number();
    if (!pair) {
      for (std::size_t i = 0; i < j.size(); ++i) text_rec(j[i], path + "[" + std::to_string(i) + "]", out);
      return;
    }
  }
  std::string v;
  dump_rec(j, 0, v);
  out += path + ": " + v + "\n";
}

std::vector<cplx> coefficient_file(const std::string& path) {
  return complex_list_from_json(read_json_file(path));
}

}  // namespace

cplx complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) bad("expected [re, im], got " + j.dump());
  return {real_from_json(j[0]), real_from_json(j[1])};
}

Json to_json(cplx z) { return Json::array({Json(static_cast<double>(z.real())), Json(static_cast<double>(z.imag()))}); }

std::vector<cplx> complex_list_from_json(const Json& j) {
  if (!j.is_array()) bad("expected a list of complex numbers");
  std::vector<cplx> v;
  for (const auto& e : j) v.push_back(complex_from_json(e));
  return v;
}

Json to_json(const std::vector<cplx>& v) {
  Json a = Json::array();
  for (const cplx z : v) a.push_back(to_json(z));
  return a;
}

Json to_json(const Poly& p) { return to_json(p.coeffs()); }

Json to_json(const RatFun& f) {
  Json j;
  j["num"] = f.is_zero() ? Json::array() : to_json(f.num());
  j["den"] = to_json(f.den());
  return j;
}

RatFun ratfun_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) bad("rational function needs \"num\" and \"den\"");
  const Poly num(complex_list_from_json(j["num"]));
  const Poly den(complex_list_from_json(j["den"]));
  if (den.is_zero()) bad("denominator is identically zero");
  return RatFun::reduce(num, den);
}

Json to_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(cplx(m(r, c))));
    rows.push_back(row);
  }
  return rows;
}

Json vector_to_json(const Eigen::VectorXcd& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_json(cplx(v(i))));
  return a;
}

Json to_json(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

InterpProblem problem_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("nodes")) bad("problem needs a \"nodes\" list");
  InterpProblem p;
  if (!j["nodes"].is_array()) bad("\"nodes\" must be a list");
  for (const auto& node : j["nodes"]) {
    if (!node.is_object() || !node.contains("z") || !node.contains("values")) bad("node needs \"z\" and \"values\"");
    NodeData nd{complex_from_json(node["z"]), complex_list_from_json(node["values"])};
    if (node.contains("n")) {
      if (!node["n"].is_number_integer() || node["n"].get<long long>() != static_cast<long long>(nd.values.size()))
        throw Error(ErrorCode::ValueCountMismatch, "node multiplicity differs from the number of values");
    }
    p.nodes.push_back(std::move(nd));
  }
  if (j.contains("kappa")) {
    if (!j["kappa"].is_number_integer()) bad("\"kappa\" must be an integer");
    p.kappa = j["kappa"].get<int>();
  }
  p.validate();
  return p;
}

Json to_json(const InterpProblem& p) {
  Json nodes = Json::array();
  for (const auto& n : p.nodes) {
    Json o;
    o["z"] = to_json(n.z);
    o["values"] = to_json(n.values);
    nodes.push_back(o);
  }
  Json j;
  j["nodes"] = nodes;
  j["kappa"] = p.kappa;
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    bad("malformed JSON in " + path.string() + ": " + e.what());
  }
}

RatFun parse_function_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "identity" && colon == std::string::npos) return RatFun::identity();
  if (kind == "const") {
    std::istringstream ss(rest);
    double re = 0.0;
    double im = 0.0;
    char comma = 0;
    if (!(ss >> re)) bad("bad constant in " + spec);
    if (ss >> comma) {
      if (comma != ',' || !(ss >> im)) bad("bad constant in " + spec);
    }
    ss >> std::ws;
    if (!ss.eof()) bad("bad constant in " + spec);
    return RatFun(cplx(re, im));
  }
  if (kind == "ratio") {
    const auto sep = rest.find(':');
    if (sep == std::string::npos) bad("ratio needs <numfile>:<denfile>");
    const Poly num(coefficient_file(rest.substr(0, sep)));
    const Poly den(coefficient_file(rest.substr(sep + 1)));
    if (den.is_zero()) bad("denominator is identically zero");
    return RatFun::reduce(num, den);
  }
  if (kind == "blaschke") return Blaschke(coefficient_file(rest)).to_ratfun();
  if (kind == "json") return ratfun_from_json(read_json_file(rest));
  bad("unknown function spec '" + spec + "'");
}

Blaschke parse_blaschke_spec(const std::string& spec) {
  if (spec.rfind("blaschke:", 0) == 0) return Blaschke(coefficient_file(spec.substr(9)));
  return blaschke_from_ratfun(parse_function_spec(spec));
}

std::string dump(const Json& j) {
  std::string out;
  dump_rec(j, 0, out);
  out += "\n";
  return out;
}

std::string dump_text(const Json& j) {
  std::string out;
  text_rec(j, "", out);
  return out;
}

}  // namespace nevpick::io
