#pragma once

#include <Eigen/Core>
#include <filesystem>
#include <json.hpp>
#include <string>
#include <vector>

#include "nevpick/problem.hpp"
#include "nevpick/ratfun.hpp"
#include "nevpick/schurclass.hpp"

namespace nevpick::io {

using Json = nlohmann::ordered_json;

/// [re, im] pair or a bare real number.
cplx complex_from_json(const Json& j);
Json to_json(cplx z);
std::vector<cplx> complex_list_from_json(const Json& j);
Json to_json(const std::vector<cplx>& v);
Json to_json(const Poly& p);
/// {"num": [...], "den": [...]}, ascending coefficients.
Json to_json(const RatFun& f);
RatFun ratfun_from_json(const Json& j);
/// Row-major nested [re, im] arrays.
Json to_json(const Eigen::MatrixXcd& m);
Json vector_to_json(const Eigen::VectorXcd& v);
Json to_json(const Eigen::VectorXd& v);

/// {"nodes": [{"z": [re, im], "values": [[re, im], ...]}], "kappa": int}.
/// A node may carry "n", which must equal the number of values.
InterpProblem problem_from_json(const Json& j);
Json to_json(const InterpProblem& p);

Json read_json_file(const std::filesystem::path& path);

/// Parameter mini-language: const:<re>[,<im>], identity, ratio:<numfile>:<denfile>,
/// blaschke:<zerosfile>, json:<ratfun file>.
RatFun parse_function_spec(const std::string& spec);
/// Blaschke parameter: blaschke:<zerosfile>, or any other spec that
/// evaluates to a finite Blaschke product (const:1 for B = 1).
Blaschke parse_blaschke_spec(const std::string& spec);

/// Serializes with two-space indentation and every floating-point number
/// printed with 17 significant digits, so identical reports are byte-identical.
std::string dump(const Json& j);

/// One "path: value" line per leaf.
std::string dump_text(const Json& j);

}  // namespace nevpick::io
