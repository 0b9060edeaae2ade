#include "paraf/io.hpp"

#include <fstream>

namespace paraf {

namespace {

Rational entry(const nlohmann::json& v, const std::string& ptr) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::exception& e) {
      throw LoadError(ptr, e.what());
    }
  }
  throw LoadError(ptr, "expected an integer or a \"a/b\" string");
}

int int_field(const nlohmann::json& j, const std::string& key) {
  if (!j.contains(key)) throw LoadError("/" + key, "missing");
  if (!j[key].is_number_integer()) throw LoadError("/" + key, "expected an integer");
  return j[key].get<int>();
}

}  // namespace

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("", "cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw LoadError("", path + " is not valid JSON: " + e.what());
  }
}

QMatrix matrix_from_json(const nlohmann::json& j, const std::string& pointer) {
  if (!j.is_array() || j.empty()) throw LoadError(pointer, "expected a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  QMatrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string rp = pointer + "/" + std::to_string(r);
    if (!j[r].is_array()) throw LoadError(rp, "expected an array");
    if (j[r].size() != cols) throw LoadError(rp, "row has " + std::to_string(j[r].size()) + " entries, expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(j[r][c], rp + "/" + std::to_string(c));
  }
  return m;
}

Lattice lattice_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("gram")) throw LoadError("/gram", "missing");
  QMatrix g = matrix_from_json(j["gram"], "/gram");
  if (!g.is_square()) throw LoadError("/gram", "Gram matrix is not square");
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < r; ++c)
      if (g(r, c) != g(c, r))
        throw LoadError("/gram/" + std::to_string(r) + "/" + std::to_string(c),
                        "Gram matrix not symmetric at (" + std::to_string(r) + "," + std::to_string(c) + ")");
  if (!is_positive_definite(g)) throw LoadError("/gram", "Gram matrix is not positive definite");
  return make_lattice(g);
}

Lattice load_lattice(const std::string& path) { return lattice_from_json(read_json_file(path)); }

Code code_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw LoadError("", "expected an object");
  Code c;
  c.p = int_field(j, "p");
  c.d = int_field(j, "d");
  if (c.p < 3 || c.p % 2 == 0) throw LoadError("/p", "must be an odd integer >= 3");
  if (c.d < 1) throw LoadError("/d", "must be positive");
  if ((c.p - 1) * c.d > 64) throw LoadError("/d", "(p-1)d must be at most 64");
  if (!j.contains("generators") || !j["generators"].is_array()) throw LoadError("/generators", "expected an array");
  const std::size_t len = static_cast<std::size_t>((c.p - 1) * c.d);
  for (std::size_t r = 0; r < j["generators"].size(); ++r) {
    const auto& g = j["generators"][r];
    const std::string ptr = "/generators/" + std::to_string(r);
    if (!g.is_array() || g.size() != len)
      throw LoadError(ptr, "expected " + std::to_string(len) + " bits");
    Codeword w;
    for (std::size_t b = 0; b < len; ++b) {
      if (!g[b].is_number_integer() || (g[b] != 0 && g[b] != 1))
        throw LoadError(ptr + "/" + std::to_string(b), "expected 0 or 1");
      w.push_back(g[b].get<int>());
    }
    c.generators.push_back(w);
  }
  return c;
}

Code load_code(const std::string& path) { return code_from_json(read_json_file(path)); }

nlohmann::json to_json(const QMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    out.push_back(row);
  }
  return out;
}

nlohmann::json to_json(const std::vector<Integer>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

}  // namespace paraf
