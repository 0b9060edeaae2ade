#pragma once

#include "paraf/code_lattice.hpp"
#include "paraf/lattice.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace paraf {

// Input that violates a schema; `pointer` locates the bad field.
class LoadError : public std::runtime_error {
 public:
  LoadError(const std::string& pointer, const std::string& what)
      : std::runtime_error(pointer + ": " + what), pointer_(pointer) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

nlohmann::json read_json_file(const std::string& path);

// {"gram": [[...], ...]} with integer or "a/b" entries.
Lattice lattice_from_json(const nlohmann::json& j);
Lattice load_lattice(const std::string& path);
// {"rows": [[...], ...]}: rational rows, e.g. a sublattice basis.
QMatrix matrix_from_json(const nlohmann::json& j, const std::string& pointer);
// {"p": int, "d": int, "generators": [[0/1, ...], ...]}.
Code code_from_json(const nlohmann::json& j);
Code load_code(const std::string& path);

// Rationals as "a/b" strings, integers as plain strings.
nlohmann::json to_json(const QMatrix& m);
nlohmann::json to_json(const std::vector<Integer>& v);

}  // namespace paraf
