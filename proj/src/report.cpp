#include "paraf/report.hpp"

namespace paraf {

nlohmann::json to_json(const Report& r) {
  return {{"status", r.pass ? "pass" : "fail"}, {"findings", r.findings}, {"payload", r.payload}};
}

}  // namespace paraf
