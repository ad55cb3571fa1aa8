#include "zetatail/report.hpp"

#include <json.hpp>
#include <sstream>

namespace zetatail {

namespace {
std::string endpoint_str(const mpfr_t& x, int digits) {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, x);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}
}  // namespace

std::string BoundReport::to_text(int digits) const {
  std::ostringstream out;
  out << family << "  sigma=" << sigma.str(digits) << "  T=" << T.str(digits) << "\n";
  out << "  bound " << value.str(digits) << "\n";
  for (const auto& [name, term] : terms) out << "  " << name << " " << term.str(digits) << "\n";
  return out.str();
}

std::string BoundReport::to_json(int digits) const {
  nlohmann::json j;
  j["family"] = family;
  j["sigma"] = {{"lo", endpoint_str(sigma.lo_raw(), digits)},
                {"hi", endpoint_str(sigma.hi_raw(), digits)}};
  j["T"] = {{"lo", endpoint_str(T.lo_raw(), digits)}, {"hi", endpoint_str(T.hi_raw(), digits)}};
  j["bound"] = {{"lo", endpoint_str(value.lo_raw(), digits)},
                {"hi", endpoint_str(value.hi_raw(), digits)}};
  j["terms"] = nlohmann::json::array();
  for (const auto& [name, term] : terms) {
    j["terms"].push_back({{"name", name},
                          {"lo", endpoint_str(term.lo_raw(), digits)},
                          {"hi", endpoint_str(term.hi_raw(), digits)}});
  }
  return j.dump(2);
}

}  // namespace zetatail
