#include <sstream>

#include "json.hpp"
#include "logres/criteria.hpp"

namespace logres {

namespace {

using json = nlohmann::ordered_json;

json check_json(const Check& c) {
  return {{"verdict", to_string(c.verdict)}, {"witness", c.witness}, {"certificate", c.certificate}};
}

Check check_from(const json& j) {
  return {verdict_from_string(j.at("verdict").get<std::string>()), j.at("witness").get<std::string>(),
          j.at("certificate").get<std::string>()};
}

const char* kConditions[] = {"free",
                             "euler_homogeneous",
                             "jacobian_radical",
                             "jacobian_eq_conductor",
                             "residues_weakly_holomorphic",
                             "normal_crossing_codim1",
                             "normal_crossing_at_origin"};

Check DivisorReport::*kMembers[] = {&DivisorReport::free,
                                    &DivisorReport::euler_homogeneous,
                                    &DivisorReport::jacobian_radical,
                                    &DivisorReport::jacobian_eq_conductor,
                                    &DivisorReport::residues_weakly_holomorphic,
                                    &DivisorReport::normal_crossing_codim1,
                                    &DivisorReport::normal_crossing_at_origin};

}  // namespace

std::string report_to_json(const DivisorReport& r) {
  json j;
  j["schema"] = r.schema;
  j["input"] = {{"vars", r.vars}, {"poly", r.poly}, {"factors", r.factors}};
  json cond;
  for (std::size_t i = 0; i < std::size(kConditions); ++i) cond[kConditions[i]] = check_json(r.*kMembers[i]);
  j["conditions"] = cond;
  j["gorenstein_singular_locus"] = r.gorenstein_singular_locus;
  j["mu_residues"] = {{"count", r.mu_residues}, {"contains_unit", r.residues_contain_unit}};
  j["direct_sum"] = r.direct_sum ? json(*r.direct_sum) : json(nullptr);
  j["crosscheck"] = {{"B", to_string(r.crosscheck.B)}, {"D", to_string(r.crosscheck.D)}, {"G", to_string(r.crosscheck.G)}};
  const auto& c = r.classification;
  j["classification"] = {{"verdict", to_string(c.verdict)},      {"curve_variables", c.curve_variables},
                         {"passive_variables", c.passive_variables}, {"substitutions", c.substitutions},
                         {"euler_field", c.euler_field},            {"diagnostic", c.diagnostic}};
  j["modules"] = {{"jacobian_ideal", r.jacobian_ideal},
                  {"residue_module", r.residue_module},
                  {"normalization", r.normalization},
                  {"conductor", r.conductor}};
  json cons = json::array();
  for (const auto& e : r.consistency) cons.push_back({{"name", e.name}, {"status", e.status}, {"detail", e.detail}});
  j["consistency"] = cons;
  j["provenance"] = {{"seed", r.seed},
                     {"precision", r.precision},
                     {"normalization_source", r.normalization_source},
                     {"truncation", r.truncation},
                     {"branches", r.branches}};
  return j.dump(2);
}

DivisorReport report_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    DivisorReport r;
    r.schema = j.at("schema").get<int>();
    if (r.schema != 1) throw std::invalid_argument("unsupported report schema " + std::to_string(r.schema));
    r.vars = j.at("input").at("vars").get<std::vector<std::string>>();
    r.poly = j.at("input").at("poly").get<std::string>();
    r.factors = j.at("input").at("factors").get<std::vector<std::string>>();
    for (std::size_t i = 0; i < std::size(kConditions); ++i)
      r.*kMembers[i] = check_from(j.at("conditions").at(kConditions[i]));
    r.gorenstein_singular_locus = j.at("gorenstein_singular_locus").get<std::string>();
    r.mu_residues = j.at("mu_residues").at("count").get<std::size_t>();
    r.residues_contain_unit = j.at("mu_residues").at("contains_unit").get<bool>();
    if (!j.at("direct_sum").is_null()) r.direct_sum = j.at("direct_sum").get<bool>();
    const auto& cc = j.at("crosscheck");
    r.crosscheck = {verdict_from_string(cc.at("B").get<std::string>()),
                    verdict_from_string(cc.at("D").get<std::string>()),
                    verdict_from_string(cc.at("G").get<std::string>())};
    const auto& c = j.at("classification");
    r.classification.verdict = gorenstein_class_from_string(c.at("verdict").get<std::string>());
    r.classification.curve_variables = c.at("curve_variables").get<std::vector<std::string>>();
    r.classification.passive_variables = c.at("passive_variables").get<std::vector<std::string>>();
    r.classification.substitutions = c.at("substitutions").get<std::vector<std::string>>();
    r.classification.euler_field = c.at("euler_field").get<std::string>();
    r.classification.diagnostic = c.at("diagnostic").get<std::string>();
    const auto& m = j.at("modules");
    r.jacobian_ideal = m.at("jacobian_ideal").get<std::string>();
    r.residue_module = m.at("residue_module").get<std::string>();
    r.normalization = m.at("normalization").get<std::string>();
    r.conductor = m.at("conductor").get<std::string>();
    for (const auto& e : j.at("consistency"))
      r.consistency.push_back(
          {e.at("name").get<std::string>(), e.at("status").get<std::string>(), e.at("detail").get<std::string>()});
    const auto& p = j.at("provenance");
    r.seed = p.at("seed").get<std::uint64_t>();
    r.precision = p.at("precision").get<int>();
    r.normalization_source = p.at("normalization_source").get<std::string>();
    r.truncation = p.at("truncation").get<int>();
    r.branches = p.at("branches").get<std::size_t>();
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("report: ") + e.what());
  }
}

std::string report_to_text(const DivisorReport& r) {
  std::ostringstream out;
  out << "germ: " << r.poly << " in (";
  for (std::size_t i = 0; i < r.vars.size(); ++i) out << (i ? ", " : "") << r.vars[i];
  out << ")\n";
  if (!r.factors.empty()) {
    out << "factors:";
    for (const auto& f : r.factors) out << " [" << f << "]";
    out << "\n";
  }
  for (std::size_t i = 0; i < std::size(kConditions); ++i) {
    const Check& c = r.*kMembers[i];
    out << "  " << kConditions[i] << ": " << to_string(c.verdict);
    if (!c.certificate.empty()) out << "  (" << c.certificate << ")";
    if (!c.witness.empty()) out << "  [" << c.witness << "]";
    out << "\n";
  }
  out << "  gorenstein_singular_locus: " << r.gorenstein_singular_locus << "\n";
  out << "  mu_residues: " << r.mu_residues << ", contains unit: " << (r.residues_contain_unit ? "true" : "false")
      << "\n";
  if (r.direct_sum) out << "  direct_sum: " << (*r.direct_sum ? "true" : "false") << "\n";
  out << "  classification: " << to_string(r.classification.verdict);
  if (!r.classification.euler_field.empty()) out << ", Euler field " << r.classification.euler_field;
  if (!r.classification.passive_variables.empty()) {
    out << ", passive";
    for (const auto& v : r.classification.passive_variables) out << " " << v;
  }
  if (!r.classification.diagnostic.empty()) out << " (" << r.classification.diagnostic << ")";
  out << "\n";
  out << "modules:\n";
  out << "  J_D = " << r.jacobian_ideal << "\n";
  out << "  R_D = " << r.residue_module << "\n";
  if (!r.normalization.empty()) out << "  normalization = " << r.normalization << "\n";
  if (!r.conductor.empty()) out << "  C_D = " << r.conductor << "\n";
  out << "consistency:\n";
  for (const auto& e : r.consistency) out << "  " << e.name << ": " << e.status << " (" << e.detail << ")\n";
  out << "provenance: seed " << r.seed << ", precision " << r.precision << ", normalization "
      << r.normalization_source << ", truncation " << r.truncation << ", branches " << r.branches << "\n";
  if (!r.timings.empty()) {
    out << "timings (ms):";
    for (const auto& [name, ms] : r.timings) out << " " << name << "=" << static_cast<long>(ms + 0.5);
    out << "\n";
  }
  return out.str();
}

}  // namespace logres
