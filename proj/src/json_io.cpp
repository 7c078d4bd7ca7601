#include "hamvol/json_io.hpp"

namespace hamvol::io {

json to_json(const Rat& r) { return to_string(r); }

json to_json(const RatVec& v) {
  json arr = json::array();
  for (const Rat& x : v) arr.push_back(to_string(x));
  return arr;
}

RatVec ratvec_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::parse_error, "expected an array of rationals");
  RatVec out;
  for (const auto& e : j) {
    if (!e.is_string()) throw Error(Errc::parse_error, "expected rational as \"p/q\" string");
    out.push_back(parse_rat(e.get<std::string>()));
  }
  return out;
}

json to_json(const chekanov::ChekanovInvariants& inv) {
  return json{{"min", to_string(inv.min_val)},
              {"multiplicity", inv.multiplicity},
              {"gamma", to_string(inv.gamma_gen)},
              {"distinct", inv.n_distinct},
              {"total", to_string(inv.total)},
              {"norm", to_string(inv.norm)},
              {"conorm", to_string(inv.conorm)}};
}

json to_json(const cn_tori::WitnessStep& step) {
  return json{{"i", step.index_i},
              {"j", step.index_j},
              {"before", to_json(step.before)},
              {"after", to_json(step.after)},
              {"product_before", to_string(product(step.before))},
              {"product_after", to_string(product(step.after))}};
}

json to_json(const cpn::Certificate& cert) {
  json j{{"verdict", cpn::verdict_name(cert.verdict)},
         {"chart", cert.chart},
         {"source", to_json(cert.source)},
         {"target", to_json(cert.target)},
         {"sqvol_drop", to_string(cert.sqvol_drop)}};
  j["details"] = cert.verdict == cpn::Verdict::NotVolumeMinimizing ? to_json(cert.details)
                                                                   : json(nullptr);
  return j;
}

toric::DelzantPolytope polytope_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("facets"))
    throw Error(Errc::parse_error, "polytope JSON needs \"dim\" and \"facets\"");
  if (!j["dim"].is_number_integer())
    throw Error(Errc::parse_error, "\"dim\" must be an integer");
  const int dim = j["dim"].get<int>();
  if (!j["facets"].is_array()) throw Error(Errc::parse_error, "\"facets\" must be an array");

  std::vector<toric::Facet> facets;
  for (const auto& fj : j["facets"]) {
    if (!fj.is_object() || !fj.contains("mu") || !fj.contains("lambda"))
      throw Error(Errc::parse_error, "facet JSON needs \"mu\" and \"lambda\"");
    toric::Facet f;
    for (const auto& e : fj["mu"]) {
      if (!e.is_number_integer()) throw Error(Errc::parse_error, "\"mu\" entries must be integers");
      f.normal.emplace_back(e.get<long long>());
    }
    const auto& lam = fj["lambda"];
    f.offset = lam.is_string() ? parse_rat(lam.get<std::string>())
             : lam.is_number_integer() ? Rat(lam.get<long long>())
                                       : throw Error(Errc::parse_error, "\"lambda\" must be \"p/q\"");
    facets.push_back(std::move(f));
  }
  return toric::DelzantPolytope(dim, std::move(facets));
}

json to_json(const toric::DelzantPolytope& P) {
  json facets = json::array();
  for (const auto& f : P.facets()) {
    json mu = json::array();
    for (const Int& e : f.normal) mu.push_back(e.convert_to<long long>());
    facets.push_back(json{{"mu", mu}, {"lambda", to_string(f.offset)}});
  }
  return json{{"dim", P.dim()}, {"facets", facets}};
}

}  // namespace hamvol::io
