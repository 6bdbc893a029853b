#include "cohoparam/json_io.hpp"

#include "cohoparam/errors.hpp"

namespace cohoparam {

namespace {

Json subset_json(const std::vector<int>& s) {
  Json a = Json::array();
  for (int i : s) a.push_back(i + 1);
  return a;
}

Json weight_json(const HalfIntVector& v) {
  Json a = Json::array();
  for (HalfInt x : v) a.push_back(x.to_string());
  return a;
}

std::string kind_string(CartanType t) { return to_string(t); }

}  // namespace

Json to_json(const ParameterList& list) {
  Json j;
  j["group"] = list.group;
  j["weight"] = weight_json(list.weight);
  Json params = Json::array();
  for (const auto& rec : list.parameters) {
    Json p;
    if (const auto* gl = std::get_if<GLParameter>(&rec.param)) {
      Json atoms = Json::array();
      for (const auto& a : gl->atoms()) atoms.push_back(a.to_string());
      SelfDualInfo info = classify_selfdual(*gl);
      p["text"] = gl->to_string();
      p["atoms"] = atoms;
      p["twist"] = gl->twist().to_string();
      p["selfdual"] = to_string(info.type);
      p["det"] = det_string(info.det);
      p["orbit"] = gl->orbit();
    } else {
      const auto& cp = std::get<ComplexParameter>(rec.param);
      Json atoms = Json::array();
      for (const auto& a : cp.atoms())
        atoms.push_back("(" + a.d.to_string() + ")[" + std::to_string(a.n) + "]");
      p["kind"] = "complex";
      p["text"] = cp.to_string();
      p["atoms"] = atoms;
      p["twist"] = "0";
      p["selfdual"] = cp.selfdual() ? "conjugate-selfdual" : "not-selfdual";
      p["det"] = "1";
    }
    p["levi_subset"] = subset_json(rec.levi_subset);
    params.push_back(p);
  }
  j["parameters"] = params;
  return j;
}

ParameterList parameter_list_from_json(const Json& j) {
  try {
    ParameterList list;
    list.group = j.at("group").get<std::string>();
    std::vector<HalfInt> w;
    for (const auto& x : j.at("weight")) w.push_back(HalfInt::parse(x.get<std::string>()));
    list.weight = HalfIntVector(std::move(w));
    for (const auto& p : j.at("parameters")) {
      ParameterRecord rec;
      for (const auto& i : p.at("levi_subset")) {
        int v = i.get<int>();
        if (v < 1) throw InputError("levi_subset entries are 1-based");
        rec.levi_subset.push_back(v - 1);
      }
      bool complex = p.contains("kind") && p.at("kind").get<std::string>() == "complex";
      std::string text;
      for (const auto& a : p.at("atoms")) text += (text.empty() ? "" : "+") + a.get<std::string>();
      if (complex) {
        rec.param = ComplexParameter::parse(text);
      } else {
        HalfInt b = HalfInt::parse(p.at("twist").get<std::string>());
        bool orbit = p.contains("orbit") && p.at("orbit").get<bool>();
        rec.param = GLParameter(GLParameter::parse(text).atoms(), b, orbit);
      }
      list.parameters.push_back(std::move(rec));
    }
    return list;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed parameter JSON: ") + e.what());
  }
}

Json to_json(const PacketDescriptor& p) {
  Json j;
  j["group"] = p.group.to_string();
  j["k"] = p.k == KFlavor::SO ? "SO" : "O";
  j["levi_subset"] = subset_json(p.subset);
  j["size"] = p.size();
  Json members = Json::array();
  for (const auto& m : p.members)
    members.push_back(Json{{"rep", m.rep.to_string()}, {"label", m.label}, {"h_dim", m.h_dim}});
  j["members"] = members;
  return j;
}

Json to_json(const TransferResult& r) {
  Json j;
  j["embedding"] = to_string(r.tag);
  j["n"] = r.n;
  if (r.tag == Embedding::SOOddInSOEven) j["disc"] = r.disc ? "nontrivial" : "trivial";
  j["source"] = r.source.to_string();
  if (r.target) {
    j["target"] = r.target->to_string();
  } else if (r.target_w) {
    j["target"] = r.target_w->to_string();
    j["target_conjugate"] = r.target_w->conjugate().to_string();
  }
  j["rho_source"] = weight_json(r.rho_source);
  j["rho_target"] = weight_json(r.rho_target);
  j["rho_check"] = r.rho_ok ? "ok" : "failed";
  j["source_cohomological"] = r.source_cohomological;
  j["target_cohomological"] = r.target_cohomological;
  return j;
}

Json to_json(const PacketSum& s) {
  Json j;
  j["value"] = s.value;
  j["packet_size"] = s.packet_size;
  j["double_coset_sum"] = s.double_coset_sum;
  j["closed_form"] = s.closed_form;
  if (s.levi_sum) j["levi_sum"] = *s.levi_sum;
  if (s.gl_formula) j["gl_formula"] = *s.gl_formula;
  if (s.floor_text) {
    j["floor_text"] = *s.floor_text;
    j["floor_text_discrepancy"] = s.floor_text_discrepancy;
  }
  return j;
}

Json to_json(const CompactInnerForms& f) {
  Json j;
  j["group"] = f.group.to_string();
  j["weyl_order"] = f.weyl_order;
  Json classes = Json::array();
  for (const auto& c : f.classes)
    classes.push_back(Json{{"rep", c.rep},
                           {"label", c.label},
                           {"orbit_size", c.orbit_size},
                           {"stabilizer_order", c.stabilizer_order}});
  j["classes"] = classes;
  j["sum"] = f.sum;
  return j;
}

Json to_json(const QuasiSplitInnerForms& f) {
  Json j;
  j["family"] = f.family;
  j["a"] = f.a;
  j["b"] = f.b;
  j["e"] = f.e;
  Json terms = Json::array();
  for (const auto& t : f.terms) terms.push_back(Json{{"form", t.form}, {"index", t.index}, {"betti", t.betti}});
  j["terms"] = terms;
  j["index_sum"] = f.index_sum;
  j["betti_sum"] = f.betti_sum;
  return j;
}

Json to_json(const CatalogEntry& c) {
  Json j;
  j["group"] = c.group.to_string();
  j["k"] = c.k == KFlavor::SO ? "SO" : "O";
  j["dual_datum"] = c.datum.name;
  Json factors = Json::array();
  for (const auto& f : c.datum.factors) factors.push_back(kind_string(f.type) + std::to_string(f.rank));
  j["factors"] = factors;
  j["theta"] = c.theta.to_string();
  j["W"] = c.W.order();
  j["W_theta"] = c.W_theta.order();
  j["K_label"] = c.K.label();
  j["K"] = c.K.order();
  Json gens = Json::array();
  for (const auto& g : c.K.generators()) gens.push_back(g.to_string());
  j["K_generators"] = gens;
  j["d"] = c.d;
  j["torus"] = Json{{"a", c.a}, {"b", c.b}, {"e", c.e}};
  return j;
}

}  // namespace cohoparam
