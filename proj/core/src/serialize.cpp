#include "vizing/serialize.hpp"

#include "vizing/error.hpp"

namespace vizing {

namespace {

template <typename T>
Json optional_json(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json rational_json(const std::optional<Rational>& q) {
  return q ? Json(to_string(*q)) : Json(nullptr);
}

}  // namespace

Json to_json(const VertexSet& s) { return Json(s.members()); }

Json to_json(const DominationCertificate& cert) {
  Json out;
  out["gamma"] = cert.gamma;
  out["gamma_set"] = to_json(cert.one_gamma_set);
  if (cert.all_gamma_sets) {
    Json all = Json::array();
    for (const auto& s : *cert.all_gamma_sets) all.push_back(to_json(s));
    out["all_gamma_sets"] = std::move(all);
  }
  return out;
}

Json to_json(const PowerResult& result) {
  Json out;
  out["pi"] = result.power;
  out["gamma"] = result.gamma;
  out["witness"] = to_json(result.witness);
  out["gamma_set_count"] = result.gamma_set_count;
  return out;
}

Json to_json(const ClassProfile& profile) {
  Json out;
  out["r_max"] = profile.r_max;
  out["triangle_free"] = profile.triangle_free;
  out["claw_free"] = profile.claw_free;
  for (auto [r, v] : profile.k_free) out["k_free[" + std::to_string(r) + "]"] = v;
  for (auto [r, v] : profile.star_free) out["star_free[" + std::to_string(r) + "]"] = v;
  for (auto [k, v] : profile.path_free) out["path_free[" + std::to_string(k) + "]"] = v;
  Json witnesses = Json::object();
  for (const auto& [name, tuple] : profile.witnesses) witnesses[name] = tuple;
  out["witnesses"] = std::move(witnesses);
  return out;
}

Json to_json(const StructureDecomposition& d) {
  Json out;
  out["gamma_set"] = d.gamma_set;
  Json priv = Json::array();
  for (std::size_t i = 0; i < d.private_neighbors.size(); ++i) {
    priv.push_back(Json{{"index", i},
                        {"vertex", d.gamma_set[i]},
                        {"private", to_json(d.private_neighbors[i])},
                        {"cell", to_json(d.cell(i))}});
  }
  out["cells"] = std::move(priv);
  Json shared = Json::array();
  for (const auto& [s, members] : d.shared) {
    std::vector<Vertex> anchors;
    for (std::size_t i : s) anchors.push_back(d.gamma_set[i]);
    shared.push_back(Json{{"indices", s}, {"anchors", anchors}, {"vertices", to_json(members)}});
  }
  out["shared"] = std::move(shared);
  return out;
}

Json to_json(const FairReception& fr, const FairVerdict* verdict) {
  Json out;
  out["k"] = fr.k();
  Json sets = Json::array();
  for (const auto& s : fr.sets()) sets.push_back(to_json(s));
  out["sets"] = std::move(sets);
  out["z"] = to_json(fr.z());
  out["verified"] = fr.verified();
  out["provenance"] = fr.provenance();
  if (verdict && verdict->counterexample) {
    const auto& c = *verdict->counterexample;
    std::vector<std::size_t> one_based;
    for (auto i : c.chosen) one_based.push_back(i + 1);
    out["counterexample"] = Json{{"chosen_sets", one_based},
                                 {"ell", c.chosen.size()},
                                 {"d", to_json(c.d)},
                                 {"score", c.score}};
  }
  return out;
}

Json to_json(const BoundRow& row) {
  Json out;
  out["name"] = row.name;
  out["kind"] = bound_kind_name(row.kind);
  out["applicable"] = row.applicable;
  out["value"] = rational_json(row.value);
  out["approx"] = row.value ? Json(to_decimal(*row.value)) : Json(nullptr);
  out["satisfied"] = row.satisfied;
  out["detail"] = row.detail;
  return out;
}

Json to_json(const BoundReport& report) {
  Json out;
  out["g_id"] = report.g_id;
  out["h_id"] = report.h_id;
  out["gamma_g"] = report.gamma_g;
  out["gamma_h"] = report.gamma_h;
  out["gamma_product"] = optional_json(report.gamma_product);
  out["pi_g"] = optional_json(report.pi_g);
  out["diam_g"] = optional_json(report.diam_g);
  if (report.gamma_f_g) out["gamma_f_g"] = *report.gamma_f_g;
  if (report.gamma_f_h) out["gamma_f_h"] = *report.gamma_f_h;
  out["vizing_ratio"] = rational_json(report.vizing_ratio);
  out["exact"] = report.exact;
  Json rows = Json::array();
  for (const auto& row : report.bounds) rows.push_back(to_json(row));
  out["bounds"] = std::move(rows);
  if (!report.notes.empty()) out["notes"] = report.notes;
  return out;
}

FairReception fair_reception_from_json(const Graph& g, const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("sets") || !doc["sets"].is_array()) {
    throw DomainError("fair reception document needs a \"sets\" array");
  }
  std::vector<VertexSet> sets;
  for (const auto& s : doc["sets"]) {
    VertexSet set(g.order());
    for (const auto& v : s) {
      auto index = v.get<long long>();
      if (index < 0) throw DomainError("negative vertex in fair reception");
      set.insert(static_cast<Vertex>(index));
    }
    sets.push_back(std::move(set));
  }
  return FairReception(g, std::move(sets));
}

std::string csv_header() {
  return "g_id,h_id,gamma_g,gamma_h,gamma_product,pi_g,diam_g,ratio,worst_bound_margin";
}

std::string to_csv_row(const BoundReport& r) {
  auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string(); };
  auto margin = r.worst_proven_margin();
  return r.g_id + "," + r.h_id + "," + std::to_string(r.gamma_g) + "," + std::to_string(r.gamma_h) +
         "," + opt(r.gamma_product) + "," + opt(r.pi_g) + "," + opt(r.diam_g) + "," +
         (r.vizing_ratio ? to_decimal(*r.vizing_ratio) : "") + "," +
         (margin ? to_decimal(*margin) : "");
}

}  // namespace vizing
