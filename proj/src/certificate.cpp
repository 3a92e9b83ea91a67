#include "odac/certificate.hpp"

#include <json.hpp>

#include "odac/sha256.hpp"

namespace odac {

using json = nlohmann::ordered_json;

namespace {

json matrix_to_json(const Matrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["ring"] = m.ring()->descriptor();
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) entries.push_back(m.at(i, c).str());
  j["entries"] = std::move(entries);
  return j;
}

Matrix matrix_from_json(const json& j, const RingPtr& ring) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("ring") ||
      !j.contains("entries"))
    fail("parse-error", "matrix object missing fields");
  std::size_t rows = j.at("rows").get<std::size_t>();
  std::size_t cols = j.at("cols").get<std::size_t>();
  RingPtr mring = parse_ring(j.at("ring").get<std::string>());
  if (!mring->same(*ring)) fail("parse-error", "matrix ring differs from the certificate ring");
  const json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != rows * cols)
    fail("parse-error", "matrix entry count mismatch");
  Matrix m(ring, rows, cols);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t c = 0; c < cols; ++c)
      m.at(i, c) = ring->parse_elem(entries[idx++].get<std::string>());
  return m;
}

// canonical body, digest excluded
json certificate_body(const Certificate& c) {
  json j;
  j["format_version"] = c.format_version;
  j["ring"] = c.ring;
  j["algebra"] = {{"family", c.family}, {"size", c.size}};
  json prov;
  prov["tag"] = c.provenance.tag;
  json params = json::object();
  for (const auto& [k, v] : c.provenance.params) params[k] = v;
  prov["params"] = std::move(params);
  j["provenance"] = std::move(prov);
  json comps = json::array();
  for (const auto& comp : c.components) {
    json jc;
    jc["name"] = comp.name;
    json gens = json::array();
    for (const auto& g : comp.generators) gens.push_back(matrix_to_json(g));
    jc["generators"] = std::move(gens);
    comps.push_back(std::move(jc));
  }
  j["components"] = std::move(comps);
  return j;
}

}  // namespace

Certificate make_certificate(const Decomposition& d) {
  Certificate c;
  c.ring = d.algebra.ring->descriptor();
  c.family = family_name(d.algebra.family);
  c.size = d.algebra.n;
  c.provenance = d.provenance;
  std::vector<Matrix> basis = standard_basis(d.algebra);
  for (const auto& comp : d.components) {
    Certificate::Component cc;
    cc.name = comp.label;
    for (const auto& gen : comp.generators)
      cc.generators.push_back(from_coords(d.algebra, basis, gen));
    c.components.push_back(std::move(cc));
  }
  c.digest = sha256_hex(certificate_body(c).dump());
  return c;
}

std::string certificate_text(const Certificate& c) {
  json j = certificate_body(c);
  j["digest"] = c.digest;
  return j.dump(2) + "\n";
}

Certificate parse_certificate(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    fail("parse-error", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("parse-error", "certificate must be a JSON object");
  for (const char* key : {"format_version", "ring", "algebra", "provenance", "components",
                          "digest"})
    if (!j.contains(key)) fail("parse-error", std::string("missing field: ") + key);

  Certificate c;
  c.format_version = j.at("format_version").get<std::string>();
  if (c.format_version != "1") fail("parse-error", "unsupported format_version");
  c.ring = j.at("ring").get<std::string>();
  RingPtr ring = parse_ring(c.ring);
  const json& alg = j.at("algebra");
  if (!alg.contains("family") || !alg.contains("size"))
    fail("parse-error", "algebra needs family and size");
  c.family = alg.at("family").get<std::string>();
  if (!family_from_name(c.family)) fail("parse-error", "unknown algebra family: " + c.family);
  c.size = alg.at("size").get<std::size_t>();
  const json& prov = j.at("provenance");
  if (!prov.contains("tag") || !prov.contains("params"))
    fail("parse-error", "provenance needs tag and params");
  c.provenance.tag = prov.at("tag").get<std::string>();
  for (const auto& [k, v] : prov.at("params").items())
    c.provenance.params.emplace_back(k, v.get<std::string>());
  const json& comps = j.at("components");
  if (!comps.is_array() || comps.empty())
    fail("parse-error", "certificate needs at least one component");
  for (const auto& jc : comps) {
    if (!jc.contains("name") || !jc.contains("generators"))
      fail("parse-error", "component needs name and generators");
    Certificate::Component cc;
    cc.name = jc.at("name").get<std::string>();
    for (const auto& jg : jc.at("generators")) cc.generators.push_back(matrix_from_json(jg, ring));
    c.components.push_back(std::move(cc));
  }
  c.digest = j.at("digest").get<std::string>();
  if (c.digest != sha256_hex(certificate_body(c).dump()))
    fail("digest-mismatch", "certificate digest does not match the canonical body");
  return c;
}

Decomposition to_decomposition(const Certificate& c) {
  RingPtr ring = parse_ring(c.ring);
  AlgebraSpec spec(*family_from_name(c.family), c.size, ring);
  std::vector<Matrix> basis = standard_basis(spec);
  Decomposition d{spec, {}, c.provenance};
  for (const auto& comp : c.components) {
    Submodule s{spec, {}, comp.name};
    for (const auto& g : comp.generators) {
      if (g.rows() != spec.n || g.cols() != spec.n)
        fail("parse-error", "generator matrix has the wrong shape");
      auto coords = matrix_coords(spec, basis, g);
      if (!coords)
        fail("generator-not-in-algebra",
             "component " + comp.name + " has a generator outside " + c.family + "_" +
                 std::to_string(c.size));
      s.generators.push_back(std::move(*coords));
    }
    d.components.push_back(std::move(s));
  }
  return d;
}

}  // namespace odac
