#include "unirot/json_io.hpp"

#include <cstdint>
#include <limits>

namespace unirot {

using nlohmann::json;

namespace {

i64 int_from_json(const json& j, const char* what) {
  if (j.is_number_unsigned() &&
      j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<i64>::max()))
    throw ValidationError(std::string(what) + " exceeds 64-bit signed range");
  if (!j.is_number_integer())
    throw ValidationError(std::string(what) + " must be an integer, got " + j.dump());
  return j.get<i64>();
}

Vec2 vec2_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2)
    throw ValidationError(std::string(what) + " must be a 2-element array, got " + j.dump());
  return {int_from_json(j[0], what), int_from_json(j[1], what)};
}

std::vector<Vec2> vectors_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vectors") || !j["vectors"].is_array())
    throw ValidationError("expected an object with a \"vectors\" array");
  std::vector<Vec2> out;
  out.reserve(j["vectors"].size());
  for (const json& v : j["vectors"]) out.push_back(vec2_from_json(v, "vector entry"));
  return out;
}

json vec2_to_json(Vec2 v) { return json::array({v.x, v.y}); }

json vectors_to_json(const std::vector<Vec2>& vecs) {
  json arr = json::array();
  for (const Vec2& v : vecs) arr.push_back(vec2_to_json(v));
  return json{{"vectors", std::move(arr)}};
}

}  // namespace

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ValidationError("input is not valid JSON");
  return j;
}

json to_json(const UnimodularCycle& cycle) { return vectors_to_json(cycle.vectors()); }

json to_json(const UnimodularPath& path) { return vectors_to_json(path.vectors()); }

UnimodularCycle cycle_from_json(const json& j) {
  return UnimodularCycle::validate(vectors_from_json(j));
}

UnimodularPath path_from_json(const json& j) {
  return UnimodularPath::validate(vectors_from_json(j));
}

json to_json(const CurvatureData& data) {
  return json{{"u1", vec2_to_json(data.u1)},
              {"u2", vec2_to_json(data.u2)},
              {"nus", data.nus},
              {"mus", data.mus}};
}

CurvatureData curvature_from_json(const json& j) {
  if (!j.is_object() || !j.contains("u1") || !j.contains("u2") || !j.contains("nus") ||
      !j.contains("mus"))
    throw ValidationError("curvature data needs fields u1, u2, nus, mus");
  CurvatureData data;
  data.u1 = vec2_from_json(j["u1"], "u1");
  data.u2 = vec2_from_json(j["u2"], "u2");
  if (!j["nus"].is_array() || !j["mus"].is_array())
    throw ValidationError("nus and mus must be arrays");
  for (const json& s : j["nus"])
    data.nus.push_back(static_cast<int>(int_from_json(s, "nu entry")));
  for (const json& m : j["mus"]) data.mus.push_back(int_from_json(m, "mu entry"));
  return data;
}

json to_json(const ReductionTrace& trace) {
  json steps = json::array();
  for (const ReductionStep& step : trace.steps) {
    json detached = json::array();
    for (const Vec2& v : step.detached) detached.push_back(vec2_to_json(v));
    json s{{"kind", to_string(step.kind)},
           {"index", step.index},
           {"detached", std::move(detached)},
           {"contribution_twelfths", step.contribution.num}};
    if (step.kind == StepKind::SplitAtRepeat) s["index2"] = step.index2;
    steps.push_back(std::move(s));
  }
  return json{{"steps", std::move(steps)}, {"total_twelfths", trace.total.num}};
}

json to_json(const Triangulation& t) {
  json vertices = json::array();
  for (const auto& v : t.vertices) vertices.push_back(json{{"id", v.id}, {"image", v.image}});
  return json{{"dimension", t.dimension}, {"vertices", std::move(vertices)},
              {"facets", t.facets}};
}

Triangulation triangulation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dimension") || !j.contains("vertices") ||
      !j.contains("facets"))
    throw ValidationError("triangulation needs fields dimension, vertices, facets");
  Triangulation t;
  t.dimension = static_cast<int>(int_from_json(j["dimension"], "dimension"));
  if (!j["vertices"].is_array() || !j["facets"].is_array())
    throw ValidationError("vertices and facets must be arrays");
  for (const json& v : j["vertices"]) {
    if (!v.is_object() || !v.contains("id") || !v.contains("image") || !v["image"].is_array())
      throw ValidationError("each vertex needs an id and an image array");
    Triangulation::Vertex vertex;
    vertex.id = int_from_json(v["id"], "vertex id");
    for (const json& c : v["image"]) vertex.image.push_back(int_from_json(c, "image entry"));
    t.vertices.push_back(std::move(vertex));
  }
  for (const json& f : j["facets"]) {
    if (!f.is_array()) throw ValidationError("each facet must be an array of vertex ids");
    std::vector<std::int64_t> facet;
    for (const json& id : f) facet.push_back(int_from_json(id, "facet vertex id"));
    t.facets.push_back(std::move(facet));
  }
  return t;
}

}  // namespace unirot
