#include "chromaspec/serialization.hpp"

#include "chromaspec/errors.hpp"
#include "chromaspec/graph6.hpp"

namespace chromaspec {
namespace {

Json scalars(const std::vector<Scalar>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

Json maybe_interval(const std::optional<Interval>& i) { return i ? Json(i->to_string()) : Json(nullptr); }

}  // namespace

Json to_json(const Scalar& s) { return s.to_string(); }

Json to_json(const Vec2& v) { return Json::array({v.x.to_string(), v.y.to_string()}); }

Json to_json(const Mat2& m) {
  return Json::array({Json::array({m.a.to_string(), m.b.to_string()}), Json::array({m.c.to_string(), m.d.to_string()})});
}

Json to_json(const Witness& w) {
  return {{"graph6", graph6_encode(w.graph)}, {"edge", Json::array({w.edge.a, w.edge.b})}};
}

Witness witness_from_json(const Json& j) {
  try {
    Witness w{graph6_decode(j.at("graph6").get<std::string>()),
              {j.at("edge").at(0).get<int>(), j.at("edge").at(1).get<int>()}};
    w.validate();
    return w;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("witness: ") + e.what());
  }
}

Json to_json(const Regime& r) {
  Json out{{"kind", to_string(r.kind)},
           {"q", r.q.to_string()},
           {"mode", r.eval.mode == Mode::Feasible ? "feasible" : "attainable"},
           {"parameter", r.eval.param.to_string()},
           {"seed", to_string(r.seed)},
           {"K", {{"name", r.k_name}, {"word", word_to_string(r.k_block)}}},
           {"L", {{"name", r.l_name}, {"word", word_to_string(r.l_block)}}},
           {"I", r.i_target.to_string()},
           {"J", r.j_target.to_string()},
           {"domain", maybe_interval(r.domain)}};
  if (r.m > 0) out["m"] = r.m;
  return out;
}

Json to_json(const Certificate& c) {
  Json checks = Json::array();
  for (const auto& k : c.checks) checks.push_back({{"name", k.name}, {"passed", k.passed}, {"detail", k.detail}});
  Json out{{"regime", to_json(c.regime)},
           {"base_ratio", c.base_ratio.to_string()},
           {"images",
            {{"K(I)", maybe_interval(c.k_image_i)},
             {"K(J)", maybe_interval(c.k_image_j)},
             {"L(I)", maybe_interval(c.l_image_i)},
             {"L(J)", maybe_interval(c.l_image_j)}}},
           {"checks", checks},
           {"certified", c.certified}};
  if (!c.certified) out["failure"] = c.failure();
  return out;
}

Json to_json(const Spectrum& s) {
  return {{"q", s.q.to_string()},
          {"n", s.n},
          {"class", to_string(s.cls)},
          {"count", s.values.size()},
          {"values", scalars(s.values)}};
}

std::string spectrum_csv_row(const Spectrum& s) {
  return s.q.to_string() + "," + std::to_string(s.n) + "," + to_string(s.cls) + "," + std::to_string(s.values.size());
}

Json to_json(const ConstructiveReport& r, bool include_values) {
  Json out{{"q", r.q.to_string()},
           {"n", r.n},
           {"regime", to_json(r.regime)},
           {"word_count", r.plan.words.size()},
           {"expected_word_count", r.plan.expected_count.get_str()},
           {"blocks", r.plan.blocks},
           {"padding", r.plan.padding},
           {"ratios_distinct", true},
           {"value_count", r.values.size()},
           {"bound", "sqrt(" + std::to_string(r.plan.words.size()) + ")"},
           {"counts_match", r.counts_match},
           {"bound_holds", r.sqrt_bound_holds}};
  if (include_values) out["values"] = scalars(r.values);
  if (r.audited) {
    out["audit"] = {{"passed", r.audit_passed}, {"failures", r.audit_failures}};
  }
  out["passed"] = r.counts_match && r.sqrt_bound_holds && (!r.audited || r.audit_passed);
  return out;
}

Json to_json(const LowerBoundAudit& a) {
  Json out{{"q", a.q.to_string()}, {"n", a.n}, {"regime", a.regime}, {"applicable", a.applicable}};
  if (a.applicable) {
    out["words"] = a.words;
    out["constructive"] = a.constructive;
    out["bound"] = "sqrt(" + std::to_string(a.words) + ")";
    out["constructive_meets_bound"] = a.constructive_meets_bound;
    out["exhaustive"] = a.exhaustive ? Json(*a.exhaustive) : Json(nullptr);
    if (a.exhaustive_meets_constructive) out["exhaustive_meets_constructive"] = *a.exhaustive_meets_constructive;
    if (a.constructive_subset) out["constructive_subset"] = *a.constructive_subset;
    if (a.join_shift) {
      const auto& js = *a.join_shift;
      out["join_shift"] = {{"m", js.m},
                           {"words", js.words},
                           {"constructive", js.constructive},
                           {"bound", "2^(" + std::to_string(a.n - js.m - 2) + "/2)"},
                           {"exhaustive", js.exhaustive},
                           {"passed", js.passed}};
    }
  }
  out["passed"] = a.passed;
  return out;
}

Json to_json(const std::vector<LemmaResult>& results) {
  Json lemmas = Json::array();
  bool all = true;
  for (const auto& r : results) {
    Json entry{{"name", r.name}, {"instances", r.instances}, {"failures", r.failures}, {"passed", r.passed()}};
    if (!r.passed()) entry["first_failure"] = r.first_failure;
    lemmas.push_back(entry);
    all = all && r.passed();
  }
  return {{"lemmas", lemmas}, {"passed", all}};
}

}  // namespace chromaspec
