#include "sb3/presentation.hpp"

#include "sb3/errors.hpp"

namespace sb3 {

namespace {

Relation rel(std::string label, std::string_view lhs, std::string_view rhs) {
  return {std::move(label), parse(lhs), parse(rhs)};
}

RelationSet classical() {
  // t2 = s1 s2 t1 s2^-1 s1^-1
  return {"classical_n3",
          {
              rel("(1) i=1", "s1 s1^-1", ""),
              rel("(1) i=2", "s2 s2^-1", ""),
              rel("(2) i=1", "s1 s2 s1", "s2 s1 s2"),
              rel("(3) i=1", "s1 s2 t1 s2^-1 s1^-1 s1 s2", "s1 s2 t1"),
              rel("(4) i=1", "s2 s1 s1 s2 t1 s2^-1 s1^-1", "t1 s2 s1"),
              rel("(5) i=1", "s1 t1", "t1 s1"),
              rel("(5) i=2", "s2 s1 s2 t1 s2^-1 s1^-1", "s1 s2 t1 s2^-1 s1^-1 s2"),
          }};
}

RelationSet reduced() {
  return {"reduced_n3",
          {
              rel("1a", "s1 s1^-1", ""),
              rel("1b", "s2 s2^-1", ""),
              rel("2", "s1 s2 s1", "s2 s1 s2"),
              rel("3", "t1 s2 s1 s2 s1 s2 s1", "s2 s1 s2 s1 s2 s1 t1"),
              rel("4", "s1 t1", "t1 s1"),
          }};
}

}  // namespace

RelationSet relation_set(std::string_view name) {
  if (name == "classical" || name == "classical_n3") return classical();
  if (name == "reduced" || name == "reduced_n3") return reduced();
  throw UsageError("unknown relation set '" + std::string(name) + "'");
}

RelationReport verify_relations(const RelationSet& set, const std::vector<Method>& methods) {
  RelationReport report{set.name, 0, {}};
  for (const auto& r : set.pairs) {
    for (Method m : methods) {
      ++report.checked;
      Verdict v = decide(m, r.lhs, r.rhs);
      if (!v.equal) report.failures.push_back({r.label, m, std::move(v.trace)});
    }
  }
  return report;
}

RelationReport verify_relations(std::string_view name, Method method) {
  return verify_relations(relation_set(name), {method});
}

}  // namespace sb3
