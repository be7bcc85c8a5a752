#pragma once

// Defining relations of SB3 as pairs of words over s1, s2, t1.
//
// classical_n3: the Baez-Birman presentation at three strands, with every
//   t2 replaced by s1 s2 t1 s2^-1 s1^-1. The far-commutation relations are
//   vacuous at n = 3.
// reduced_n3:  the four-relation presentation on s1, s2, t1.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sb3/solver.hpp"
#include "sb3/words.hpp"

namespace sb3 {

struct Relation {
  std::string label;
  Word lhs;
  Word rhs;
};

struct RelationSet {
  std::string name;
  std::vector<Relation> pairs;
};

/// "classical" / "classical_n3" or "reduced" / "reduced_n3"; UsageError otherwise.
RelationSet relation_set(std::string_view name);

struct RelationFailure {
  std::string label;
  Method method;
  std::vector<std::string> trace;
};

struct RelationReport {
  std::string set_name;
  std::size_t checked = 0;
  std::vector<RelationFailure> failures;
  bool passed() const { return failures.empty(); }
};

RelationReport verify_relations(const RelationSet& set, const std::vector<Method>& methods);
RelationReport verify_relations(std::string_view name, Method method);

}  // namespace sb3
