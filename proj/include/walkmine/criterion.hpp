#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "walkmine/color_program.hpp"
#include "walkmine/feature.hpp"
#include "walkmine/graph.hpp"

namespace walkmine {

enum class CompareOp { lt, le, eq, ge, gt };

std::string_view to_string(CompareOp op);
/// Accepts "<", "<=", "=", ">=", ">" (and "≤", "≥").
CompareOp parse_compare_op(std::string_view text);

/// (dimension, operator, threshold). A Missing threshold is only valid with
/// '=' and then acts as the presence test.
struct Atom {
  std::size_t dim = 0;
  CompareOp op = CompareOp::eq;
  FeatureValue threshold;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Recursive predicate over feature vectors: an atom, or a conjunction (all)
/// or disjunction (any) of a nonempty list of criteria.
class Criterion {
 public:
  enum class Kind { atom, all, any };

  Criterion() = default;
  static Criterion atom(std::size_t dim, CompareOp op, FeatureValue threshold);
  static Criterion all(std::vector<Criterion> parts);
  static Criterion any(std::vector<Criterion> parts);

  Kind kind() const { return kind_; }
  const Atom& as_atom() const { return atom_; }
  const std::vector<Criterion>& parts() const { return parts_; }

  friend bool operator==(const Criterion&, const Criterion&) = default;

 private:
  Kind kind_ = Kind::atom;
  Atom atom_;
  std::vector<Criterion> parts_;
};

using TosetProgram = std::vector<Criterion>;

/// Throws InputError if the criterion references a dimension outside the
/// schema, uses an order operator on a categorical dimension or with a
/// Missing threshold, carries an out-of-domain threshold, or has an empty
/// all/any list.
void validate(const FeatureSchema& schema, const Criterion& c);

/// Missing fails every order comparison and matches only '= Missing'.
bool satisfies(const FeatureSchema& schema, const FeatureVector& x, const Criterion& c);
VertexSet select_by_criterion(const DirectedGraph& g, const VertexSet& a, const Criterion& c);

EndpointTrace simulate_stp(const DirectedGraph& g, const VertexSet& s, const TosetProgram& p);
Classification classify_stp(const DirectedGraph& g, const VertexSet& s, const VertexSet& t, const TosetProgram& p);

/// Infix rendering, e.g. "(color = red) & (x <= 2)".
std::string describe(const FeatureSchema& schema, const Criterion& c);
std::string describe(const FeatureSchema& schema, const TosetProgram& p);

/// The B and E inputs share a feature vector; indices name one such pair.
struct Inseparable {
  std::size_t b_index = 0;
  std::size_t e_index = 0;
};

using CriterionResult = std::variant<Criterion, Inseparable>;

/// Builds a criterion accepted by every vector of `b` and by no vector of
/// `e`; vectors only in `m` are unconstrained. Grows an unpruned binary
/// decision tree (Gini impurity over B-vs-E labels; ties go to the lowest
/// dimension, then the presence split, then the smallest threshold) until
/// every leaf is pure, and returns the disjunction of root-to-B-leaf paths.
///
/// Throws std::invalid_argument when `b` is empty, or when `e` is empty and
/// the schema has no dimension to build a tautology from.
CriterionResult compute_criterion(const FeatureSchema& schema, const std::vector<FeatureVector>& b,
                                  const std::vector<FeatureVector>& m, const std::vector<FeatureVector>& e);

}  // namespace walkmine
