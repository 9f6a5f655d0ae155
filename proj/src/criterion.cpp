#include "walkmine/criterion.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "walkmine/error.hpp"

namespace walkmine {

std::string_view to_string(CompareOp op) {
  switch (op) {
    case CompareOp::lt:
      return "<";
    case CompareOp::le:
      return "<=";
    case CompareOp::eq:
      return "=";
    case CompareOp::ge:
      return ">=";
    case CompareOp::gt:
      return ">";
  }
  return "?";
}

CompareOp parse_compare_op(std::string_view text) {
  if (text == "<") return CompareOp::lt;
  if (text == "<=" || text == "≤") return CompareOp::le;
  if (text == "=" || text == "==") return CompareOp::eq;
  if (text == ">=" || text == "≥") return CompareOp::ge;
  if (text == ">") return CompareOp::gt;
  throw InputError("unknown comparison operator '" + std::string(text) + "'");
}

Criterion Criterion::atom(std::size_t dim, CompareOp op, FeatureValue threshold) {
  Criterion c;
  c.kind_ = Kind::atom;
  c.atom_ = Atom{dim, op, threshold};
  return c;
}

Criterion Criterion::all(std::vector<Criterion> parts) {
  Criterion c;
  c.kind_ = Kind::all;
  c.parts_ = std::move(parts);
  return c;
}

Criterion Criterion::any(std::vector<Criterion> parts) {
  Criterion c;
  c.kind_ = Kind::any;
  c.parts_ = std::move(parts);
  return c;
}

void validate(const FeatureSchema& schema, const Criterion& c) {
  if (c.kind() != Criterion::Kind::atom) {
    if (c.parts().empty()) throw InputError("empty all/any list in criterion");
    for (const auto& part : c.parts()) validate(schema, part);
    return;
  }
  const auto& a = c.as_atom();
  if (a.dim >= schema.size()) throw InputError("criterion references unknown dimension " + std::to_string(a.dim));
  const auto& dim = schema.dimension(a.dim);
  if (a.threshold.is_missing()) {
    if (a.op != CompareOp::eq) throw InputError("order comparison against null on '" + dim.name + "'");
    return;
  }
  if (dim.kind == FeatureKind::categorical && a.op != CompareOp::eq)
    throw InputError("order comparison on categorical dimension '" + dim.name + "'");
  if (!schema.accepts(a.dim, a.threshold)) throw InputError("threshold outside the domain of '" + dim.name + "'");
}

bool satisfies(const FeatureSchema& schema, const FeatureVector& x, const Criterion& c) {
  switch (c.kind()) {
    case Criterion::Kind::all:
      return std::all_of(c.parts().begin(), c.parts().end(),
                         [&](const Criterion& part) { return satisfies(schema, x, part); });
    case Criterion::Kind::any:
      return std::any_of(c.parts().begin(), c.parts().end(),
                         [&](const Criterion& part) { return satisfies(schema, x, part); });
    case Criterion::Kind::atom:
      break;
  }
  const auto& a = c.as_atom();
  if (a.dim >= x.size()) throw std::out_of_range("criterion dimension outside the feature vector");
  const auto& value = x[a.dim];
  if (a.threshold.is_missing()) return a.op == CompareOp::eq && value.is_missing();
  if (value.is_missing()) return false;
  if (value.is_category() || a.threshold.is_category()) return a.op == CompareOp::eq && value == a.threshold;
  const double lhs = value.as_number();
  const double rhs = a.threshold.as_number();
  switch (a.op) {
    case CompareOp::lt:
      return lhs < rhs;
    case CompareOp::le:
      return lhs <= rhs;
    case CompareOp::eq:
      return lhs == rhs;
    case CompareOp::ge:
      return lhs >= rhs;
    case CompareOp::gt:
      return lhs > rhs;
  }
  return false;
}

VertexSet select_by_criterion(const DirectedGraph& g, const VertexSet& a, const Criterion& c) {
  VertexSet out = g.empty_set();
  for (auto v : a)
    if (satisfies(g.schema(), g.features(v), c)) out.insert(v);
  return out;
}

EndpointTrace simulate_stp(const DirectedGraph& g, const VertexSet& s, const TosetProgram& p) {
  if (s.empty()) throw std::invalid_argument("simulate_stp: S must be nonempty");
  EndpointTrace trace;
  trace.reserve(p.size() + 1);
  trace.push_back(s);
  for (const auto& c : p) trace.push_back(select_by_criterion(g, out_neighbors(g, trace.back()), c));
  return trace;
}

Classification classify_stp(const DirectedGraph& g, const VertexSet& s, const VertexSet& t, const TosetProgram& p) {
  const auto trace = simulate_stp(g, s, p);
  return classify_trace(trace, t, [&](VertexId v, std::size_t i) {
    for (auto w : g.successors(v))
      if (satisfies(g.schema(), g.features(w), p[i])) return true;
    return false;
  });
}

std::string describe(const FeatureSchema& schema, const Criterion& c) {
  if (c.kind() == Criterion::Kind::atom) {
    const auto& a = c.as_atom();
    return "(" + schema.dimension(a.dim).name + " " + std::string(to_string(a.op)) + " " +
           schema.format(a.dim, a.threshold) + ")";
  }
  const char* sep = c.kind() == Criterion::Kind::all ? " & " : " | ";
  std::string out = "[";
  for (std::size_t i = 0; i < c.parts().size(); ++i) {
    if (i) out += sep;
    out += describe(schema, c.parts()[i]);
  }
  return out + "]";
}

std::string describe(const FeatureSchema& schema, const TosetProgram& p) {
  if (p.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += " · ";
    out += describe(schema, p[i]);
  }
  return out;
}

namespace {

struct Point {
  const FeatureVector* x;
  bool in_b;
};

enum class SplitKind { presence, threshold, category };

struct Split {
  std::size_t dim = 0;
  SplitKind kind = SplitKind::presence;
  FeatureValue value;

  bool goes_left(const FeatureVector& x) const {
    const auto& v = x[dim];
    switch (kind) {
      case SplitKind::presence:
        return v.is_missing();
      case SplitKind::threshold:
        return !v.is_missing() && v.as_number() <= value.as_number();
      case SplitKind::category:
        return v == value;
    }
    return false;
  }
};

double gini(std::size_t b, std::size_t e) {
  const double n = static_cast<double>(b + e);
  if (n == 0) return 0;
  const double pb = b / n;
  const double pe = e / n;
  return 1.0 - pb * pb - pe * pe;
}

class TreeBuilder {
 public:
  explicit TreeBuilder(const FeatureSchema& schema) : schema_(schema) {}

  /// Appends one conjunction per B-pure leaf below the node holding `points`.
  void grow(const std::vector<Point>& points, std::vector<Criterion>& path, std::vector<Criterion>& leaves) {
    const auto b_count = static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [](const Point& p) {
      return p.in_b;
    }));
    if (b_count == 0) return;
    if (b_count == points.size()) {
      leaves.push_back(conjunction(path));
      return;
    }
    const auto split = best_split(points);
    std::vector<Point> left;
    std::vector<Point> right;
    for (const auto& p : points) (split.goes_left(*p.x) ? left : right).push_back(p);

    path.push_back(left_condition(split));
    grow(left, path, leaves);
    path.back() = right_condition(split);
    grow(right, path, leaves);
    path.pop_back();
  }

  Criterion tautology() const {
    if (schema_.size() == 0) throw std::invalid_argument("compute_criterion: schema has no dimensions");
    const auto& dim = schema_.dimension(0);
    std::vector<Criterion> parts;
    if (dim.kind == FeatureKind::ordered) {
      parts.push_back(Criterion::atom(0, CompareOp::le, FeatureValue::number(0)));
      parts.push_back(Criterion::atom(0, CompareOp::gt, FeatureValue::number(0)));
    } else {
      for (CategoryId id = 0; id < dim.categories.size(); ++id)
        parts.push_back(Criterion::atom(0, CompareOp::eq, FeatureValue::category(id)));
    }
    parts.push_back(Criterion::atom(0, CompareOp::eq, FeatureValue::missing()));
    return simplify_any(std::move(parts));
  }

 private:
  static Criterion simplify_any(std::vector<Criterion> parts) {
    if (parts.size() == 1) return std::move(parts.front());
    return Criterion::any(std::move(parts));
  }

  static Criterion conjunction(const std::vector<Criterion>& path) {
    if (path.size() == 1) return path.front();
    return Criterion::all(path);
  }

  std::vector<Split> candidates(const std::vector<Point>& points, std::size_t dim) const {
    std::vector<Split> out;
    bool has_missing = false;
    std::vector<FeatureValue> present;
    for (const auto& p : points) {
      const auto& v = (*p.x)[dim];
      if (v.is_missing()) {
        has_missing = true;
      } else {
        present.push_back(v);
      }
    }
    std::sort(present.begin(), present.end());
    present.erase(std::unique(present.begin(), present.end()), present.end());
    if (has_missing && !present.empty()) out.push_back(Split{dim, SplitKind::presence, FeatureValue::missing()});
    if (schema_.dimension(dim).kind == FeatureKind::ordered) {
      for (std::size_t i = 0; i + 1 < present.size(); ++i) out.push_back(Split{dim, SplitKind::threshold, present[i]});
    } else if (present.size() > 1 || (present.size() == 1 && has_missing)) {
      for (const auto& v : present) out.push_back(Split{dim, SplitKind::category, v});
    }
    return out;
  }

  Split best_split(const std::vector<Point>& points) const {
    std::optional<Split> best;
    double best_impurity = std::numeric_limits<double>::infinity();
    const double n = static_cast<double>(points.size());
    for (std::size_t dim = 0; dim < schema_.size(); ++dim) {
      for (const auto& split : candidates(points, dim)) {
        std::size_t lb = 0, le = 0, rb = 0, re = 0;
        for (const auto& p : points) {
          if (split.goes_left(*p.x)) {
            ++(p.in_b ? lb : le);
          } else {
            ++(p.in_b ? rb : re);
          }
        }
        const double impurity = ((lb + le) * gini(lb, le) + (rb + re) * gini(rb, re)) / n;
        if (impurity < best_impurity - 1e-12) {
          best_impurity = impurity;
          best = split;
        }
      }
    }
    // Callers only split impure nodes of collision-free inputs, so some pair
    // of points differs and a candidate always exists.
    if (!best) throw std::logic_error("compute_criterion: no split separates an impure node");
    return *best;
  }

  Criterion left_condition(const Split& s) const {
    switch (s.kind) {
      case SplitKind::presence:
        return Criterion::atom(s.dim, CompareOp::eq, FeatureValue::missing());
      case SplitKind::threshold:
        return Criterion::atom(s.dim, CompareOp::le, s.value);
      case SplitKind::category:
        return Criterion::atom(s.dim, CompareOp::eq, s.value);
    }
    return {};
  }

  Criterion right_condition(const Split& s) const {
    std::vector<Criterion> parts;
    const auto& dim = schema_.dimension(s.dim);
    switch (s.kind) {
      case SplitKind::presence:
        if (dim.kind == FeatureKind::ordered) {
          parts.push_back(Criterion::atom(s.dim, CompareOp::le, FeatureValue::number(0)));
          parts.push_back(Criterion::atom(s.dim, CompareOp::gt, FeatureValue::number(0)));
        } else {
          for (CategoryId id = 0; id < dim.categories.size(); ++id)
            parts.push_back(Criterion::atom(s.dim, CompareOp::eq, FeatureValue::category(id)));
        }
        break;
      case SplitKind::threshold:
        parts.push_back(Criterion::atom(s.dim, CompareOp::gt, s.value));
        parts.push_back(Criterion::atom(s.dim, CompareOp::eq, FeatureValue::missing()));
        break;
      case SplitKind::category:
        for (CategoryId id = 0; id < dim.categories.size(); ++id)
          if (FeatureValue::category(id) != s.value)
            parts.push_back(Criterion::atom(s.dim, CompareOp::eq, FeatureValue::category(id)));
        parts.push_back(Criterion::atom(s.dim, CompareOp::eq, FeatureValue::missing()));
        break;
    }
    return simplify_any(std::move(parts));
  }

  const FeatureSchema& schema_;
};

}  // namespace

CriterionResult compute_criterion(const FeatureSchema& schema, const std::vector<FeatureVector>& b,
                                  const std::vector<FeatureVector>& /*m*/, const std::vector<FeatureVector>& e) {
  if (b.empty()) throw std::invalid_argument("compute_criterion: B must be nonempty");

  std::unordered_map<FeatureVector, std::size_t, FeatureVectorHash> e_index;
  for (std::size_t j = 0; j < e.size(); ++j) e_index.emplace(e[j], j);
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto it = e_index.find(b[i]);
    if (it != e_index.end()) return Inseparable{i, it->second};
  }

  TreeBuilder builder(schema);
  if (e.empty()) return builder.tautology();

  std::vector<Point> points;
  points.reserve(b.size() + e.size());
  for (const auto& x : b) points.push_back({&x, true});
  for (const auto& x : e) points.push_back({&x, false});

  std::vector<Criterion> path;
  std::vector<Criterion> leaves;
  builder.grow(points, path, leaves);
  if (leaves.size() == 1) return std::move(leaves.front());
  return Criterion::any(std::move(leaves));
}

}  // namespace walkmine
