#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace walkmine {

enum class FeatureKind { categorical, ordered };

using CategoryId = std::uint32_t;

/// One slot of a feature vector: an interned category, a number, or Missing.
///
/// Values order as Missing < categories < numbers; within a kind by id or
/// value. Only the within-kind order carries meaning.
class FeatureValue {
 public:
  FeatureValue() = default;

  static FeatureValue missing() { return {}; }
  static FeatureValue category(CategoryId id) {
    FeatureValue v;
    v.value_ = id;
    return v;
  }
  static FeatureValue number(double x) {
    FeatureValue v;
    v.value_ = x;
    return v;
  }

  bool is_missing() const { return std::holds_alternative<std::monostate>(value_); }
  bool is_category() const { return std::holds_alternative<CategoryId>(value_); }
  bool is_number() const { return std::holds_alternative<double>(value_); }

  CategoryId as_category() const { return std::get<CategoryId>(value_); }
  double as_number() const { return std::get<double>(value_); }

  friend bool operator==(const FeatureValue&, const FeatureValue&) = default;
  friend std::strong_ordering operator<=>(const FeatureValue& a, const FeatureValue& b);

  std::size_t hash() const;

 private:
  std::variant<std::monostate, CategoryId, double> value_;
};

using FeatureVector = std::vector<FeatureValue>;

struct FeatureVectorHash {
  std::size_t operator()(const FeatureVector& v) const;
};

struct Dimension {
  std::string name;
  FeatureKind kind = FeatureKind::categorical;
  std::vector<std::string> categories;  // interned values, categorical only
};

/// Ordered list of feature dimensions with per-dimension category tables.
class FeatureSchema {
 public:
  /// Throws InputError on a duplicate name.
  std::size_t add_dimension(std::string name, FeatureKind kind);

  std::size_t size() const { return dims_.size(); }
  const Dimension& dimension(std::size_t i) const { return dims_.at(i); }
  const std::vector<Dimension>& dimensions() const { return dims_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Like find() but throws InputError for unknown names.
  std::size_t index_of(std::string_view name) const;

  CategoryId intern(std::size_t dim, std::string_view value);
  std::optional<CategoryId> find_category(std::size_t dim, std::string_view value) const;
  const std::string& category_name(std::size_t dim, CategoryId id) const;
  std::size_t category_count(std::size_t dim) const { return dims_.at(dim).categories.size(); }

  /// True if `value` is Missing or lies in the dimension's domain.
  bool accepts(std::size_t dim, const FeatureValue& value) const;
  bool conforms(const FeatureVector& features) const;

  /// Human-readable rendering ("red", "3.5", "null").
  std::string format(std::size_t dim, const FeatureValue& value) const;

  /// Same dimension names and kinds; category tables are not compared.
  friend bool operator==(const FeatureSchema& a, const FeatureSchema& b);

 private:
  std::vector<Dimension> dims_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
  std::vector<std::map<std::string, CategoryId, std::less<>>> category_index_;
};

std::string_view to_string(FeatureKind kind);

}  // namespace walkmine
