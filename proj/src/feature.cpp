#include "walkmine/feature.hpp"

#include <charconv>

#include "walkmine/error.hpp"

namespace walkmine {

std::strong_ordering operator<=>(const FeatureValue& a, const FeatureValue& b) {
  if (a.value_.index() != b.value_.index()) return a.value_.index() <=> b.value_.index();
  if (a.is_category()) return a.as_category() <=> b.as_category();
  if (a.is_number()) {
    const double x = a.as_number();
    const double y = b.as_number();
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

std::size_t FeatureValue::hash() const {
  switch (value_.index()) {
    case 0:
      return 0x9e3779b97f4a7c15ULL;
    case 1:
      return std::hash<CategoryId>{}(as_category()) * 31 + 1;
    default:
      return std::hash<double>{}(as_number()) * 31 + 2;
  }
}

std::size_t FeatureVectorHash::operator()(const FeatureVector& v) const {
  std::size_t h = v.size();
  for (const auto& x : v) h = h * 1000003 ^ x.hash();
  return h;
}

std::size_t FeatureSchema::add_dimension(std::string name, FeatureKind kind) {
  if (by_name_.contains(name)) throw InputError("duplicate feature dimension '" + name + "'");
  by_name_.emplace(name, dims_.size());
  dims_.push_back(Dimension{std::move(name), kind, {}});
  category_index_.emplace_back();
  return dims_.size() - 1;
}

std::optional<std::size_t> FeatureSchema::find(std::string_view name) const {
  if (auto it = by_name_.find(name); it != by_name_.end()) return it->second;
  return std::nullopt;
}

std::size_t FeatureSchema::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw InputError("unknown feature '" + std::string(name) + "'");
}

CategoryId FeatureSchema::intern(std::size_t dim, std::string_view value) {
  auto& index = category_index_.at(dim);
  if (auto it = index.find(value); it != index.end()) return it->second;
  auto id = static_cast<CategoryId>(dims_[dim].categories.size());
  dims_[dim].categories.emplace_back(value);
  index.emplace(std::string(value), id);
  return id;
}

std::optional<CategoryId> FeatureSchema::find_category(std::size_t dim, std::string_view value) const {
  const auto& index = category_index_.at(dim);
  if (auto it = index.find(value); it != index.end()) return it->second;
  return std::nullopt;
}

const std::string& FeatureSchema::category_name(std::size_t dim, CategoryId id) const {
  return dims_.at(dim).categories.at(id);
}

bool FeatureSchema::accepts(std::size_t dim, const FeatureValue& value) const {
  if (value.is_missing()) return true;
  const auto& d = dims_.at(dim);
  if (d.kind == FeatureKind::ordered) return value.is_number();
  return value.is_category() && value.as_category() < d.categories.size();
}

bool FeatureSchema::conforms(const FeatureVector& features) const {
  if (features.size() != dims_.size()) return false;
  for (std::size_t i = 0; i < dims_.size(); ++i)
    if (!accepts(i, features[i])) return false;
  return true;
}

std::string FeatureSchema::format(std::size_t dim, const FeatureValue& value) const {
  if (value.is_missing()) return "null";
  if (value.is_category()) return category_name(dim, value.as_category());
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value.as_number());
  return std::string(buf, end);
}

bool operator==(const FeatureSchema& a, const FeatureSchema& b) {
  if (a.dims_.size() != b.dims_.size()) return false;
  for (std::size_t i = 0; i < a.dims_.size(); ++i)
    if (a.dims_[i].name != b.dims_[i].name || a.dims_[i].kind != b.dims_[i].kind) return false;
  return true;
}

std::string_view to_string(FeatureKind kind) {
  return kind == FeatureKind::ordered ? "ordered" : "categorical";
}

}  // namespace walkmine
