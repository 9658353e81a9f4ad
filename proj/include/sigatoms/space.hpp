#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace sigatoms {

inline constexpr std::size_t kDefaultSpaceLimit = 10'000;

/// A labeled finite sample space. Elements are addressed by index; labels
/// are for presentation only.
class FiniteSpace {
 public:
  /// Throws InvalidSpace on empty or duplicate labels, GuardExceeded when
  /// the label count exceeds `limit`.
  static std::shared_ptr<const FiniteSpace> make(
      std::vector<std::string> labels, std::size_t limit = kDefaultSpaceLimit);

  /// Space of the given size labeled "0", "1", ...
  static std::shared_ptr<const FiniteSpace> make_indexed(
      std::size_t size, std::size_t limit = kDefaultSpaceLimit);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t index) const { return labels_.at(index); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  bool operator==(const FiniteSpace& other) const { return labels_ == other.labels_; }

 private:
  explicit FiniteSpace(std::vector<std::string> labels);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

using SpacePtr = std::shared_ptr<const FiniteSpace>;

/// True when both pointers denote the same space (by identity or labels).
bool same_space(const SpacePtr& a, const SpacePtr& b);
void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* what);

/// Subset of a FiniteSpace as a packed bit-vector.
class SubsetMask {
 public:
  explicit SubsetMask(SpacePtr space);  // empty set

  static SubsetMask empty(SpacePtr space) { return SubsetMask(std::move(space)); }
  static SubsetMask full(SpacePtr space);
  static SubsetMask of_indices(SpacePtr space, const std::vector<std::size_t>& indices);
  /// Throws InvalidArgument naming the first unknown label.
  static SubsetMask of_labels(SpacePtr space, const std::vector<std::string>& labels);

  const SpacePtr& space() const { return space_; }
  std::size_t universe_size() const { return space_->size(); }

  bool contains(std::size_t index) const;
  void insert(std::size_t index);
  void erase(std::size_t index);

  std::size_t count() const;
  bool is_empty() const;
  bool is_full() const;
  std::optional<std::size_t> first() const;
  std::vector<std::size_t> members() const;

  SubsetMask complement() const;
  SubsetMask& operator|=(const SubsetMask& rhs);
  SubsetMask& operator&=(const SubsetMask& rhs);
  SubsetMask& operator-=(const SubsetMask& rhs);
  friend SubsetMask operator|(SubsetMask a, const SubsetMask& b) { return a |= b; }
  friend SubsetMask operator&(SubsetMask a, const SubsetMask& b) { return a &= b; }
  friend SubsetMask operator-(SubsetMask a, const SubsetMask& b) { return a -= b; }

  bool is_subset_of(const SubsetMask& other) const;
  bool intersects(const SubsetMask& other) const;

  bool operator==(const SubsetMask& other) const {
    return words_ == other.words_ && same_space(space_, other.space_);
  }
  /// Orders by word content; only meaningful within one space.
  bool operator<(const SubsetMask& other) const { return words_ < other.words_; }

  std::size_t hash() const;

  /// "{a,b,c}" using the space's labels.
  std::string to_string() const;
  std::vector<std::string> member_labels() const;

 private:
  void check(const SubsetMask& other) const;
  void clear_padding();

  SpacePtr space_;
  std::vector<std::uint64_t> words_;
};

struct SubsetMaskHash {
  std::size_t operator()(const SubsetMask& m) const { return m.hash(); }
};

/// Finite presentation of a sigma-field by generating sets.
class GeneratorFamily {
 public:
  explicit GeneratorFamily(SpacePtr space, std::vector<SubsetMask> generators = {});

  const SpacePtr& space() const { return space_; }
  const std::vector<SubsetMask>& generators() const { return generators_; }
  void add(SubsetMask generator);

  /// Copy with duplicate generators removed, first occurrence kept.
  GeneratorFamily normalized() const;

 private:
  SpacePtr space_;
  std::vector<SubsetMask> generators_;
};

}  // namespace sigatoms
