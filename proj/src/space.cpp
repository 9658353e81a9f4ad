#include "sigatoms/space.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "sigatoms/error.hpp"

namespace sigatoms {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

}  // namespace

FiniteSpace::FiniteSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], i);
}

SpacePtr FiniteSpace::make(std::vector<std::string> labels, std::size_t limit) {
  if (labels.size() > limit) {
    throw Error(ErrorKind::GuardExceeded, "sample space has " + std::to_string(labels.size()) +
                                              " elements, limit is " + std::to_string(limit));
  }
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) {
      throw Error(ErrorKind::InvalidSpace, "element " + std::to_string(i) + " has an empty label");
    }
    if (!seen.emplace(labels[i], i).second) {
      throw Error(ErrorKind::InvalidSpace, "duplicate label '" + labels[i] + "'");
    }
  }
  return SpacePtr(new FiniteSpace(std::move(labels)));
}

SpacePtr FiniteSpace::make_indexed(std::size_t size, std::size_t limit) {
  std::vector<std::string> labels;
  labels.reserve(size);
  for (std::size_t i = 0; i < size; ++i) labels.push_back(std::to_string(i));
  return make(std::move(labels), limit);
}

std::optional<std::size_t> FiniteSpace::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* what) {
  if (!same_space(a, b)) {
    throw Error(ErrorKind::SpaceMismatch, std::string(what) + ": operands belong to different spaces");
  }
}

SubsetMask::SubsetMask(SpacePtr space)
    : space_(std::move(space)), words_(word_count(space_->size()), 0) {}

SubsetMask SubsetMask::full(SpacePtr space) {
  SubsetMask m(std::move(space));
  std::fill(m.words_.begin(), m.words_.end(), ~std::uint64_t{0});
  m.clear_padding();
  return m;
}

SubsetMask SubsetMask::of_indices(SpacePtr space, const std::vector<std::size_t>& indices) {
  SubsetMask m(std::move(space));
  for (auto i : indices) m.insert(i);
  return m;
}

SubsetMask SubsetMask::of_labels(SpacePtr space, const std::vector<std::string>& labels) {
  SubsetMask m(space);
  for (const auto& label : labels) {
    auto index = space->index_of(label);
    if (!index) throw Error(ErrorKind::InvalidArgument, "unknown element label '" + label + "'");
    m.insert(*index);
  }
  return m;
}

bool SubsetMask::contains(std::size_t index) const {
  if (index >= universe_size()) return false;
  return (words_[index / kWordBits] >> (index % kWordBits)) & 1U;
}

void SubsetMask::insert(std::size_t index) {
  if (index >= universe_size()) {
    throw Error(ErrorKind::InvalidArgument, "element index " + std::to_string(index) + " out of range");
  }
  words_[index / kWordBits] |= std::uint64_t{1} << (index % kWordBits);
}

void SubsetMask::erase(std::size_t index) {
  if (index >= universe_size()) return;
  words_[index / kWordBits] &= ~(std::uint64_t{1} << (index % kWordBits));
}

std::size_t SubsetMask::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool SubsetMask::is_empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool SubsetMask::is_full() const { return count() == universe_size(); }

std::optional<std::size_t> SubsetMask::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return std::nullopt;
}

std::vector<std::size_t> SubsetMask::members() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits != 0) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

SubsetMask SubsetMask::complement() const {
  SubsetMask m = *this;
  for (auto& w : m.words_) w = ~w;
  m.clear_padding();
  return m;
}

SubsetMask& SubsetMask::operator|=(const SubsetMask& rhs) {
  check(rhs);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= rhs.words_[i];
  return *this;
}

SubsetMask& SubsetMask::operator&=(const SubsetMask& rhs) {
  check(rhs);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= rhs.words_[i];
  return *this;
}

SubsetMask& SubsetMask::operator-=(const SubsetMask& rhs) {
  check(rhs);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~rhs.words_[i];
  return *this;
}

bool SubsetMask::is_subset_of(const SubsetMask& other) const {
  check(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool SubsetMask::intersects(const SubsetMask& other) const {
  check(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::size_t SubsetMask::hash() const {
  std::size_t h = words_.size();
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::vector<std::string> SubsetMask::member_labels() const {
  std::vector<std::string> out;
  for (auto i : members()) out.push_back(space_->label(i));
  return out;
}

std::string SubsetMask::to_string() const {
  std::string out = "{";
  bool first_member = true;
  for (auto i : members()) {
    if (!first_member) out += ",";
    out += space_->label(i);
    first_member = false;
  }
  return out + "}";
}

void SubsetMask::check(const SubsetMask& other) const {
  if (space_ != other.space_) require_same_space(space_, other.space_, "subset operation");
}

void SubsetMask::clear_padding() {
  auto tail = universe_size() % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << tail) - 1;
}

GeneratorFamily::GeneratorFamily(SpacePtr space, std::vector<SubsetMask> generators)
    : space_(std::move(space)) {
  for (auto& g : generators) add(std::move(g));
}

void GeneratorFamily::add(SubsetMask generator) {
  require_same_space(space_, generator.space(), "generator family");
  generators_.push_back(std::move(generator));
}

GeneratorFamily GeneratorFamily::normalized() const {
  GeneratorFamily out(space_);
  for (const auto& g : generators_) {
    if (std::find(out.generators_.begin(), out.generators_.end(), g) == out.generators_.end()) {
      out.generators_.push_back(g);
    }
  }
  return out;
}

}  // namespace sigatoms
