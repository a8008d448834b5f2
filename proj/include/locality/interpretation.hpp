// Finite interpretations over at most 64 domain elements. Element sets are
// bit masks; a role extension stores one successor mask per element.
#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace locality {

using ElementSet = std::uint64_t;

inline constexpr unsigned kMaxDomain = 64;

inline ElementSet full_set(unsigned size) { return size >= 64 ? ~ElementSet{0} : ((ElementSet{1} << size) - 1); }
inline bool contains(ElementSet s, unsigned e) { return (s >> e) & 1u; }
inline unsigned cardinality(ElementSet s) { return static_cast<unsigned>(std::popcount(s)); }

class RoleRelation {
 public:
  RoleRelation() = default;
  explicit RoleRelation(unsigned size) : succ_(size, 0) {}

  void add(unsigned from, unsigned to) { succ_.at(from) |= ElementSet{1} << to; }
  bool has(unsigned from, unsigned to) const { return contains(succ_.at(from), to); }
  ElementSet successors(unsigned from) const { return succ_.at(from); }
  unsigned size() const { return static_cast<unsigned>(succ_.size()); }

  std::vector<std::pair<unsigned, unsigned>> pairs() const {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned x = 0; x < succ_.size(); ++x)
      for (unsigned y = 0; y < succ_.size(); ++y)
        if (has(x, y)) out.emplace_back(x, y);
    return out;
  }

  friend bool operator==(const RoleRelation&, const RoleRelation&) = default;

 private:
  std::vector<ElementSet> succ_;
};

struct Interpretation {
  unsigned domain_size = 1;
  std::map<std::string, ElementSet> concept_ext;
  std::map<std::string, RoleRelation> role_ext;
  std::map<std::string, unsigned> individual_ext;

  explicit Interpretation(unsigned size = 1) : domain_size(size) {
    if (size == 0 || size > kMaxDomain) throw std::invalid_argument("domain size must be in 1..64");
  }

  ElementSet domain() const { return full_set(domain_size); }

  void set_concept(const std::string& name, ElementSet ext) { concept_ext[name] = ext & domain(); }
  RoleRelation& role(const std::string& name) {
    auto it = role_ext.find(name);
    if (it == role_ext.end()) it = role_ext.emplace(name, RoleRelation(domain_size)).first;
    return it->second;
  }
  void set_individual(const std::string& name, unsigned e) {
    if (e >= domain_size) throw std::out_of_range("individual outside the domain");
    individual_ext[name] = e;
  }

  friend bool operator==(const Interpretation&, const Interpretation&) = default;
};

}  // namespace locality
