#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "graphpoly/errors.hpp"

namespace graphpoly::detail {

inline void check_id(const std::string& id, const char* part) {
  if (id.empty()) throw InvalidGraph(std::string("empty id in ") + part);
  for (char c : id)
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
      throw InvalidGraph("id '" + id + "' contains whitespace");
}

inline std::map<std::string, std::size_t> index_ids(
    const std::vector<std::string>& ids, const char* part) {
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    check_id(ids[i], part);
    if (!pos.emplace(ids[i], i).second)
      throw InvalidGraph("duplicate id '" + ids[i] + "' in " + part);
  }
  return pos;
}

inline void check_parts_disjoint(const std::map<std::string, std::size_t>& a,
                                 const std::map<std::string, std::size_t>& b) {
  for (const auto& [id, i] : a)
    if (b.count(id)) throw InvalidGraph("id '" + id + "' appears in both parts");
}

// `m` maps every element of `from` to a distinct element of `to`, and
// nothing else.
inline bool is_bijection(const std::map<std::string, std::string>& m,
                         const std::vector<std::string>& from,
                         const std::vector<std::string>& to) {
  if (m.size() != from.size() || from.size() != to.size()) return false;
  std::set<std::string> target(to.begin(), to.end());
  std::set<std::string> hit;
  for (const auto& id : from) {
    auto it = m.find(id);
    if (it == m.end() || !target.count(it->second)) return false;
    if (!hit.insert(it->second).second) return false;
  }
  return true;
}

}  // namespace graphpoly::detail
