#include "fan.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "cone.hpp"

namespace fanmat::fans {

namespace {

std::string set_str(const std::vector<int>& s) {  // 1-based for messages
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

cones::RationalCone column_cone(const IntMatrix& V, const std::vector<int>& idx) {
  return cones::dd_from_generators(V.select_cols(idx).transposed(), V.rows());
}

}  // namespace

Fan validate_fan(const IntMatrix& V, std::vector<std::vector<int>> max_cones) {
  const std::size_t n = V.rows(), m = V.cols();
  if (la::rank(V) < n) fail(Errc::rank_deficient, "fan matrix must have full row rank");
  if (max_cones.empty()) fail(Errc::parse, "fan has no maximal cones");

  for (auto& c : max_cones) {
    if (c.empty()) fail(Errc::parse, "empty maximal cone");
    std::sort(c.begin(), c.end());
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 0 || c[i] >= int(m))
        fail(Errc::index_out_of_range,
             "ray index " + std::to_string(c[i] + 1) + " outside 1.." + std::to_string(m));
      if (i > 0 && c[i] == c[i - 1])
        fail(Errc::parse, "repeated ray index " + std::to_string(c[i] + 1) + " in cone");
    }
  }
  std::sort(max_cones.begin(), max_cones.end());
  max_cones.erase(std::unique(max_cones.begin(), max_cones.end()), max_cones.end());

  for (const auto& a : max_cones)
    for (const auto& b : max_cones)
      if (&a != &b && subset_of(a, b))
        fail(Errc::not_maximal, "cone " + set_str(a) + " is contained in cone " + set_str(b));

  for (const auto& c : max_cones)
    if (la::rank(V.select_cols(c)) < c.size())
      fail(Errc::not_simplicial, "cone " + set_str(c) + " has dependent rays");

  std::map<std::vector<int>, cones::RationalCone> cache;
  auto cone_of = [&](const std::vector<int>& idx) -> const cones::RationalCone& {
    auto it = cache.find(idx);
    if (it == cache.end()) it = cache.emplace(idx, column_cone(V, idx)).first;
    return it->second;
  };
  for (std::size_t i = 0; i < max_cones.size(); ++i)
    for (std::size_t j = i + 1; j < max_cones.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(max_cones[i].begin(), max_cones[i].end(), max_cones[j].begin(),
                            max_cones[j].end(), std::back_inserter(common));
      if (cones::intersect(cone_of(max_cones[i]), cone_of(max_cones[j])) != cone_of(common))
        fail(Errc::bad_intersection, "cones " + set_str(max_cones[i]) + " and " +
                                         set_str(max_cones[j]) +
                                         " do not intersect in their common face");
    }

  return Fan{V, std::move(max_cones)};
}

bool is_complete(const Fan& f) {
  const std::size_t n = f.n();
  for (const auto& c : f.max_cones)
    if (c.size() != n) return false;
  std::map<std::vector<int>, int> ridge_count;
  for (const auto& c : f.max_cones)
    for (std::size_t drop = 0; drop < c.size(); ++drop) {
      std::vector<int> ridge;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (i != drop) ridge.push_back(c[i]);
      ++ridge_count[ridge];
    }
  for (const auto& [ridge, cnt] : ridge_count)
    if (cnt != 2) return false;
  return true;
}

SquarefreeMonomialIdeal irrelevant_ideal(const Fan& f) {
  SquarefreeMonomialIdeal ideal;
  ideal.num_vars = f.m();
  for (const auto& c : f.max_cones) {
    std::vector<int> comp;
    std::size_t k = 0;
    for (int i = 0; i < int(f.m()); ++i) {
      if (k < c.size() && c[k] == i)
        ++k;
      else
        comp.push_back(i);
    }
    ideal.supports.push_back(std::move(comp));
  }
  // minimalize: drop supports that contain another one
  std::sort(ideal.supports.begin(), ideal.supports.end());
  ideal.supports.erase(std::unique(ideal.supports.begin(), ideal.supports.end()),
                       ideal.supports.end());
  std::vector<std::vector<int>> minimal;
  for (const auto& s : ideal.supports) {
    bool keep = true;
    for (const auto& t : ideal.supports)
      if (&s != &t && subset_of(t, s)) {
        keep = false;
        break;
      }
    if (keep) minimal.push_back(s);
  }
  ideal.supports = std::move(minimal);
  return ideal;
}

Fan fan_from_irrelevant(const IntMatrix& V, const SquarefreeMonomialIdeal& ideal) {
  if (ideal.num_vars != V.cols())
    fail(Errc::dimension, "ideal variable count does not match the fan matrix");
  std::vector<std::vector<int>> cones;
  for (const auto& s : ideal.supports) {
    std::vector<int> comp;
    std::size_t k = 0;
    for (int i = 0; i < int(V.cols()); ++i) {
      if (k < s.size() && s[k] == i)
        ++k;
      else
        comp.push_back(i);
    }
    cones.push_back(std::move(comp));
  }
  return validate_fan(V, std::move(cones));
}

namespace {

int greedy_hitting_bound(std::vector<std::vector<int>> supports, int num_vars) {
  int size = 0;
  while (!supports.empty()) {
    std::vector<int> freq(num_vars, 0);
    for (const auto& s : supports)
      for (int v : s) ++freq[v];
    int best = 0;
    for (int v = 1; v < num_vars; ++v)
      if (freq[v] > freq[best]) best = v;
    std::erase_if(supports, [&](const std::vector<int>& s) {
      return std::binary_search(s.begin(), s.end(), best);
    });
    ++size;
  }
  return size;
}

// count of pairwise disjoint supports: any hitting set needs one var per member
int disjoint_lower_bound(const std::vector<std::vector<int>>& supports) {
  std::vector<const std::vector<int>*> taken;
  for (const auto& s : supports) {
    bool disjoint = true;
    for (const auto* t : taken) {
      std::vector<int> tmp;
      std::set_intersection(s.begin(), s.end(), t->begin(), t->end(), std::back_inserter(tmp));
      if (!tmp.empty()) {
        disjoint = false;
        break;
      }
    }
    if (disjoint) taken.push_back(&s);
  }
  return int(taken.size());
}

void hitting_branch(const std::vector<std::vector<int>>& remaining, int chosen, int& best) {
  if (remaining.empty()) {
    best = std::min(best, chosen);
    return;
  }
  if (chosen + disjoint_lower_bound(remaining) >= best) return;
  // branch on the smallest remaining support
  const std::vector<int>* pick = &remaining[0];
  for (const auto& s : remaining)
    if (s.size() < pick->size()) pick = &s;
  for (int v : *pick) {
    std::vector<std::vector<int>> rest;
    for (const auto& s : remaining)
      if (!std::binary_search(s.begin(), s.end(), v)) rest.push_back(s);
    hitting_branch(rest, chosen + 1, best);
  }
}

}  // namespace

int irrelevant_locus_codim(const SquarefreeMonomialIdeal& ideal) {
  if (ideal.supports.empty()) fail(Errc::empty_ideal, "ideal has no generators");
  for (const auto& s : ideal.supports)
    if (s.empty()) return int(ideal.num_vars) + 1;  // unit ideal, empty locus
  int best = greedy_hitting_bound(ideal.supports, int(ideal.num_vars));
  hitting_branch(ideal.supports, 0, best);
  return best;
}

bool k_neighborly_primal(const Fan& f, int k) {
  const int m = int(f.m());
  if (k < 1 || k > m) fail(Errc::index_out_of_range, "k must lie in 1..m");
  std::vector<std::uint64_t> cone_masks;
  for (const auto& c : f.max_cones) {
    std::uint64_t mask = 0;
    for (int i : c) mask |= std::uint64_t(1) << i;
    cone_masks.push_back(mask);
  }
  auto covered = [&](std::uint64_t s) {
    for (std::uint64_t cm : cone_masks)
      if ((s & ~cm) == 0) return true;
    return false;
  };
  // depth-first over k-subsets; a partial subset in no cone settles the answer
  auto rec = [&](auto&& self, int start, std::uint64_t mask, int cnt) -> bool {
    if (cnt == k) return true;
    for (int j = start; m - j >= k - cnt; ++j) {
      std::uint64_t ext = mask | (std::uint64_t(1) << j);
      if (!covered(ext)) return false;
      if (!self(self, j + 1, ext, cnt + 1)) return false;
    }
    return true;
  };
  return rec(rec, 0, 0, 0);
}

}  // namespace fanmat::fans
