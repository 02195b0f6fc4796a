#include "cyltqft/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace cyltqft {

std::vector<std::vector<std::size_t>> semigroup_tables(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t none = n;  // unassigned cell
  std::vector<std::size_t> t(n * n, none);
  auto consistent = [&]() {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t xy = t[x * n + y];
        if (xy == none) continue;
        for (std::size_t z = 0; z < n; ++z) {
          std::size_t yz = t[y * n + z];
          if (yz == none) continue;
          std::size_t l = t[xy * n + z], r = t[x * n + yz];
          if (l != none && r != none && l != r) return false;
        }
      }
    }
    return true;
  };
  std::function<void(std::size_t)> fill = [&](std::size_t cell) {
    if (cell == n * n) {
      out.push_back(t);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      t[cell] = v;
      if (consistent()) fill(cell + 1);
    }
    t[cell] = none;
  };
  fill(0);
  return out;
}

std::vector<std::vector<std::size_t>> semigroup_families(std::size_t n) {
  std::vector<std::function<std::size_t(std::size_t, std::size_t)>> ops{
      [](std::size_t a, std::size_t) { return a; },
      [](std::size_t, std::size_t b) { return b; },
      [](std::size_t, std::size_t) { return std::size_t{0}; },
      [n](std::size_t a, std::size_t b) { return (a + b) % n; },
      [](std::size_t a, std::size_t b) { return std::max(a, b); },
      [](std::size_t a, std::size_t b) { return std::min(a, b); },
  };
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) return {{}};
  for (const auto& op : ops) {
    std::vector<std::size_t> t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) t[a * n + b] = op(a, b);
    }
    out.push_back(std::move(t));
  }
  return out;
}

FiberedSemiGroup fibered_from_tables(const std::vector<std::size_t>& fibers,
                                     const std::vector<const std::vector<std::size_t>*>& tables) {
  std::vector<std::string> base_names, total_names;
  std::vector<std::size_t> fiber_of, offset;
  for (std::size_t f = 0; f < fibers.size(); ++f) {
    base_names.push_back("x" + std::to_string(f));
    offset.push_back(fiber_of.size());
    for (std::size_t k = 0; k < fibers[f]; ++k) fiber_of.push_back(f);
  }
  for (std::size_t i = 0; i < fiber_of.size(); ++i) total_names.push_back("e" + std::to_string(i));
  FinSet base = FinSet::from_tokens(base_names), total = FinSet::from_tokens(total_names);
  // Numeric position of each token, since "e10" sorts before "e2".
  std::vector<std::size_t> pos(total.size());
  for (std::size_t i = 0; i < total.size(); ++i) pos[i] = std::stoul(total[i].substr(1));
  std::vector<std::size_t> idx(total.size());
  for (std::size_t i = 0; i < total.size(); ++i) idx[pos[i]] = i;
  FinMap proj = FinMap::tabulate(total, base, [&](std::size_t i) {
    return base.index_of("x" + std::to_string(fiber_of[pos[i]]));
  });
  return FiberedSemiGroup::tabulate(proj, [&](std::size_t a, std::size_t b) {
    std::size_t f = fiber_of[pos[a]], n = fibers[f];
    std::size_t la = pos[a] - offset[f], lb = pos[b] - offset[f];
    return idx[offset[f] + (*tables[f])[la * n + lb]];
  });
}

std::vector<FiberedSemiGroup> enumerate_fsgrps(std::size_t max_total, std::size_t max_base,
                                               std::size_t exhaustive_fiber) {
  std::vector<std::vector<std::vector<std::size_t>>> ops(max_total + 1);
  for (std::size_t k = 0; k <= max_total; ++k) {
    ops[k] = k <= exhaustive_fiber ? semigroup_tables(k) : semigroup_families(k);
  }
  std::vector<FiberedSemiGroup> out;
  std::vector<std::size_t> fibers;
  std::function<void(std::size_t, std::size_t)> sizes = [&](std::size_t bound,
                                                            std::size_t left) {
    if (!fibers.empty()) {
      // Every choice of one table per fiber.
      std::vector<std::size_t> pick(fibers.size(), 0);
      std::vector<const std::vector<std::size_t>*> tables(fibers.size());
      while (true) {
        for (std::size_t f = 0; f < fibers.size(); ++f) tables[f] = &ops[fibers[f]][pick[f]];
        out.push_back(fibered_from_tables(fibers, tables));
        std::size_t f = 0;
        while (f < fibers.size() && ++pick[f] == ops[fibers[f]].size()) pick[f++] = 0;
        if (f == fibers.size()) break;
      }
    }
    if (fibers.size() == max_base) return;
    for (std::size_t k = 0; k <= std::min(bound, left); ++k) {
      fibers.push_back(k);
      sizes(k, left - k);
      fibers.pop_back();
    }
  };
  sizes(max_total, max_total);
  return out;
}

std::vector<CobObject> enumerate_objects(std::size_t max_components) {
  std::vector<CobObject> out;
  for (std::size_t n = 0; n <= max_components; ++n) {
    for (std::size_t p = n + 1; p-- > 0;) out.push_back(canonical_object(p, n - p));
  }
  return out;
}

namespace {

// Every permutation of positions that only moves components among the
// like-signed components of the same end, as a list of position maps.
std::vector<std::vector<std::size_t>> like_signed_perms(const std::vector<std::size_t>& blocks) {
  std::vector<std::vector<std::size_t>> out{{}};
  std::size_t start = 0;
  for (std::size_t b : blocks) {
    std::vector<std::size_t> p(b);
    std::iota(p.begin(), p.end(), start);
    std::vector<std::vector<std::size_t>> next;
    do {
      for (const auto& prefix : out) {
        auto q = prefix;
        q.insert(q.end(), p.begin(), p.end());
        next.push_back(std::move(q));
      }
    } while (std::next_permutation(p.begin(), p.end()));
    out = std::move(next);
    start += b;
  }
  return out;
}

// Sizes of the like-signed blocks of the positions source + target.
std::vector<std::size_t> sign_blocks(const CobObject& a, const CobObject& b) {
  std::vector<std::size_t> out;
  for (const CobObject* s : {&a, &b}) {
    std::size_t plus = 0;
    for (std::size_t i = 0; i < s->size(); ++i) plus += s->positive(i);
    out.push_back(plus);
    out.push_back(s->size() - plus);
  }
  return out;
}

// Positions are listed in the numeric order of component names; FinSet
// order may differ once there are ten or more components.
std::vector<std::size_t> numeric_order(const CobObject& s) {
  std::vector<std::size_t> idx(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) idx[std::stoul(s.components[i].substr(1))] = i;
  return idx;
}

std::vector<std::size_t> normalize(const std::vector<std::size_t>& r) {
  std::vector<std::size_t> relabel(r.size() + 1, SIZE_MAX), out(r.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (relabel[r[i]] == SIZE_MAX) relabel[r[i]] = next++;
    out[i] = relabel[r[i]];
  }
  return out;
}

Cobordism build(const CobObject& a, const CobObject& b, const std::vector<std::size_t>& rgs,
                std::size_t blocks, std::size_t closed) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < blocks + closed; ++k) names.push_back("r" + std::to_string(k));
  FinSet regs = FinSet::from_tokens(names);
  std::vector<std::size_t> ia = numeric_order(a), ib = numeric_order(b);
  std::vector<std::size_t> src(a.size()), tgt(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) src[ia[i]] = regs.index_of(names[rgs[i]]);
  for (std::size_t j = 0; j < b.size(); ++j) {
    tgt[ib[j]] = regs.index_of(names[rgs[a.size() + j]]);
  }
  return Cobordism(a, b, regs, FinMap(a.components, regs, src), FinMap(b.components, regs, tgt));
}

}  // namespace

std::vector<Cobordism> enumerate_cobordisms(std::size_t max_components, std::size_t max_regions) {
  std::vector<CobObject> objs = enumerate_objects(max_components);
  std::vector<Cobordism> out;
  for (const auto& a : objs) {
    for (const auto& b : objs) {
      std::size_t n = a.size() + b.size();
      auto perms = like_signed_perms(sign_blocks(a, b));
      // Restricted growth strings with at most max_regions blocks.
      std::vector<std::size_t> r(n, 0);
      std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t i, std::size_t used) {
        if (i == n) {
          std::vector<std::size_t> moved(n);
          for (const auto& g : perms) {
            for (std::size_t k = 0; k < n; ++k) moved[g[k]] = r[k];
            if (normalize(moved) < r) return;
          }
          for (std::size_t closed = 0; used + closed <= max_regions; ++closed) {
            out.push_back(build(a, b, r, used, closed));
          }
          return;
        }
        for (std::size_t v = 0; v <= used && v < max_regions; ++v) {
          r[i] = v;
          grow(i + 1, std::max(used, v + 1));
        }
      };
      grow(0, 0);
    }
  }
  return out;
}

std::vector<ObjectDiffeo> automorphisms(const CobObject& s) {
  std::vector<ObjectDiffeo> out;
  std::vector<std::size_t> idx = numeric_order(s);
  for (const auto& g : like_signed_perms(sign_blocks(s, CobObject()))) {
    std::vector<std::size_t> t(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) t[idx[k]] = idx[g[k]];
    ObjectDiffeo d{s, s, FinMap(s.components, s.components, t)};
    if (is_valid(d)) out.push_back(std::move(d));
  }
  return out;
}

std::vector<CobDiffeo> automorphisms(const Cobordism& m) {
  std::vector<CobDiffeo> out;
  const std::size_t a = m.source.size(), n = a + m.target.size();
  std::vector<std::size_t> ia = numeric_order(m.source), ib = numeric_order(m.target);
  auto region_at = [&](std::size_t k) { return k < a ? m.in_src(ia[k]) : m.in_tgt(ib[k - a]); };
  std::vector<char> bounded(m.regions.size(), 0);
  for (std::size_t k = 0; k < n; ++k) bounded[region_at(k)] = 1;
  std::vector<std::size_t> closed;
  for (std::size_t r = 0; r < m.regions.size(); ++r) {
    if (!bounded[r]) closed.push_back(r);
  }
  for (const auto& g : like_signed_perms(sign_blocks(m.source, m.target))) {
    std::vector<std::size_t> reg(m.regions.size(), SIZE_MAX);
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) {
      std::size_t from = region_at(k), to = region_at(g[k]);
      if (reg[from] == SIZE_MAX) reg[from] = to;
      else ok = reg[from] == to;
    }
    if (!ok) continue;
    std::vector<std::size_t> targets = closed;
    do {
      for (std::size_t c = 0; c < closed.size(); ++c) reg[closed[c]] = targets[c];
      FinMap rm(m.regions, m.regions, reg);
      if (!is_bijective(rm)) break;
      std::vector<std::size_t> sm(a), tm(m.target.size());
      for (std::size_t k = 0; k < a; ++k) sm[ia[k]] = ia[g[k]];
      for (std::size_t k = a; k < n; ++k) tm[ib[k - a]] = ib[g[k] - a];
      out.push_back(CobDiffeo{m, m, FinMap(m.source.components, m.source.components, sm), rm,
                              FinMap(m.target.components, m.target.components, tm)});
    } while (std::next_permutation(targets.begin(), targets.end()));
  }
  return out;
}

TheoryUniverse theory_universe(std::size_t max_components, std::size_t max_regions) {
  TheoryUniverse u;
  u.objects = enumerate_objects(max_components);
  u.cobordisms = enumerate_cobordisms(max_components, max_regions);
  for (const auto& s : u.objects) {
    for (auto& d : automorphisms(s)) u.object_diffeos.push_back(std::move(d));
  }
  for (const auto& m : u.cobordisms) {
    for (auto& d : automorphisms(m)) u.diffeos.push_back(std::move(d));
  }
  return u;
}

FunctorUniverse functor_universe(std::size_t max_components, std::size_t max_regions) {
  TheoryUniverse t = theory_universe(max_components, max_regions);
  FunctorUniverse u;
  u.objects = std::move(t.objects);
  u.cobordisms = std::move(t.cobordisms);
  u.object_diffeos = std::move(t.object_diffeos);
  u.diffeos = std::move(t.diffeos);
  return u;
}

}  // namespace cyltqft
