#include "cyltqft/finset.hpp"

#include <algorithm>
#include <numeric>

#include "cyltqft/error.hpp"
#include "cyltqft/token.hpp"

namespace cyltqft {

namespace {

std::shared_ptr<const std::vector<std::string>> empty_storage() {
  static const auto kEmpty = std::make_shared<const std::vector<std::string>>();
  return kEmpty;
}

void sort_and_check(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end());
  auto dup = std::adjacent_find(v.begin(), v.end());
  if (dup != v.end()) throw InputError("duplicate element '" + *dup + "'");
}

}  // namespace

FinSet::FinSet() : elems_(empty_storage()) {}

FinSet::FinSet(std::vector<std::string> elements) {
  for (const auto& e : elements) {
    if (!token::is_valid(e)) throw InputError("malformed token '" + e + "'");
  }
  sort_and_check(elements);
  elems_ = std::make_shared<const std::vector<std::string>>(std::move(elements));
}

FinSet::FinSet(std::initializer_list<std::string> elements)
    : FinSet(std::vector<std::string>(elements)) {}

FinSet::FinSet(Sorted, std::vector<std::string> sorted)
    : elems_(std::make_shared<const std::vector<std::string>>(std::move(sorted))) {}

FinSet FinSet::from_tokens(std::vector<std::string> elements) {
  sort_and_check(elements);
  return FinSet(Sorted{}, std::move(elements));
}

FinSet FinSet::range(std::size_t n) {
  std::vector<std::string> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(std::to_string(i));
  return from_tokens(std::move(v));
}

std::optional<std::size_t> FinSet::find(std::string_view token) const {
  auto it = std::lower_bound(elems_->begin(), elems_->end(), token,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == elems_->end() || *it != token) return std::nullopt;
  return static_cast<std::size_t>(it - elems_->begin());
}

std::size_t FinSet::index_of(std::string_view token) const {
  auto i = find(token);
  if (!i) throw InputError("element '" + std::string(token) + "' not in set");
  return *i;
}

bool operator==(const FinSet& a, const FinSet& b) {
  return a.elems_ == b.elems_ || *a.elems_ == *b.elems_;
}

FinSet subset(const FinSet& s, std::span<const std::size_t> indices) {
  std::vector<std::string> v;
  v.reserve(indices.size());
  for (std::size_t i : indices) v.push_back(s[i]);
  return FinSet(FinSet::Sorted{}, std::move(v));
}

// ---------------------------------------------------------------------------

FinMap::FinMap(FinSet dom, FinSet cod, std::vector<std::size_t> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (table_.size() != dom_.size()) {
    throw InputError("map table has " + std::to_string(table_.size()) +
                     " entries for a domain of size " + std::to_string(dom_.size()));
  }
  for (std::size_t t : table_) {
    if (t >= cod_.size()) throw InputError("map image index out of range");
  }
}

FinMap FinMap::from_table(FinSet dom, FinSet cod,
                          const std::map<std::string, std::string>& table) {
  std::vector<std::size_t> t(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    auto it = table.find(dom[i]);
    if (it == table.end()) throw InputError("map has no image for '" + dom[i] + "'");
    auto j = cod.find(it->second);
    if (!j) {
      throw InputError("image '" + it->second + "' of '" + dom[i] + "' is not in the codomain");
    }
    t[i] = *j;
  }
  if (table.size() != dom.size()) {
    for (const auto& [k, v] : table) {
      if (!dom.contains(k)) throw InputError("map key '" + k + "' is not in the domain");
    }
  }
  return FinMap(std::move(dom), std::move(cod), std::move(t));
}

FinMap FinMap::identity(const FinSet& s) {
  std::vector<std::size_t> t(s.size());
  std::iota(t.begin(), t.end(), std::size_t{0});
  return FinMap(s, s, std::move(t));
}

const std::string& FinMap::operator()(std::string_view x) const {
  return cod_[table_[dom_.index_of(x)]];
}

FinMap FinMap::with_cod(const FinSet& cod) const {
  if (!(cod == cod_)) throw InputError("with_cod: codomains differ");
  return FinMap(dom_, cod, table_);
}

bool operator==(const FinMap& a, const FinMap& b) {
  return a.table_ == b.table_ && a.dom_ == b.dom_ && a.cod_ == b.cod_;
}

FinMap compose(const FinMap& g, const FinMap& f) {
  if (!(f.cod() == g.dom())) throw InputError("compose: codomain/domain mismatch");
  std::vector<std::size_t> t(f.dom().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g(f(i));
  return FinMap(f.dom(), g.cod(), std::move(t));
}

FinMap compose_path(std::span<const FinMap> path) {
  if (path.empty()) throw InputError("empty path");
  FinMap acc = path[0];
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!(acc.cod() == path[i].dom())) {
      throw InputError("path is not composable at step " + std::to_string(i));
    }
    acc = compose(path[i], acc);
  }
  return acc;
}

bool is_injective(const FinMap& f) {
  std::vector<char> seen(f.cod().size(), 0);
  for (std::size_t t : f.table()) {
    if (seen[t]) return false;
    seen[t] = 1;
  }
  return true;
}

bool is_surjective(const FinMap& f) {
  return image_indices(f).size() == f.cod().size();
}

bool is_bijective(const FinMap& f) {
  return f.dom().size() == f.cod().size() && is_injective(f);
}

FinMap inverse(const FinMap& f) {
  if (!is_bijective(f)) throw InputError("inverse: map is not a bijection");
  std::vector<std::size_t> t(f.cod().size());
  for (std::size_t i = 0; i < f.dom().size(); ++i) t[f(i)] = i;
  return FinMap(f.cod(), f.dom(), std::move(t));
}

std::vector<std::size_t> image_indices(const FinMap& f) {
  std::vector<char> hit(f.cod().size(), 0);
  for (std::size_t t : f.table()) hit[t] = 1;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < hit.size(); ++i) {
    if (hit[i]) out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> PairSet::find(std::size_t a, std::size_t b) const {
  std::uint64_t key = static_cast<std::uint64_t>(a) * right_size_ + b;
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return std::nullopt;
  return slots_[static_cast<std::size_t>(it - keys_.begin())];
}

std::size_t PairSet::at(std::size_t a, std::size_t b) const {
  auto k = find(a, b);
  if (!k) throw InputError("pair is not in the fiber product");
  return *k;
}

PairSet fiber_product(const FinMap& f, const FinMap& g, PairStyle style) {
  if (!(f.cod() == g.cod())) throw InputError("fiber_product: codomain mismatch");
  const FinSet& a = f.dom();
  const FinSet& b = g.dom();

  // Bucket B by image so the scan is proportional to the output size.
  std::vector<std::vector<std::size_t>> by_image(f.cod().size());
  for (std::size_t j = 0; j < b.size(); ++j) by_image[g(j)].push_back(j);

  struct Entry {
    std::string token;
    std::size_t a, b;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j : by_image[f(i)]) {
      std::string tok = style == PairStyle::kTuple ? token::pair(a[i], b[j])
                                                   : token::chain(a[i], b[j]);
      entries.push_back({std::move(tok), i, j});
    }
  }
  // Entries are generated in (a, b) index order; keys_ relies on that.
  std::vector<std::size_t> order(entries.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return entries[x].token < entries[y].token;
  });
  std::vector<std::size_t> slot_of(entries.size());
  std::vector<std::string> tokens;
  tokens.reserve(entries.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    slot_of[order[k]] = k;
    if (k > 0 && entries[order[k]].token == entries[order[k - 1]].token) {
      throw InputError("fiber_product: flattened token collision '" +
                       entries[order[k]].token + "'");
    }
  }
  std::vector<std::size_t> lt(entries.size()), rt(entries.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Entry& e = entries[order[k]];
    tokens.push_back(e.token);
    lt[k] = e.a;
    rt[k] = e.b;
  }

  PairSet out;
  out.carrier_ = FinSet::from_tokens(std::move(tokens));
  out.left_ = FinMap(out.carrier_, a, std::move(lt));
  out.right_ = FinMap(out.carrier_, b, std::move(rt));
  out.right_size_ = b.size();
  out.keys_.reserve(entries.size());
  out.slots_.reserve(entries.size());
  for (std::size_t x = 0; x < entries.size(); ++x) {
    out.keys_.push_back(static_cast<std::uint64_t>(entries[x].a) * b.size() + entries[x].b);
    out.slots_.push_back(slot_of[x]);
  }
  return out;
}

PairSet product(const FinSet& a, const FinSet& b) {
  const FinSet point = FinSet::from_tokens({"*"});
  return fiber_product(FinMap(a, point, std::vector<std::size_t>(a.size(), 0)),
                       FinMap(b, point, std::vector<std::size_t>(b.size(), 0)));
}

TaggedUnion disjoint_union(const FinSet& a, const FinSet& b) {
  std::vector<std::string> v;
  v.reserve(a.size() + b.size());
  for (const auto& x : a) v.push_back(token::tagged(0, x));
  for (const auto& y : b) v.push_back(token::tagged(1, y));
  FinSet carrier = FinSet::from_tokens(std::move(v));
  FinMap inl = FinMap::tabulate(a, carrier, [&](std::size_t i) {
    return carrier.index_of(token::tagged(0, a[i]));
  });
  FinMap inr = FinMap::tabulate(b, carrier, [&](std::size_t i) {
    return carrier.index_of(token::tagged(1, b[i]));
  });
  return {std::move(carrier), std::move(inl), std::move(inr)};
}

FinMap copair(const TaggedUnion& u, const FinMap& f, const FinMap& g) {
  if (!(f.dom() == u.inl.dom()) || !(g.dom() == u.inr.dom()) || !(f.cod() == g.cod())) {
    throw InputError("copair: shape mismatch");
  }
  std::vector<std::size_t> t(u.carrier.size());
  for (std::size_t i = 0; i < f.dom().size(); ++i) t[u.inl(i)] = f(i);
  for (std::size_t i = 0; i < g.dom().size(); ++i) t[u.inr(i)] = g(i);
  return FinMap(u.carrier, f.cod(), std::move(t));
}

FinMap coequalizer(const FinMap& f, const FinMap& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) {
    throw InputError("coequalizer: maps must share domain and codomain");
  }
  const std::size_t n = f.cod().size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < f.dom().size(); ++i) {
    std::size_t x = root(f(i));
    std::size_t y = root(g(i));
    // The smaller index is the canonical (least) representative.
    if (x < y) parent[y] = x;
    else if (y < x) parent[x] = y;
  }
  std::vector<std::size_t> reps;
  std::vector<std::size_t> rep_slot(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (root(i) == i) {
      rep_slot[i] = reps.size();
      reps.push_back(i);
    }
  }
  FinSet q = subset(f.cod(), reps);
  std::vector<std::size_t> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = rep_slot[root(i)];
  return FinMap(f.cod(), std::move(q), std::move(t));
}

FinMap product_map(const PairSet& from, const PairSet& to, const FinMap& f,
                   const FinMap& g) {
  if (!(f.dom() == from.left().cod()) || !(g.dom() == from.right().cod()) ||
      !(f.cod() == to.left().cod()) || !(g.cod() == to.right().cod())) {
    throw InputError("product_map: shape mismatch");
  }
  return FinMap::tabulate(from.carrier(), to.carrier(), [&](std::size_t k) {
    return to.at(f(from.left()(k)), g(from.right()(k)));
  });
}

std::optional<FinMap> pair_into(const PairSet& target, const FinMap& f,
                                const FinMap& g, std::size_t* witness) {
  if (!(f.dom() == g.dom()) || !(f.cod() == target.left().cod()) ||
      !(g.cod() == target.right().cod())) {
    throw InputError("pair_into: shape mismatch");
  }
  std::vector<std::size_t> t(f.dom().size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto k = target.find(f(i), g(i));
    if (!k) {
      if (witness) *witness = i;
      return std::nullopt;
    }
    t[i] = *k;
  }
  return FinMap(f.dom(), target.carrier(), std::move(t));
}

CommutationReport commutes(const FinMap& lhs, const FinMap& rhs) {
  if (!(lhs.dom() == rhs.dom()) || !(lhs.cod() == rhs.cod())) {
    throw InputError("commutes: paths do not share domain and codomain");
  }
  CommutationReport r;
  for (std::size_t i = 0; i < lhs.dom().size(); ++i) {
    if (lhs(i) != rhs(i)) {
      r.pass = false;
      r.witness = lhs.dom()[i];
      r.lhs = lhs.cod()[lhs(i)];
      r.rhs = rhs.cod()[rhs(i)];
      break;
    }
  }
  return r;
}

CommutationReport commutes(std::span<const FinMap> path1,
                           std::span<const FinMap> path2) {
  return commutes(compose_path(path1), compose_path(path2));
}

}  // namespace cyltqft
