// Finite sets, total maps between them, and the finite limits and colimits
// that everything else is assembled from.
//
// A FinSet is an immutable, sorted list of distinct tokens (see token.hpp).
// Copies share storage. A FinMap is a total function stored as an index
// table into its codomain; two maps are equal iff domain, codomain and table
// agree, so the many on-the-nose equalities checked elsewhere are literal.

#ifndef CYLTQFT_FINSET_HPP_
#define CYLTQFT_FINSET_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cyltqft {

class FinSet {
 public:
  FinSet();

  /// Sorts `elements`. Throws InputError on duplicates or malformed tokens.
  explicit FinSet(std::vector<std::string> elements);
  FinSet(std::initializer_list<std::string> elements);

  /// Like the constructor but skips the token grammar check; for tokens the
  /// library produced itself.
  static FinSet from_tokens(std::vector<std::string> elements);

  /// {"0", "1", ..., "n-1"}.
  static FinSet range(std::size_t n);

  std::size_t size() const { return elems_->size(); }
  bool empty() const { return elems_->empty(); }
  const std::string& operator[](std::size_t i) const { return (*elems_)[i]; }
  std::span<const std::string> elements() const { return *elems_; }
  auto begin() const { return elems_->begin(); }
  auto end() const { return elems_->end(); }

  std::optional<std::size_t> find(std::string_view token) const;
  bool contains(std::string_view token) const { return find(token).has_value(); }
  /// Throws InputError if absent.
  std::size_t index_of(std::string_view token) const;

  friend bool operator==(const FinSet& a, const FinSet& b);

 private:
  struct Sorted {};
  FinSet(Sorted, std::vector<std::string> sorted);
  std::shared_ptr<const std::vector<std::string>> elems_;

  friend FinSet subset(const FinSet&, std::span<const std::size_t>);
};

/// Elements at the given (strictly increasing) indices.
FinSet subset(const FinSet& s, std::span<const std::size_t> indices);

class FinMap {
 public:
  FinMap() = default;
  /// `table[i]` is the codomain index of the image of `dom[i]`.
  FinMap(FinSet dom, FinSet cod, std::vector<std::size_t> table);

  /// Throws InputError unless every domain token has exactly one image in
  /// `cod` and no key falls outside `dom`.
  static FinMap from_table(FinSet dom, FinSet cod,
                           const std::map<std::string, std::string>& table);

  static FinMap identity(const FinSet& s);

  /// Builds a map from an index function.
  template <typename F>
  static FinMap tabulate(FinSet dom, FinSet cod, F&& f) {
    std::vector<std::size_t> t(dom.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = f(i);
    return FinMap(std::move(dom), std::move(cod), std::move(t));
  }

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  std::span<const std::size_t> table() const { return table_; }

  std::size_t operator()(std::size_t i) const { return table_[i]; }
  const std::string& operator()(std::string_view x) const;

  /// Same table viewed with a structurally equal codomain/domain.
  FinMap with_cod(const FinSet& cod) const;

  friend bool operator==(const FinMap& a, const FinMap& b);

 private:
  FinSet dom_;
  FinSet cod_;
  std::vector<std::size_t> table_;
};

/// g after f. Throws InputError unless f.cod == g.dom.
FinMap compose(const FinMap& g, const FinMap& f);

/// Composite of a path listed in application order: path[0] is applied
/// first. Throws InputError on an empty or non-composable path.
FinMap compose_path(std::span<const FinMap> path);

bool is_injective(const FinMap& f);
bool is_surjective(const FinMap& f);
bool is_bijective(const FinMap& f);

/// Throws InputError unless f is a bijection.
FinMap inverse(const FinMap& f);

/// Indices (sorted) of the elements of f.cod hit by f.
std::vector<std::size_t> image_indices(const FinMap& f);

/// How the tokens of a limit are printed.
enum class PairStyle {
  kTuple,  // "(a,b)"
  kChain,  // "[a|b]" with chain parts of a and b spliced in
};

/// Carrier of a binary fiber product or product, with its two projections.
class PairSet {
 public:
  PairSet() = default;

  const FinSet& carrier() const { return carrier_; }
  const FinMap& left() const { return left_; }
  const FinMap& right() const { return right_; }
  std::size_t size() const { return carrier_.size(); }

  /// Carrier index of the pair (a, b), given as indices into the factor sets.
  std::optional<std::size_t> find(std::size_t a, std::size_t b) const;
  std::size_t at(std::size_t a, std::size_t b) const;

 private:
  friend PairSet fiber_product(const FinMap&, const FinMap&, PairStyle);
  FinSet carrier_;
  FinMap left_;
  FinMap right_;
  std::size_t right_size_ = 0;
  std::vector<std::uint64_t> keys_;   // a * |B| + b, sorted
  std::vector<std::size_t> slots_;    // carrier index for keys_[k]
};

/// {(a, b) : f(a) = g(b)}. Throws InputError if f.cod != g.cod.
PairSet fiber_product(const FinMap& f, const FinMap& g,
                      PairStyle style = PairStyle::kTuple);

/// Cartesian product A x B with tuple tokens.
PairSet product(const FinSet& a, const FinSet& b);

/// Tagged disjoint union "0:a", "1:b" with its two injections.
struct TaggedUnion {
  FinSet carrier;
  FinMap inl;
  FinMap inr;
};
TaggedUnion disjoint_union(const FinSet& a, const FinSet& b);

/// The unique map A + B -> C restricting to f and g.
FinMap copair(const TaggedUnion& u, const FinMap& f, const FinMap& g);

/// Quotient of B by the equivalence generated by f(a) ~ g(a). The returned
/// surjection sends each element to the least element of its class.
FinMap coequalizer(const FinMap& f, const FinMap& g);

/// (x, y) |-> (f x, g y) between products. Throws InputError on mismatch.
FinMap product_map(const PairSet& from, const PairSet& to, const FinMap& f,
                   const FinMap& g);

/// d |-> (f d, g d) into an existing pair set. Returns nullopt (and the
/// offending domain index in `witness`) if some image pair is missing.
std::optional<FinMap> pair_into(const PairSet& target, const FinMap& f,
                                const FinMap& g,
                                std::size_t* witness = nullptr);

struct CommutationReport {
  bool pass = true;
  std::string witness;  // domain element where the paths disagree
  std::string lhs;
  std::string rhs;
};

/// Compares two composable paths pointwise. Throws InputError if either path
/// is not composable or they do not share domain and codomain.
CommutationReport commutes(std::span<const FinMap> path1,
                           std::span<const FinMap> path2);
CommutationReport commutes(const FinMap& lhs, const FinMap& rhs);

}  // namespace cyltqft

#endif  // CYLTQFT_FINSET_HPP_
