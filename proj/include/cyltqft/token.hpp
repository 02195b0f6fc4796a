// Canonical element tokens.
//
// Every element of every finite set in the library is a string token drawn
// from a small grammar, so that sets built along different construction
// routes compare equal exactly when they are structurally the same:
//
//   token  := atom | tuple | tagged | chain
//   atom   := one or more characters outside  ( ) [ ] | , :  and controls
//   tuple  := "(" [ token { "," token } ] ")"      products, solution tuples
//   tagged := digits ":" token                      disjoint-union summands
//   chain  := "[" token "|" token { "|" token } "]" flattened composites
//
// Chains never nest: building a chain from chain parts splices them, which
// is what makes horizontal composition of bimodules strictly associative.

#ifndef CYLTQFT_TOKEN_HPP_
#define CYLTQFT_TOKEN_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyltqft::token {

bool is_atom(std::string_view s);

/// True iff `s` parses as exactly one token of the grammar above.
bool is_valid(std::string_view s);

std::string tuple(std::span<const std::string> parts);
std::string pair(std::string_view a, std::string_view b);
std::string tagged(std::size_t tag, std::string_view inner);

/// Tag and inner token of "tag:inner". Throws InputError if `s` is not tagged.
std::pair<std::size_t, std::string> split_tag(std::string_view s);

/// Flattened concatenation; chain parts of `a` and `b` are spliced in.
std::string chain(std::string_view a, std::string_view b);

/// Top-level parts of a chain token, or `{s}` if `s` is not a chain.
std::vector<std::string> chain_parts(std::string_view s);

/// Components of a tuple token. Throws InputError if `s` is not a tuple.
std::vector<std::string> tuple_parts(std::string_view s);

}  // namespace cyltqft::token

#endif  // CYLTQFT_TOKEN_HPP_
