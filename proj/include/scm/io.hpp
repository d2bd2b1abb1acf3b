#pragma once

#include <iosfwd>
#include <string>

#include "scm/poset.hpp"
#include "scm/sr_ideal.hpp"

namespace scm {

/// Parse failure with 1-based line/column position for CLI reporting.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& message, int line_no, int col_no)
        : std::runtime_error("line " + std::to_string(line_no) + ", column " +
                             std::to_string(col_no) + ": " + message),
          line(line_no),
          column(col_no) {}
};

/// Facet-list format: one facet per line, vertex ids separated by single
/// spaces; a line holding only `*` is the empty facet; an optional header
/// `ground N` declares the ground set {1..N} (default: the union of the
/// listed vertices); `#` starts a comment.
SimplicialComplex parse_complex(const std::string& text);
std::string format_complex(const SimplicialComplex& cx);

/// Poset format: header `elements a b c ...`, then one cover per line
/// written `a < b`; `#` starts a comment.  Element tokens are arbitrary
/// words, mapped to dense integer ids in header order.
struct NamedPoset {
    FinitePoset poset;
    std::vector<std::string> labels; // id -> token
};
NamedPoset parse_poset(const std::string& text);
std::string format_poset(const FinitePoset& p,
                         const std::vector<std::string>& labels = {});

/// Squarefree-ideal format: one generator support per line, same token
/// syntax as facet lists (`ground N` header, `*` for the empty support).
SquarefreeIdeal parse_ideal(const std::string& text);
std::string format_ideal(const SquarefreeIdeal& ideal);

/// Reads a whole file; throws std::runtime_error when unreadable.
std::string read_file(const std::string& path);

/// True when the text looks like the poset format (first significant
/// line starts with `elements`).
bool looks_like_poset(const std::string& text);

} // namespace scm
