#pragma once

// Bounded search through the conjugacy class of a word. Moves are cyclic
// rotations, free cancellation, and substitution of a two-letter factor by an
// equal two-letter factor derived from a2 a1 = a3 a2 = a1 a3. No move
// lengthens a word. This is a best-effort search, not a conjugacy decision
// procedure.

#include <cstddef>

#include "braid3/word.hpp"

namespace braid3 {

struct RepresentativeResult {
    BraidWord word;
    /// The node budget ran out before the search space was exhausted.
    bool budget_exhausted = false;
    std::size_t nodes_explored = 0;
};

/// Returns the input (cyclically reduced) unless a strictly shorter conjugate
/// is found; among shortest found, the shortlex-least rotation-canonical one.
RepresentativeResult shortest_cyclic_representative(const BraidWord& w, std::size_t budget);

struct ConjugacySearch {
    bool found = false;
    bool budget_exhausted = false;
    std::size_t nodes_explored = 0;
};

/// Searches for target from source using the same moves.
ConjugacySearch search_conjugate(const BraidWord& source, const BraidWord& target, std::size_t budget);

}  // namespace braid3
