#pragma once

#include "stylic/presentation.hpp"
#include "stylic/rewrite.hpp"
#include "stylic/table.hpp"

namespace stylic {

// The finite monoid presented by p, as an explicit table.  Elements are
// identified by confluent normal form when completion succeeds (engine
// "kb"); otherwise the congruence-closure oracle is used transparently
// (engine "closure").  Throws resource_error when max_elements is hit.
MonoidTable enumerate(const Presentation& p, const Limits& lim = {});

// Independent oracle: equivalence classes of all words up to a length bound
// under single-relation replacement, self-certified before a table is
// emitted.  Bounds are deepened up to lim.max_word_length; if the class
// structure never certifies as closed, throws resource_error advising a
// larger bound.  Shares no code with completion.
MonoidTable brute_force_closure(const Presentation& p, const Limits& lim = {});

}  // namespace stylic
