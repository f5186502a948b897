#ifndef PRISM_EMIT_HPP
#define PRISM_EMIT_HPP

#include "prism/bruhat.hpp"
#include "prism/poset.hpp"

#include <functional>
#include <string>

namespace prism {

struct NodeMarks {
    bool boolean = false; // drawn with a heavy ring (penwidth=3)
    bool prism = false;   // drawn with a double ring (peripheries=2)
};

// Hasse diagram in Graphviz DOT, bottom to top. Node k is "n<k>" labeled with
// the element label; output depends only on the poset and marks.
std::string to_dot(const Poset& poset, const std::function<NodeMarks(int)>& marks = {});

// Hasse diagram of B(w) with boolean and prism elements marked.
std::string ideal_to_dot(const BruhatIdeal& ideal);

} // namespace prism

#endif
