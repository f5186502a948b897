#include "prism/emit.hpp"

#include "prism/classify.hpp"

#include <algorithm>
#include <sstream>

namespace prism {

namespace {

std::string quoted(const std::string& text)
{
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

} // namespace

std::string to_dot(const Poset& poset, const std::function<NodeMarks(int)>& marks)
{
    std::ostringstream out;
    out << "digraph hasse {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=circle];\n";
    out << "  edge [dir=none];\n";
    for (int e = 0; e < poset.size(); ++e) {
        out << "  n" << e << " [label=" << quoted(poset.label(e));
        if (marks) {
            const NodeMarks m = marks(e);
            if (m.boolean)
                out << ", penwidth=3";
            if (m.prism)
                out << ", peripheries=2";
        }
        out << "];\n";
    }
    for (const auto& [lo, hi] : poset.covers())
        out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
}

std::string ideal_to_dot(const BruhatIdeal& ideal)
{
    return to_dot(ideal.poset, [&](int e) {
        const Permutation& u = ideal.elements[static_cast<std::size_t>(e)];
        const ReducedWordVerdict v = classify_by_reduced_word(u);
        std::vector<int> letters = v.word.letters();
        std::sort(letters.begin(), letters.end());
        const bool boolean = std::adjacent_find(letters.begin(), letters.end()) == letters.end();
        return NodeMarks{boolean, v.is_prism};
    });
}

} // namespace prism
