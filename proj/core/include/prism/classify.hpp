#ifndef PRISM_CLASSIFY_HPP
#define PRISM_CLASSIFY_HPP

#include "prism/bruhat.hpp"
#include "prism/pattern.hpp"
#include "prism/permutation.hpp"
#include "prism/word.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prism {

// Which independent prism classifiers to run.
struct MethodSet {
    bool reduced_word = true;
    bool pattern = true;
    bool poset = true;

    // Comma-separated subset of "rw", "pattern", "poset" (or "all").
    static MethodSet parse(std::string_view text);
    std::string to_string() const;
};

struct ReducedWordVerdict {
    bool is_prism;
    IndexSet unconfined;
    Word word; // the word the unconfined letters were read from
};

// Prism iff some letter is unconfined in a reduced word.
ReducedWordVerdict classify_by_reduced_word(const Permutation& w);

struct PatternWitness {
    int letter;
    std::string pattern_id;
    Occurrence occurrence;
};

struct PatternVerdict {
    bool is_prism;
    std::vector<PatternWitness> witnesses;
};

enum class PatternScan { first, all };

// Prism iff some catalog pattern occurs for some i in [1, n-1]. Witnesses are
// ordered by (i, catalog order, occurrence order).
PatternVerdict classify_by_pattern(const Permutation& w, PatternScan scan = PatternScan::all);

struct PosetVerdict {
    bool is_prism;
    std::optional<PrismWitness> witness;
};

// Prism iff B(w) splits off a 2-chain factor; see prism_oracle.
PosetVerdict classify_by_poset(const Permutation& w, int max_elements = default_ideal_cap);

struct BooleanDegree {
    int d;
    Permutation core;
};

// d = number of unconfined letters; core = w with them deleted one by one,
// smallest first. Throws verification_failure if the deletion count differs
// from d or the core still has an unconfined letter.
BooleanDegree boolean_degree(const Permutation& w);

// Builds u -> (0, u) when i is outside supp(u) and u -> (1, u with i deleted)
// otherwise, and checks that it is a bijection B(w) -> chain2 x B(v) carrying
// covers onto covers. Throws invalid_input when i is not unconfined in w.
bool verify_prism_iso(const Permutation& w, int i, int max_elements = default_ideal_cap);

struct ClassificationRecord {
    Permutation perm;
    bool is_boolean;
    bool is_prism;
    IndexSet unconfined;
    int degree_d;
    Permutation core;
    MethodSet methods;
    std::optional<ReducedWordVerdict> by_reduced_word;
    std::optional<PatternVerdict> by_pattern;
    std::optional<PosetVerdict> by_poset;
};

// Runs the requested classifiers and cross-checks every verdict (prism and
// boolean) they produce. The decomposition fields always come from the
// reduced-word machinery. Any disagreement throws verification_failure.
ClassificationRecord classify(const Permutation& w, MethodSet methods = {},
                              int max_elements = default_ideal_cap);

} // namespace prism

#endif
