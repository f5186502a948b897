#include "prism/classify.hpp"

#include "prism/errors.hpp"

#include <algorithm>

namespace prism {

MethodSet MethodSet::parse(std::string_view text)
{
    MethodSet out{false, false, false};
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos)
            end = text.size();
        const std::string_view tok = text.substr(start, end - start);
        if (tok == "rw")
            out.reduced_word = true;
        else if (tok == "pattern")
            out.pattern = true;
        else if (tok == "poset")
            out.poset = true;
        else if (tok == "all")
            out = MethodSet{};
        else
            throw invalid_input("unknown method '" + std::string(tok) + "' (expected rw, pattern, poset)");
        start = end + 1;
    }
    return out;
}

std::string MethodSet::to_string() const
{
    std::string out;
    auto add = [&](bool on, const char* name) {
        if (!on)
            return;
        if (!out.empty())
            out += ',';
        out += name;
    };
    add(reduced_word, "rw");
    add(pattern, "pattern");
    add(poset, "poset");
    return out;
}

ReducedWordVerdict classify_by_reduced_word(const Permutation& w)
{
    Word s = some_reduced_word(w);
    IndexSet unconfined;
    for (int i : support(w))
        if (is_unconfined(s, i))
            unconfined.push_back(i);
    const bool prism = !unconfined.empty();
    return {prism, std::move(unconfined), std::move(s)};
}

PatternVerdict classify_by_pattern(const Permutation& w, PatternScan scan)
{
    PatternVerdict out{false, {}};
    for (int i = 1; i < w.size(); ++i)
        for (const auto& c : prism_catalog(i)) {
            if (scan == PatternScan::first) {
                if (auto occ = first_occurrence(w, c)) {
                    out.witnesses.push_back({i, c.name(), std::move(*occ)});
                    out.is_prism = true;
                    return out;
                }
                continue;
            }
            for (auto& occ : occurrences(w, c))
                out.witnesses.push_back({i, c.name(), std::move(occ)});
        }
    out.is_prism = !out.witnesses.empty();
    return out;
}

PosetVerdict classify_by_poset(const Permutation& w, int max_elements)
{
    auto witness = prism_oracle(w, max_elements);
    const bool prism = witness.has_value();
    return {prism, std::move(witness)};
}

BooleanDegree boolean_degree(const Permutation& w)
{
    const int d = static_cast<int>(unconfined_letters(w).size());
    Permutation core = w;
    int deletions = 0;
    for (IndexSet free = unconfined_letters(core); !free.empty(); free = unconfined_letters(core)) {
        if (deletions > w.size())
            break;
        core = delete_letter_perm(core, free.front());
        ++deletions;
    }
    if (deletions != d || !unconfined_letters(core).empty())
        throw verification_failure("boolean_degree(" + to_string(w) + "): " + std::to_string(deletions) +
                                   " deletions for " + std::to_string(d) + " unconfined letters");
    return {d, std::move(core)};
}

bool verify_prism_iso(const Permutation& w, int i, int max_elements)
{
    const IndexSet free = unconfined_letters(w);
    if (!std::binary_search(free.begin(), free.end(), i))
        throw invalid_input("verify_prism_iso: " + std::to_string(i) + " is not unconfined in " + to_string(w));
    const Permutation v = delete_letter_perm(w, i);
    const BruhatIdeal upper = bruhat_ideal(w, max_elements);
    const BruhatIdeal lower = bruhat_ideal(v, max_elements);
    const Poset target = product(chain2(), lower.poset);
    if (target.size() != upper.poset.size())
        return false;

    const int nv = lower.poset.size();
    std::vector<int> phi(upper.elements.size());
    std::vector<bool> hit(static_cast<std::size_t>(target.size()), false);
    for (std::size_t k = 0; k < upper.elements.size(); ++k) {
        const Permutation& u = upper.elements[k];
        const IndexSet supp = support(u);
        const bool has_i = std::binary_search(supp.begin(), supp.end(), i);
        if (has_i && !appears_once_in_all(u, i))
            return false;
        const auto image = lower.index_of(has_i ? delete_letter_perm(u, i) : u);
        if (!image)
            return false;
        const int slot = (has_i ? nv : 0) + *image;
        if (hit[static_cast<std::size_t>(slot)])
            return false;
        hit[static_cast<std::size_t>(slot)] = true;
        phi[k] = slot;
    }
    // A bijection carrying covers into covers, with equally many covers on
    // both sides, is an isomorphism of Hasse diagrams.
    if (upper.poset.cover_count() != target.cover_count())
        return false;
    for (const auto& [lo, hi] : upper.poset.covers())
        if (!target.covered_by(phi[static_cast<std::size_t>(lo)], phi[static_cast<std::size_t>(hi)]))
            return false;
    return true;
}

namespace {

bool has_repeated_letter(const Word& s)
{
    std::vector<int> letters = s.letters();
    std::sort(letters.begin(), letters.end());
    return std::adjacent_find(letters.begin(), letters.end()) != letters.end();
}

void require_agreement(bool expected, bool got, const Permutation& w, const char* what, const char* method)
{
    if (expected != got)
        throw verification_failure(std::string("classifier disagreement on ") + to_string(w) + ": " + what +
                                   " differs under " + method);
}

} // namespace

ClassificationRecord classify(const Permutation& w, MethodSet methods, int max_elements)
{
    ReducedWordVerdict rw = classify_by_reduced_word(w);
    const BooleanDegree degree = boolean_degree(w);
    const bool boolean = !has_repeated_letter(rw.word);
    const bool prism = rw.is_prism;

    ClassificationRecord record{w, boolean, prism, rw.unconfined, degree.d, degree.core, methods,
                                std::nullopt, std::nullopt, std::nullopt};
    if (methods.reduced_word)
        record.by_reduced_word = std::move(rw);
    if (methods.pattern) {
        record.by_pattern = classify_by_pattern(w);
        require_agreement(prism, record.by_pattern->is_prism, w, "prism", "pattern");
        require_agreement(boolean, is_boolean_by_pattern(w), w, "boolean", "pattern");
    }
    if (methods.poset) {
        record.by_poset = classify_by_poset(w, max_elements);
        require_agreement(prism, record.by_poset->is_prism, w, "prism", "poset");
        require_agreement(boolean, is_boolean_ideal(w, max_elements), w, "boolean", "poset");
    }
    if (boolean && !w.is_identity() && !prism)
        throw verification_failure("non-identity boolean permutation " + to_string(w) + " classified as non-prism");
    return record;
}

} // namespace prism
