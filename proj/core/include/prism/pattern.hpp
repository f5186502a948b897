#ifndef PRISM_PATTERN_HPP
#define PRISM_PATTERN_HPP

#include "prism/permutation.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace prism {

// Grid cell (a,b) of a size-k pattern: the open box between the a-th and
// (a+1)-th chosen positions and between the b-th and (b+1)-th smallest chosen
// values. Indices run over [0,k]; 0 and k+1 are the sentinels 0 and n+1.
struct Cell {
    int a;
    int b;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

class MeshPattern {
public:
    // Throws invalid_input when a cell lies outside [0,k]^2.
    MeshPattern(Permutation pattern, std::set<Cell> mesh = {});

    const Permutation& pattern() const { return pattern_; }
    const std::set<Cell>& mesh() const { return mesh_; }
    int size() const { return pattern_.size(); }

private:
    Permutation pattern_;
    std::set<Cell> mesh_;
};

// A mesh pattern with some columns pinned to absolute positions of the host
// and some value ranks pinned to absolute values. Keys are 1-based column
// indices / value ranks of the pattern.
class CalibratedMeshPattern {
public:
    // Throws invalid_input when a key lies outside [1,k] or the pinned targets
    // are not strictly increasing along their keys.
    CalibratedMeshPattern(MeshPattern base, std::map<int, int> pos_cal = {}, std::map<int, int> val_cal = {},
                          std::string name = {});

    const MeshPattern& base() const { return base_; }
    const std::map<int, int>& pos_cal() const { return pos_cal_; }
    const std::map<int, int>& val_cal() const { return val_cal_; }
    const std::string& name() const { return name_; }
    int size() const { return base_.size(); }

private:
    MeshPattern base_;
    std::map<int, int> pos_cal_;
    std::map<int, int> val_cal_;
    std::string name_;
};

struct Occurrence {
    std::vector<int> positions; // increasing
    std::vector<int> values;    // w at those positions
    friend bool operator==(const Occurrence&, const Occurrence&) = default;
    friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

CalibratedMeshPattern classical(const Permutation& p);

// All occurrences, lexicographic by positions. Empty when k > n or a pin
// points outside [1,n].
std::vector<Occurrence> occurrences(const Permutation& w, const CalibratedMeshPattern& c);
bool contains(const Permutation& w, const CalibratedMeshPattern& c);
std::optional<Occurrence> first_occurrence(const Permutation& w, const CalibratedMeshPattern& c);

// The eight calibrated 21 / 4123 / 2341 / 3142 / 2413 patterns characterizing
// prisms at letter i, named "P1".."P8".
std::vector<CalibratedMeshPattern> prism_catalog(int i);

// The four calibrated 21 patterns with a single full band, named "A1".."A4".
std::vector<CalibratedMeshPattern> proposition_catalog(int i);

// Looks up "P1".."P8" or "A1".."A4"; throws invalid_input for anything else.
CalibratedMeshPattern catalog_pattern(const std::string& name, int i);

// 321- and 3412-avoidance.
bool is_boolean_by_pattern(const Permutation& w);

} // namespace prism

#endif
